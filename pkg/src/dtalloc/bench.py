"""Monte-Carlo benchmark harness.

Runs allocator sweeps over randomized instances and emits one CSV row
per solver run. Trial seeds derive from (master seed, trial index)
only, so every algorithm and epsilon sees the same instances and the
comparisons are paired. Identical configs reproduce identical files;
wall-clock measurement is off by default because it would break that.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd

from .allocators import RunResult, run_central, run_dtta, run_ldtta, run_sga
from .consensus import Topology, parse_topology
from .model import Instance
from .objective import generate_instance

CSV_COLUMNS = [
    "trial",
    "algo",
    "n_agents",
    "n_tasks",
    "epsilon",
    "seed",
    "value",
    "evals_total",
    "evals_per_agent_max",
    "consensus_steps",
    "threshold_levels",
    "wall_ms",
]

ALGOS = ("dtta", "ldtta", "sga", "central")


@dataclass
class ExperimentConfig:
    n_tasks: int = 200
    agent_counts: tuple[int, ...] = (10, 20, 30, 40, 50)
    trials: int = 100
    epsilons: tuple[float, ...] = (0.05,)
    algos: tuple[str, ...] = ("dtta", "ldtta", "sga")
    topology: str = "complete"
    seed: int = 0
    out: str | Path | None = None
    record_wall_ms: bool = False  # keeps default output byte-reproducible

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        for eps in self.epsilons:
            if not 0.0 < eps < 1.0:
                raise ValueError(f"epsilon {eps} outside (0, 1)")
        for algo in self.algos:
            if algo not in ALGOS:
                raise ValueError(f"unknown algo {algo!r}; choose from {ALGOS}")


def trial_seed(master_seed: int, trial: int) -> int:
    """Algorithm-independent per-trial instance seed."""
    return int(np.random.SeedSequence([master_seed, trial]).generate_state(1)[0])


def _run_algo(
    algo: str, inst: Instance, topo: Topology, epsilon: float | None
) -> RunResult:
    if algo == "sga":
        return run_sga(inst, topo)
    if algo == "dtta":
        return run_dtta(inst, topo, epsilon)
    if algo == "ldtta":
        return run_ldtta(inst, topo, epsilon)
    if algo == "central":
        return run_central(inst, epsilon)
    raise ValueError(f"unknown algo {algo!r}")


def run_experiment(cfg: ExperimentConfig) -> list[dict]:
    """Execute the sweep; returns rows and writes them to cfg.out if set."""
    rows: list[dict] = []
    for n_agents in cfg.agent_counts:
        topo = parse_topology(cfg.topology, n_agents, seed=cfg.seed + n_agents)
        for trial in range(cfg.trials):
            seed = trial_seed(cfg.seed, trial)
            inst = generate_instance(cfg.n_tasks, n_agents, seed)
            for algo in cfg.algos:
                eps_list = [None] if algo == "sga" else list(cfg.epsilons)
                for eps in eps_list:
                    t0 = time.perf_counter()
                    result = _run_algo(algo, inst, topo, eps)
                    wall_ms = (time.perf_counter() - t0) * 1e3
                    m = result.metrics
                    rows.append(
                        {
                            "trial": trial,
                            "algo": algo,
                            "n_agents": n_agents,
                            "n_tasks": cfg.n_tasks,
                            "epsilon": "" if eps is None else repr(eps),
                            "seed": seed,
                            "value": repr(m.value),
                            "evals_total": m.evals_total,
                            "evals_per_agent_max": m.evals_per_agent_max,
                            "consensus_steps": m.consensus_steps,
                            "threshold_levels": m.threshold_levels,
                            "wall_ms": repr(round(wall_ms, 3)) if cfg.record_wall_ms else "0.0",
                        }
                    )
    if cfg.out is not None:
        write_rows(rows, cfg.out)
    return rows


def write_rows(rows: list[dict], path: str | Path) -> None:
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def load_rows(path: str | Path) -> pd.DataFrame:
    df = pd.read_csv(path)
    missing = [c for c in CSV_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"results file {path} is missing columns: {missing}")
    return df


def summarize(rows: list[dict] | pd.DataFrame, baseline: str = "sga") -> pd.DataFrame:
    """Per-(algo, n_agents, epsilon) means plus ratios against the baseline.

    Ratios compare mean value, mean total evaluations, and mean
    consensus steps with the baseline algorithm at the same fleet size.
    """
    df = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(rows)
    df = df.copy()
    for col in ("value", "evals_total", "consensus_steps"):
        df[col] = pd.to_numeric(df[col])
    df["epsilon"] = pd.to_numeric(df["epsilon"], errors="coerce")
    grouped = (
        df.groupby(["algo", "n_agents", "epsilon"], dropna=False)
        .agg(
            mean_value=("value", "mean"),
            mean_evals=("evals_total", "mean"),
            mean_steps=("consensus_steps", "mean"),
            runs=("value", "size"),
        )
        .reset_index()
    )
    base = grouped[grouped["algo"] == baseline].set_index("n_agents")
    if base.empty:
        raise ValueError(f"no {baseline!r} rows to use as a baseline")
    out_rows = []
    for _, row in grouped.iterrows():
        n = row["n_agents"]
        if n not in base.index:
            raise ValueError(f"missing {baseline!r} baseline for n_agents={n}")
        b = base.loc[n]
        rec = dict(row)
        rec["value_ratio"] = row["mean_value"] / b["mean_value"]
        rec["evals_ratio"] = row["mean_evals"] / b["mean_evals"]
        rec["steps_ratio"] = row["mean_steps"] / b["mean_steps"]
        out_rows.append(rec)
    return pd.DataFrame(out_rows)
