"""Command-line entry points: bench sweeps, instance files, single runs."""

from __future__ import annotations

import argparse
import json
import sys

from .bench import ExperimentConfig, run_experiment, summarize
from .consensus import parse_topology
from .model import load_instance, save_instance
from .objective import generate_instance
from .bench import _run_algo


def _csv_ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x)


def _csv_floats(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x)


def _csv_strs(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtalloc",
        description="Decentralized task-allocation simulator and benchmark harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="run a Monte-Carlo sweep and write a CSV")
    bench.add_argument("--tasks", type=int, default=200)
    bench.add_argument("--agents", type=_csv_ints, default=(10, 20, 30, 40, 50),
                       help="comma-separated fleet sizes, e.g. 10,20,50")
    bench.add_argument("--trials", type=int, default=100)
    bench.add_argument("--epsilon", type=_csv_floats, default=(0.05,),
                       help="comma-separated threshold decay parameters")
    bench.add_argument("--algo", type=_csv_strs, default=("dtta", "ldtta", "sga"),
                       help="comma-separated: dtta,ldtta,sga,central")
    bench.add_argument("--topology", default="complete",
                       help="complete | ring | random:p")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out", default="results.csv")
    bench.add_argument("--wall-ms", action="store_true",
                       help="record wall-clock times (breaks byte-reproducibility)")
    bench.add_argument("--summary", action="store_true",
                       help="print per-group means and ratios after the sweep")

    gen = sub.add_parser("gen-instance", help="write a random instance file")
    gen.add_argument("--tasks", type=int, required=True)
    gen.add_argument("--agents", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)

    one = sub.add_parser("run-one", help="run one solver on an instance file")
    one.add_argument("--instance", required=True)
    one.add_argument("--algo", required=True, choices=["dtta", "ldtta", "sga", "central"])
    one.add_argument("--epsilon", type=float, default=0.05)
    one.add_argument("--topology", default="complete")
    one.add_argument("--seed", type=int, default=0, help="seed for random topologies")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "bench":
        cfg = ExperimentConfig(
            n_tasks=args.tasks,
            agent_counts=args.agents,
            trials=args.trials,
            epsilons=args.epsilon,
            algos=args.algo,
            topology=args.topology,
            seed=args.seed,
            out=args.out,
            record_wall_ms=args.wall_ms,
        )
        rows = run_experiment(cfg)
        print(f"wrote {len(rows)} rows to {args.out}")
        if args.summary:
            with_sga = "sga" in args.algo
            if with_sga:
                print(summarize(rows).to_string(index=False))
            else:
                print("(no sga rows; skipping ratio summary)")
        return 0

    if args.command == "gen-instance":
        inst = generate_instance(args.tasks, args.agents, args.seed)
        save_instance(inst, args.out)
        print(f"wrote instance with {args.tasks} tasks, {args.agents} agents to {args.out}")
        return 0

    if args.command == "run-one":
        inst = load_instance(args.instance)
        topo = parse_topology(args.topology, inst.n_agents, seed=args.seed)
        eps = None if args.algo == "sga" else args.epsilon
        result = _run_algo(args.algo, inst, topo, eps)
        m = result.metrics
        print(
            json.dumps(
                {
                    "algo": args.algo,
                    "value": m.value,
                    "evals_total": m.evals_total,
                    "evals_per_agent_max": m.evals_per_agent_max,
                    "consensus_steps": m.consensus_steps,
                    "threshold_levels": m.threshold_levels,
                    "allocation": result.allocation,
                },
                indent=2,
            )
        )
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
