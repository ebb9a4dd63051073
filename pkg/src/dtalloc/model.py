"""Domain model: problem instances, allocations, evaluation accounting.

An instance is a set of point tasks in a square arena, a fleet of agents
with start positions and per-task fitness factors, and two discount
factors shared by the whole fleet. Task and agent identifiers are dense
0-based integers so the fitness table is a flat matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

TaskId = int
AgentId = int

# Per-agent ordered task lists, indexed by agent id. Order = visit order.
Allocation = list[list[TaskId]]


@dataclass(frozen=True)
class Task:
    x: float
    y: float
    value: float


@dataclass(frozen=True)
class Agent:
    x: float
    y: float
    fitness: tuple[float, ...]


class GroundPair(NamedTuple):
    """One (task, agent) element of the centralized solver's ground set."""

    task: TaskId
    agent: AgentId


@dataclass
class Instance:
    """A task-allocation problem.

    task_xy     (r, 2) task positions in km, inside [0, arena]^2
    task_value  (r,)   importance factors, each in (0, 1]
    agent_xy    (n, 2) agent start positions in km
    fitness     (n, r) task-agent match factors, each in (0, 1]
    lambda_d    distance discount factor in (0, 1]
    lambda_n    task-count discount factor in (0, 1]
    arena       side length of the square arena in km
    """

    task_xy: np.ndarray
    task_value: np.ndarray
    agent_xy: np.ndarray
    fitness: np.ndarray
    lambda_d: float = 0.95
    lambda_n: float = 0.98
    arena: float = 10.0

    def __post_init__(self):
        self.task_xy = np.asarray(self.task_xy, dtype=float)
        self.task_value = np.asarray(self.task_value, dtype=float)
        self.agent_xy = np.asarray(self.agent_xy, dtype=float)
        self.fitness = np.asarray(self.fitness, dtype=float)
        r, n = self.n_tasks, self.n_agents
        if r == 0 or n == 0:
            raise ValueError("instance needs at least one task and one agent")
        if self.task_xy.shape != (r, 2) or self.agent_xy.shape != (n, 2):
            raise ValueError("position arrays must have shape (count, 2)")
        if self.fitness.shape != (n, r):
            raise ValueError(
                f"fitness must be (n_agents, n_tasks) = ({n}, {r}), got {self.fitness.shape}"
            )
        for name, arr in (("task_value", self.task_value), ("fitness", self.fitness)):
            if np.any(arr <= 0.0) or np.any(arr > 1.0):
                raise ValueError(f"{name} entries must lie in (0, 1]")
        for name, lam in (("lambda_d", self.lambda_d), ("lambda_n", self.lambda_n)):
            if not 0.0 < lam <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1]")
        for name, xy in (("task", self.task_xy), ("agent", self.agent_xy)):
            if np.any(xy < 0.0) or np.any(xy > self.arena):
                raise ValueError(f"{name} positions must lie in [0, {self.arena}]^2")

    @property
    def n_tasks(self) -> int:
        return self.task_xy.shape[0]

    @property
    def n_agents(self) -> int:
        return self.agent_xy.shape[0]

    @property
    def tasks(self) -> list[Task]:
        return [
            Task(float(x), float(y), float(v))
            for (x, y), v in zip(self.task_xy, self.task_value)
        ]

    @property
    def agents(self) -> list[Agent]:
        return [
            Agent(float(x), float(y), tuple(float(f) for f in row))
            for (x, y), row in zip(self.agent_xy, self.fitness)
        ]

    def ground_set(self) -> list[GroundPair]:
        """All (task, agent) pairs in task-major order."""
        return [
            GroundPair(j, a)
            for j in range(self.n_tasks)
            for a in range(self.n_agents)
        ]


@dataclass
class EvalCounter:
    """Counts marginal-gain evaluations, per agent and in total."""

    per_agent: np.ndarray

    @classmethod
    def for_agents(cls, n_agents: int) -> "EvalCounter":
        return cls(per_agent=np.zeros(n_agents, dtype=np.int64))

    def add(self, agent: AgentId, count: int = 1) -> None:
        if count < 0:
            raise ValueError("evaluation counts only go up")
        self.per_agent[agent] += count

    @property
    def total(self) -> int:
        return int(self.per_agent.sum())


def _check_ids(alloc: Allocation, inst: Instance) -> None:
    if len(alloc) != inst.n_agents:
        raise ValueError(
            f"allocation has {len(alloc)} agent lists, instance has {inst.n_agents} agents"
        )
    r = inst.n_tasks
    for tasks in alloc:
        for j in tasks:
            if not 0 <= j < r:
                raise ValueError(f"unknown task id {j}")


def is_feasible(alloc: Allocation, inst: Instance) -> bool:
    """True iff the per-agent lists are duplicate-free and pairwise disjoint.

    One task may be carried out by at most one agent; any task may be left
    unassigned. Unknown ids raise.
    """
    _check_ids(alloc, inst)
    seen: set[TaskId] = set()
    for tasks in alloc:
        for j in tasks:
            if j in seen:
                return False
            seen.add(j)
    return True


def save_instance(inst: Instance, path: str | Path) -> None:
    """Write an instance as JSON: {tasks:[{x,y,v}], agents:[{x,y,fitness}], lambda_d, lambda_n, L}."""
    doc = {
        "tasks": [
            {"x": float(x), "y": float(y), "v": float(v)}
            for (x, y), v in zip(inst.task_xy, inst.task_value)
        ],
        "agents": [
            {"x": float(x), "y": float(y), "fitness": [float(f) for f in row]}
            for (x, y), row in zip(inst.agent_xy, inst.fitness)
        ],
        "lambda_d": inst.lambda_d,
        "lambda_n": inst.lambda_n,
        "L": inst.arena,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def load_instance(path: str | Path) -> Instance:
    doc = json.loads(Path(path).read_text())
    try:
        tasks = doc["tasks"]
        agents = doc["agents"]
        return Instance(
            task_xy=np.array([[t["x"], t["y"]] for t in tasks], dtype=float),
            task_value=np.array([t["v"] for t in tasks], dtype=float),
            agent_xy=np.array([[a["x"], a["y"]] for a in agents], dtype=float),
            fitness=np.array([a["fitness"] for a in agents], dtype=float),
            lambda_d=float(doc["lambda_d"]),
            lambda_n=float(doc["lambda_n"]),
            arena=float(doc["L"]),
        )
    except KeyError as exc:
        raise ValueError(f"instance file {path} is missing field {exc}") from exc
