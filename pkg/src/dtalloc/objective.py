"""Surveillance objective and random instance generation.

An agent visits its tasks in list order along straight segments. The
reward collected at the j-th stop is

    fitness * importance * lambda_d ** tau * lambda_n ** sigma

where tau is the path length from the agent's start through all earlier
stops to this task, and sigma is the stop's 1-based position in the
list. An agent's value is the sum of its stop rewards, so appending a
task at the tail changes nothing before it: the append reward IS the
marginal gain. All factors are positive, which makes every marginal
strictly positive, and longer prefixes only shrink a task's reward,
which gives the diminishing-returns behavior the allocators rely on.
"""

from __future__ import annotations

import math

import numpy as np

from .model import AgentId, Allocation, EvalCounter, Instance, TaskId, is_feasible

DEFAULT_ARENA_KM = 10.0
DEFAULT_LAMBDA_D = 0.95
DEFAULT_LAMBDA_N = 0.98
IMPORTANCE_RANGE = (0.6, 1.0)
FITNESS_RANGE = (0.5, 1.0)


def _dist(ax: float, ay: float, bx: float, by: float) -> float:
    # Plain sqrt form, kept identical to the vectorized evaluator so
    # incremental and from-scratch gains agree bit for bit.
    dx = bx - ax
    dy = by - ay
    return math.sqrt(dx * dx + dy * dy)


def path_length(agent: AgentId, ordered_tasks: list[TaskId], inst: Instance) -> float:
    """Polyline length in km: agent start -> task_1 -> ... -> task_k."""
    x, y = inst.agent_xy[agent]
    total = 0.0
    for j in ordered_tasks:
        tx, ty = inst.task_xy[j]
        total += _dist(x, y, tx, ty)
        x, y = tx, ty
    return total


def marginal_gain(
    agent: AgentId,
    task: TaskId,
    current_list: list[TaskId],
    inst: Instance,
    counter: EvalCounter | None = None,
) -> float:
    """Reward of appending `task` to the tail of `current_list`.

    Equals f_a(list + [task]) - f_a(list). Counts as one objective
    evaluation for `agent` when a counter is supplied.
    """
    if task in current_list:
        raise ValueError(f"task {task} is already in the list")
    if counter is not None:
        counter.add(agent, 1)
    tau = path_length(agent, list(current_list) + [task], inst)
    sigma = len(current_list) + 1
    return float(
        inst.fitness[agent, task]
        * inst.task_value[task]
        * inst.lambda_d**tau
        * inst.lambda_n**sigma
    )


def agent_value(agent: AgentId, ordered_tasks: list[TaskId], inst: Instance) -> float:
    """Value of one agent's ordered task list (sum of stop rewards)."""
    if len(set(ordered_tasks)) != len(ordered_tasks):
        raise ValueError("task list contains duplicates")
    x, y = inst.agent_xy[agent]
    tau = 0.0
    total = 0.0
    for sigma, j in enumerate(ordered_tasks, start=1):
        tx, ty = inst.task_xy[j]
        tau += _dist(x, y, tx, ty)
        x, y = tx, ty
        total += (
            inst.fitness[agent, j]
            * inst.task_value[j]
            * inst.lambda_d**tau
            * inst.lambda_n**sigma
        )
    return float(total)


def total_value(alloc: Allocation, inst: Instance) -> float:
    """Fleet value: sum of agent_value over all agents.

    Audit function; recomputes from scratch and never touches counters.
    Raises on infeasible allocations.
    """
    if not is_feasible(alloc, inst):
        raise ValueError("allocation is infeasible: a task appears twice")
    return float(sum(agent_value(a, tasks, inst) for a, tasks in enumerate(alloc)))


def generate_instance(n_tasks: int, n_agents: int, seed: int) -> Instance:
    """Random instance on the default 10 km arena.

    Task importances are uniform on [0.6, 1.0], fitness factors uniform
    on [0.5, 1.0], all positions uniform in the arena. Each quantity is
    drawn from its own child stream of `seed`, so growing the fleet
    leaves task geometry untouched and only extends the agent arrays.
    """
    if n_tasks < 1 or n_agents < 1:
        raise ValueError("n_tasks and n_agents must be >= 1")
    task_pos_rng, task_val_rng, agent_pos_rng, fit_rng = (
        np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(4)
    )
    L = DEFAULT_ARENA_KM
    return Instance(
        task_xy=task_pos_rng.uniform(0.0, L, size=(n_tasks, 2)),
        task_value=task_val_rng.uniform(*IMPORTANCE_RANGE, size=n_tasks),
        agent_xy=agent_pos_rng.uniform(0.0, L, size=(n_agents, 2)),
        fitness=fit_rng.uniform(*FITNESS_RANGE, size=(n_agents, n_tasks)),
        lambda_d=DEFAULT_LAMBDA_D,
        lambda_n=DEFAULT_LAMBDA_N,
        arena=L,
    )
