"""Task-allocation solvers.

Four allocators over the same instance/objective machinery:

* run_sga   -- sequential greedy baseline: one globally best task-agent
               pair committed per consensus step, r steps total.
* run_dtta  -- decreasing-threshold allocation: agents bid the first
               remaining task whose marginal clears the current
               threshold; conflict-free winners commit in parallel; a
               round with no qualified task anywhere lowers the
               threshold by a factor (1 - epsilon).
* run_ldtta -- lazy variant: each agent keeps its remaining tasks
               sorted by cached marginal and only re-evaluates list
               heads, exploiting that marginals never increase.
* run_central / threshold_greedy_pairs -- the equivalent centralized
               decreasing-threshold greedy over (task, agent) pairs
               under the one-agent-per-task constraint.

plus brute_force_opt, an exhaustive oracle for small instances.

Decentralized runs are simulated in lockstep rounds: every agent
computes its bid, then one coordination call resolves them. When no
agent has a qualified task there is nothing to transmit; all agents
observe the silent round and lower the threshold locally, so only
rounds that carry bids (plus the single startup max-consensus) cost
consensus steps. A run stops early once every task is allocated, which
each agent detects from its own remaining-task set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .consensus import BidMessage, StepCounter, Topology, max_cons, max_coor
from .model import (
    AgentId,
    Allocation,
    EvalCounter,
    GroundPair,
    Instance,
    TaskId,
)
from .objective import agent_value, total_value


def _check_epsilon(epsilon: float) -> None:
    # epsilon == 0 would make the threshold schedule non-terminating.
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must lie strictly in (0, 1), got {epsilon}")


@dataclass
class ThresholdSchedule:
    """Geometric threshold ladder: d, d(1-eps), d(1-eps)^2, ... >= (eps/r) d."""

    d: float
    epsilon: float
    r: int

    def __post_init__(self):
        _check_epsilon(self.epsilon)
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.d < 0.0:
            raise ValueError("initial threshold must be non-negative")

    @property
    def floor(self) -> float:
        """Terminal threshold (eps / r) * d; levels below it never run."""
        return self.epsilon / self.r * self.d

    def levels(self):
        if self.d <= 0.0:
            return
        theta = self.d
        floor = self.floor
        while theta >= floor:
            yield theta
            theta *= 1.0 - self.epsilon

    def max_levels(self) -> int:
        """Closed-form cap on the number of levels: ceil(ln(r/eps) / ln(1/(1-eps)))."""
        return math.ceil(
            math.log(self.r / self.epsilon) / math.log(1.0 / (1.0 - self.epsilon))
        )


@dataclass(frozen=True)
class AllocationEvent:
    """One committed task: which agent won it, at what threshold, at what gain."""

    agent: AgentId
    task: TaskId
    theta: float | None
    gain: float


@dataclass
class RunMetrics:
    value: float
    evals_total: int
    evals_per_agent: list[int]
    consensus_steps: int
    threshold_levels: int
    flood_rounds: int
    wall_ms: float = 0.0

    @property
    def evals_per_agent_max(self) -> int:
        return max(self.evals_per_agent)


@dataclass
class RunResult:
    allocation: Allocation
    metrics: RunMetrics
    events: list[AllocationEvent] = field(default_factory=list)


class _Fleet:
    """Incremental per-agent path state with current marginal-gain vectors.

    gains[a][j] always equals the marginal of appending task j to agent
    a's current list, so a solver reads true marginals in O(1); the
    vector is rebuilt only when agent a's list grows. Objective-call
    accounting is the solver's job (counts follow each algorithm's scan
    semantics, not this cache).
    """

    def __init__(self, inst: Instance):
        self.inst = inst
        n = inst.n_agents
        self.last_xy = inst.agent_xy.astype(float).copy()
        self.path_len = np.zeros(n)
        self.size = np.zeros(n, dtype=np.int64)
        self.gains = np.empty((n, inst.n_tasks))
        for a in range(n):
            self._refresh(a)

    def _refresh(self, a: AgentId) -> None:
        inst = self.inst
        dx = inst.task_xy[:, 0] - self.last_xy[a, 0]
        dy = inst.task_xy[:, 1] - self.last_xy[a, 1]
        tau = self.path_len[a] + np.sqrt(dx * dx + dy * dy)
        self.gains[a] = (
            inst.fitness[a]
            * inst.task_value
            * inst.lambda_d**tau
            * inst.lambda_n ** float(self.size[a] + 1)
        )

    def append(self, a: AgentId, j: TaskId) -> None:
        tx, ty = self.inst.task_xy[j]
        dx = tx - self.last_xy[a, 0]
        dy = ty - self.last_xy[a, 1]
        self.path_len[a] += math.sqrt(dx * dx + dy * dy)
        self.last_xy[a] = (tx, ty)
        self.size[a] += 1
        self._refresh(a)


def _finish(
    alloc: Allocation,
    inst: Instance,
    counter: EvalCounter,
    steps: StepCounter,
    levels: int,
    events: list[AllocationEvent],
) -> RunResult:
    metrics = RunMetrics(
        value=total_value(alloc, inst),
        evals_total=counter.total,
        evals_per_agent=[int(c) for c in counter.per_agent],
        consensus_steps=steps.consensus_steps,
        threshold_levels=levels,
        flood_rounds=steps.flood_rounds,
    )
    return RunResult(allocation=alloc, metrics=metrics, events=events)


def run_sga(inst: Instance, topo: Topology) -> RunResult:
    """Sequential greedy baseline.

    Each round every agent evaluates all remaining tasks and offers its
    best; one max-consensus picks the single best (task, agent) pair,
    ties toward the lower agent id (and lower task id within an agent).
    Exactly r rounds and r consensus steps for r tasks.
    """
    n, r = inst.n_agents, inst.n_tasks
    counter = EvalCounter.for_agents(n)
    steps = StepCounter()
    fleet = _Fleet(inst)
    alive = np.ones(r, dtype=bool)
    alloc: Allocation = [[] for _ in range(n)]
    events: list[AllocationEvent] = []
    for rnd in range(r):
        n_alive = r - rnd
        offers = []
        for a in range(n):
            counter.add(a, n_alive)
            masked = np.where(alive, fleet.gains[a], -np.inf)
            j = int(np.argmax(masked))
            offers.append((float(masked[j]), j))
        winner, best, _ = max_cons(
            [(v, a) for a, (v, _) in enumerate(offers)], topo, steps
        )
        j = offers[winner][1]
        alloc[winner].append(j)
        events.append(AllocationEvent(agent=winner, task=j, theta=None, gain=best))
        fleet.append(winner, j)
        alive[j] = False
    return _finish(alloc, inst, counter, steps, 0, events)


def _threshold_run(inst: Instance, topo: Topology, epsilon: float, lazy: bool) -> RunResult:
    _check_epsilon(epsilon)
    n, r = inst.n_agents, inst.n_tasks
    counter = EvalCounter.for_agents(n)
    steps = StepCounter()
    fleet = _Fleet(inst)
    alloc: Allocation = [[] for _ in range(n)]
    events: list[AllocationEvent] = []

    # Initialization: every agent evaluates all its tasks once, then one
    # max-consensus fixes the shared starting threshold d.
    for a in range(n):
        counter.add(a, r)
    local_best = [(float(fleet.gains[a].max()), a) for a in range(n)]
    _, d, _ = max_cons(local_best, topo, steps)

    alive = np.ones(r, dtype=bool)  # identical across agents: all removals are shared
    if lazy:
        # Per-agent descending cache of (stale) marginals; ties keep
        # ascending task-id order via the stable sort.
        cache_tasks: list[list[int]] = []
        cache_vals: list[list[float]] = []
        for a in range(n):
            order = np.argsort(-fleet.gains[a], kind="stable")
            cache_tasks.append([int(j) for j in order])
            cache_vals.append([float(fleet.gains[a][j]) for j in order])

    schedule = ThresholdSchedule(d=d, epsilon=epsilon, r=r)
    levels = 0
    for theta in schedule.levels():
        levels += 1
        while alive.any():
            bids: list[BidMessage] = []
            n_alive = int(alive.sum())
            for a in range(n):
                if lazy:
                    bid = _lazy_bid(
                        a, theta, fleet, cache_tasks[a], cache_vals[a], counter
                    )
                else:
                    bid = _scan_bid(a, theta, fleet, alive, n_alive, counter)
                bids.append(bid)
            if all(b.value == 0.0 for b in bids):
                break  # silent round: threshold drops for everyone, no step
            winners, taken = max_coor(bids, topo, steps)
            for b in bids:
                if b.agent in winners:
                    alloc[b.agent].append(b.task)
                    events.append(
                        AllocationEvent(agent=b.agent, task=b.task, theta=theta, gain=b.value)
                    )
                    fleet.append(b.agent, b.task)
            for j in taken:
                alive[j] = False
            if lazy:
                for a in range(n):
                    for j in taken:
                        idx = cache_tasks[a].index(j)
                        cache_tasks[a].pop(idx)
                        cache_vals[a].pop(idx)
        if not alive.any():
            break  # all tasks committed; remaining levels cannot change anything
    return _finish(alloc, inst, counter, steps, levels, events)


def _scan_bid(
    a: AgentId,
    theta: float,
    fleet: _Fleet,
    alive: np.ndarray,
    n_alive: int,
    counter: EvalCounter,
) -> BidMessage:
    """Scan remaining tasks in ascending id order, bid the first one at or
    above theta; a fruitless scan costs a full pass."""
    hits = np.flatnonzero(alive & (fleet.gains[a] >= theta))
    if hits.size:
        j = int(hits[0])
        counter.add(a, int(np.count_nonzero(alive[: j + 1])))
        return BidMessage(agent=a, task=j, value=float(fleet.gains[a][j]))
    counter.add(a, n_alive)
    return BidMessage.none(a)


def _lazy_bid(
    a: AgentId,
    theta: float,
    fleet: _Fleet,
    tasks: list[int],
    vals: list[float],
    counter: EvalCounter,
) -> BidMessage:
    """Re-evaluate cache heads until one clears theta or the head's cached
    value falls below it. Cached values only overestimate (marginals never
    grow), so a head below theta proves nothing qualifies."""
    while vals and vals[0] >= theta:
        j = tasks[0]
        true_gain = float(fleet.gains[a][j])
        counter.add(a, 1)
        vals[0] = true_gain
        if true_gain >= theta:
            return BidMessage(agent=a, task=j, value=true_gain)
        # Sink the refreshed head to its sorted slot (stable: it stays
        # ahead of entries with an equal value).
        i = 1
        while i < len(vals) and vals[i] > true_gain:
            i += 1
        vals.insert(i, vals.pop(0))
        tasks.insert(i, tasks.pop(0))
    return BidMessage.none(a)


def run_dtta(inst: Instance, topo: Topology, epsilon: float) -> RunResult:
    """Decreasing-threshold allocation with first-qualified bidding."""
    return _threshold_run(inst, topo, epsilon, lazy=False)


def run_ldtta(inst: Instance, topo: Topology, epsilon: float) -> RunResult:
    """Decreasing-threshold allocation with lazy sorted-cache bidding."""
    return _threshold_run(inst, topo, epsilon, lazy=True)


def _central_run(
    ground: list[GroundPair],
    inst: Instance,
    epsilon: float,
    counter: EvalCounter,
) -> tuple[list[GroundPair], Allocation, int, list[AllocationEvent]]:
    _check_epsilon(epsilon)
    n, r = inst.n_agents, inst.n_tasks
    fleet = _Fleet(inst)
    # Initial threshold: the best singleton value over the ground set.
    d = 0.0
    for j, a in ground:
        counter.add(a, 1)
        d = max(d, float(fleet.gains[a][j]))
    alloc: Allocation = [[] for _ in range(n)]
    events: list[AllocationEvent] = []
    selected: list[GroundPair] = []
    task_taken = np.zeros(r, dtype=bool)
    schedule = ThresholdSchedule(d=d, epsilon=epsilon, r=r)
    floor = schedule.floor
    remaining = list(ground)
    levels = 0
    for theta in schedule.levels():
        levels += 1
        survivors: list[GroundPair] = []
        for pair in remaining:
            j, a = pair
            if task_taken[j]:
                continue  # adding it would violate one-agent-per-task
            gain = float(fleet.gains[a][j])
            counter.add(a, 1)
            if gain >= theta:
                selected.append(pair)
                alloc[a].append(j)
                events.append(AllocationEvent(agent=a, task=j, theta=theta, gain=gain))
                fleet.append(a, j)
                task_taken[j] = True
            elif gain >= floor:
                survivors.append(pair)
            # else: the marginal can only shrink further, prune the pair
        remaining = survivors
        if not remaining:
            break
    return selected, alloc, levels, events


def threshold_greedy_pairs(
    ground: list[GroundPair],
    inst: Instance,
    epsilon: float,
    counter: EvalCounter | None = None,
) -> list[GroundPair]:
    """Centralized decreasing-threshold greedy over (task, agent) pairs.

    Scans the remaining pairs in the given (task-major) order at each
    threshold level, committing any pair whose marginal clears the
    level, dropping pairs that clash with a committed task, and pruning
    pairs whose marginal has sunk below the terminal threshold. Returns
    the selected pairs in commit order.
    """
    if counter is None:
        counter = EvalCounter.for_agents(inst.n_agents)
    selected, _, _, _ = _central_run(ground, inst, epsilon, counter)
    return selected


def run_central(inst: Instance, epsilon: float, topo: Topology | None = None) -> RunResult:
    """RunResult wrapper for the centralized solver (no consensus traffic)."""
    counter = EvalCounter.for_agents(inst.n_agents)
    _, alloc, levels, events = _central_run(inst.ground_set(), inst, epsilon, counter)
    return _finish(alloc, inst, counter, StepCounter(), levels, events)


def brute_force_opt(
    inst: Instance, max_tasks: int = 7, max_agents: int = 3
) -> tuple[float, Allocation]:
    """Exhaustive optimum over assignments and visit orders.

    Every task goes to one agent or stays unassigned; each agent's set
    is then visited in its best order. Only viable for tiny instances,
    hence the hard size budget.
    """
    r, n = inst.n_tasks, inst.n_agents
    if r > max_tasks or n > max_agents:
        raise ValueError(
            f"instance ({r} tasks, {n} agents) exceeds the enumeration "
            f"budget ({max_tasks} tasks, {max_agents} agents)"
        )
    # Best visit order for every (agent, task subset).
    best_for: list[dict[frozenset, tuple[float, tuple[int, ...]]]] = []
    for a in range(n):
        table: dict[frozenset, tuple[float, tuple[int, ...]]] = {frozenset(): (0.0, ())}
        for k in range(1, r + 1):
            for combo in itertools.combinations(range(r), k):
                best = (-1.0, ())
                for perm in itertools.permutations(combo):
                    v = agent_value(a, list(perm), inst)
                    if v > best[0]:
                        best = (v, perm)
                table[frozenset(combo)] = best
        best_for.append(table)
    best_value = -1.0
    best_assignment: tuple[int, ...] = ()
    for assignment in itertools.product(range(n + 1), repeat=r):
        sets = [frozenset(j for j, owner in enumerate(assignment) if owner == a) for a in range(n)]
        value = sum(best_for[a][sets[a]][0] for a in range(n))
        if value > best_value:
            best_value = value
            best_assignment = assignment
    alloc: Allocation = []
    for a in range(n):
        subset = frozenset(j for j, owner in enumerate(best_assignment) if owner == a)
        alloc.append(list(best_for[a][subset][1]))
    return best_value, alloc
