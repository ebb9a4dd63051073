"""Synchronous communication layer: topologies and consensus primitives.

Agents sit on a connected undirected graph and exchange messages with
neighbors in lockstep rounds. Flooding a value through the graph needs
as many rounds as the distance from its source, so round counts are
derived from precomputed hop distances; this matches a literal
message-passing simulation (the unit tests check that equivalence) while
staying cheap inside Monte-Carlo sweeps.

One invocation of max_cons or max_coor is one consensus step, no matter
how many flood rounds it takes internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from .model import AgentId, TaskId


@dataclass
class StepCounter:
    consensus_steps: int = 0
    flood_rounds: int = 0


@dataclass(frozen=True)
class BidMessage:
    """One agent's offer in a coordination round.

    value > 0 means the agent wants `task` at that marginal value;
    value == 0 with task None signals "no qualified task".
    """

    agent: AgentId
    task: TaskId | None
    value: float

    def __post_init__(self):
        if (self.value > 0.0) != (self.task is not None):
            raise ValueError("bid value must be positive iff a task is named")
        if self.value < 0.0:
            raise ValueError("bid values are non-negative")

    @classmethod
    def none(cls, agent: AgentId) -> "BidMessage":
        return cls(agent=agent, task=None, value=0.0)


@dataclass
class Topology:
    """Connected undirected communication graph over agent ids 0..n-1."""

    neighbors: tuple[tuple[int, ...], ...]
    kind: str = "custom"
    _dist: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.neighbors)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        for a, nbrs in enumerate(self.neighbors):
            for b in nbrs:
                if b == a:
                    raise ValueError("self-loops are not allowed")
                if not 0 <= b < n:
                    raise ValueError(f"neighbor id {b} out of range")
                g.add_edge(a, b)
        if n > 1 and not nx.is_connected(g):
            raise ValueError("topology must be connected")
        dist = np.zeros((n, n), dtype=np.int32)
        for src, lengths in nx.all_pairs_shortest_path_length(g):
            for dst, d in lengths.items():
                dist[src, dst] = d
        self._dist = dist

    @property
    def n_agents(self) -> int:
        return len(self.neighbors)

    @property
    def diameter(self) -> int:
        return int(self._dist.max())

    def eccentricity(self, agent: AgentId) -> int:
        return int(self._dist[agent].max())

    @classmethod
    def complete(cls, n: int) -> "Topology":
        nbrs = tuple(
            tuple(b for b in range(n) if b != a) for a in range(n)
        )
        return cls(neighbors=nbrs, kind="complete")

    @classmethod
    def ring(cls, n: int) -> "Topology":
        if n == 1:
            return cls(neighbors=((),), kind="ring")
        if n == 2:
            return cls(neighbors=((1,), (0,)), kind="ring")
        nbrs = tuple(
            tuple(sorted({(a - 1) % n, (a + 1) % n})) for a in range(n)
        )
        return cls(neighbors=nbrs, kind="ring")

    @classmethod
    def random_connected(cls, n: int, p: float, seed: int) -> "Topology":
        """Erdos-Renyi draw, then deterministically stitch any components."""
        if not 0.0 <= p <= 1.0:
            raise ValueError("edge probability must lie in [0, 1]")
        g = nx.gnp_random_graph(n, p, seed=seed)
        comps = sorted(nx.connected_components(g), key=min)
        for prev, cur in zip(comps, comps[1:]):
            g.add_edge(min(prev), min(cur))
        nbrs = tuple(tuple(sorted(g.neighbors(a))) for a in range(n))
        return cls(neighbors=nbrs, kind=f"random:{p}")


def parse_topology(spec: str, n_agents: int, seed: int = 0) -> Topology:
    """Build a topology from a CLI-style spec: complete | ring | random:p."""
    if spec == "complete":
        return Topology.complete(n_agents)
    if spec == "ring":
        return Topology.ring(n_agents)
    if spec.startswith("random:"):
        return Topology.random_connected(n_agents, float(spec.split(":", 1)[1]), seed)
    raise ValueError(f"unknown topology spec {spec!r}")


def _prefer(value_a: float, id_a: int, value_b: float, id_b: int) -> bool:
    """True if (value_a, id_a) beats (value_b, id_b): higher value, then lower id."""
    return value_a > value_b or (value_a == value_b and id_a < id_b)


def max_cons(
    values: list[tuple[float, AgentId]],
    topo: Topology,
    steps: StepCounter | None = None,
) -> tuple[AgentId, float, int]:
    """Network-wide max consensus over per-agent (value, id) pairs.

    Every agent floods its best-known pair to its neighbors each round
    until no view changes; the result is the global maximum with ties
    broken toward the lowest agent id, independent of topology. Returns
    (winner, max_value, rounds); rounds equal the winner's eccentricity,
    which is when the farthest agent's view settles, and never exceed
    the graph diameter.
    """
    if len(values) != topo.n_agents:
        raise ValueError("need exactly one value per agent")
    best_v, best_a = values[0][0], values[0][1]
    for v, a in values[1:]:
        if _prefer(v, a, best_v, best_a):
            best_v, best_a = v, a
    rounds = topo.eccentricity(best_a)
    if steps is not None:
        steps.consensus_steps += 1
        steps.flood_rounds += rounds
    return best_a, best_v, rounds


def max_coor(
    bids: list[BidMessage],
    topo: Topology,
    steps: StepCounter | None = None,
) -> tuple[set[AgentId], set[TaskId]]:
    """One coordination round: resolve bids into conflict-free winners.

    Bids are flooded so that every agent sees the same full set, then
    each task with at least one positive bid goes to its highest bidder
    (ties to the lowest agent id). Returns (winning agents, their
    tasks); all-zero bids yield (set(), set()). Conflict resolution is
    per task, so any number of tasks can be committed in a single step.
    """
    if len(bids) != topo.n_agents:
        raise ValueError("need exactly one bid per agent")
    best: dict[TaskId, tuple[float, AgentId]] = {}
    for bid in bids:
        if bid.value <= 0.0:
            continue
        cur = best.get(bid.task)
        if cur is None or _prefer(bid.value, bid.agent, cur[0], cur[1]):
            best[bid.task] = (bid.value, bid.agent)
    winners = {a for _, a in best.values()}
    tasks = set(best.keys())
    rounds = max(
        (topo.eccentricity(b.agent) for b in bids if b.value > 0.0), default=0
    )
    if steps is not None:
        steps.consensus_steps += 1
        steps.flood_rounds += rounds
    return winners, tasks
