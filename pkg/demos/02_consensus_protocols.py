#!/usr/bin/env python3
"""Tour of the communication layer: topologies, max-consensus, and
parallel conflict resolution."""

from dtalloc import BidMessage, StepCounter, Topology, max_cons, max_coor

print("=" * 64)
print("1. Topologies and their diameters")
print("=" * 64)

for topo in (
    Topology.complete(8),
    Topology.ring(8),
    Topology.random_connected(8, 0.25, seed=4),
):
    print(f"{topo.kind:<12} diameter {topo.diameter}")

print()
print("=" * 64)
print("2. Max-consensus: everyone agrees on the largest bid")
print("=" * 64)

values = [(0.31, 0), (0.74, 1), (0.74, 2), (0.52, 3), (0.11, 4), (0.63, 5)]
for topo in (Topology.complete(6), Topology.ring(6)):
    steps = StepCounter()
    winner, value, rounds = max_cons(values, topo, steps)
    print(f"{topo.kind:<10} winner=agent{winner} value={value} "
          f"flood_rounds={rounds} (<= diameter {topo.diameter}); "
          f"ties break to the lowest id")

print()
print("=" * 64)
print("3. One coordination step can grant several tasks at once")
print("=" * 64)

topo = Topology.complete(4)
bids = [
    BidMessage(0, task=5, value=0.90),
    BidMessage(1, task=5, value=0.80),   # loses the conflict on task 5
    BidMessage(2, task=7, value=0.60),   # uncontested, granted anyway
    BidMessage.none(3),                  # nothing qualified this round
]
winners, tasks = max_coor(bids, topo)
print(f"bids: a0->t5@0.90, a1->t5@0.80, a2->t7@0.60, a3->none")
print(f"winners A={sorted(winners)}, granted tasks J={sorted(tasks)}")

all_zero = [BidMessage.none(a) for a in range(4)]
print(f"all-zero round: {max_coor(all_zero, topo)}  (the threshold-drop signal)")
