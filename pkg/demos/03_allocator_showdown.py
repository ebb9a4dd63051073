#!/usr/bin/env python3
"""All four allocators on one instance, checked against the exhaustive
optimum where the instance is small enough to enumerate."""

from dtalloc import (
    Topology,
    brute_force_opt,
    generate_instance,
    run_central,
    run_dtta,
    run_ldtta,
    run_sga,
)

EPS = 0.1

print("=" * 72)
print("1. Tiny instance (6 tasks, 3 agents): compare against brute force")
print("=" * 72)

inst = generate_instance(n_tasks=6, n_agents=3, seed=42)
topo = Topology.complete(3)
opt, opt_alloc = brute_force_opt(inst)
print(f"enumerated optimum: {opt:.4f}  allocation {opt_alloc}\n")

runs = {
    "sga": run_sga(inst, topo),
    "dtta": run_dtta(inst, topo, EPS),
    "ldtta": run_ldtta(inst, topo, EPS),
    "central": run_central(inst, EPS),
}
print(f"{'algo':<8} {'value':>8} {'vs opt':>7} {'bound':>6} {'evals':>6} {'steps':>6}")
for name, res in runs.items():
    m = res.metrics
    bound = 0.5 if name == "sga" else 0.5 - EPS
    print(f"{name:<8} {m.value:>8.4f} {m.value / opt:>6.1%} {bound:>6.2f} "
          f"{m.evals_total:>6} {m.consensus_steps:>6}")
print("\nEvery solver clears its guarantee with room to spare; the")
print("guarantees only bite on adversarial instances.")

print()
print("=" * 72)
print("2. Benchmark scale (200 tasks, 30 agents): where thresholds pay off")
print("=" * 72)

inst = generate_instance(n_tasks=200, n_agents=30, seed=7)
topo = Topology.complete(30)
runs = {
    "sga": run_sga(inst, topo),
    "dtta": run_dtta(inst, topo, 0.05),
    "ldtta": run_ldtta(inst, topo, 0.05),
}
sga = runs["sga"].metrics
print(f"{'algo':<8} {'value':>9} {'evals':>9} {'steps':>6} {'levels':>7} "
      f"{'eval ratio':>11} {'step ratio':>11}")
for name, res in runs.items():
    m = res.metrics
    print(f"{name:<8} {m.value:>9.2f} {m.evals_total:>9} {m.consensus_steps:>6} "
          f"{m.threshold_levels:>7} {m.evals_total / sga.evals_total:>10.1%} "
          f"{m.consensus_steps / sga.consensus_steps:>10.1%}")
print("\nThe sequential baseline needs one consensus step per task (200);")
print("threshold bidding grants many tasks per step, and lazy caching")
print("cuts the objective evaluations by roughly two orders of magnitude.")
