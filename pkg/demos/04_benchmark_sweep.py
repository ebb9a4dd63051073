#!/usr/bin/env python3
"""A reduced Monte-Carlo sweep through the harness, plus the summary
table of means and ratios against the sequential baseline.

The full-size study is one CLI call (takes a minute or two):
    dtalloc bench --tasks 200 --agents 10,20,30,40,50 --trials 100 \
        --epsilon 0.05 --algo dtta,ldtta,sga --seed 0 --out results.csv
"""

from pathlib import Path

from dtalloc import ExperimentConfig, run_experiment, summarize

OUT = Path("demo_results.csv")

cfg = ExperimentConfig(
    n_tasks=100,
    agent_counts=(5, 15),
    trials=20,
    epsilons=(0.1,),
    algos=("dtta", "ldtta", "sga"),
    topology="complete",
    seed=1,
    out=OUT,
)

rows = run_experiment(cfg)
print(f"wrote {len(rows)} rows to {OUT}\n")

summary = summarize(rows)
cols = ["algo", "n_agents", "epsilon", "mean_value", "mean_evals",
        "mean_steps", "value_ratio", "evals_ratio", "steps_ratio"]
print(summary[cols].to_string(index=False, float_format=lambda v: f"{v:.4g}"))

print("\nRe-running this script reproduces the CSV byte for byte; seeds")
print("derive from (master seed, trial index) so every algorithm sees")
print("the same instances. Feed the CSV to the figure frontend:")
print("    cd frontend && npm run build")
print("    node dist/cli.js --csv ../demo_results.csv --out figs/")
