"""dtalloc: decentralized multi-robot task allocation.

Threshold-greedy allocators with a simulated consensus layer, a
sequential-greedy baseline, a centralized reference solver, an
exhaustive oracle for small instances, and a Monte-Carlo benchmark
harness.
"""

from .allocators import (
    AllocationEvent,
    RunMetrics,
    RunResult,
    ThresholdSchedule,
    brute_force_opt,
    run_central,
    run_dtta,
    run_ldtta,
    run_sga,
    threshold_greedy_pairs,
)
from .bench import (
    CSV_COLUMNS,
    ExperimentConfig,
    load_rows,
    run_experiment,
    summarize,
    trial_seed,
    write_rows,
)
from .consensus import (
    BidMessage,
    StepCounter,
    Topology,
    max_cons,
    max_coor,
    parse_topology,
)
from .model import (
    Agent,
    Allocation,
    EvalCounter,
    GroundPair,
    Instance,
    Task,
    is_feasible,
    load_instance,
    save_instance,
)
from .objective import (
    agent_value,
    generate_instance,
    marginal_gain,
    path_length,
    total_value,
)

__all__ = [
    "Agent",
    "Allocation",
    "AllocationEvent",
    "BidMessage",
    "CSV_COLUMNS",
    "EvalCounter",
    "ExperimentConfig",
    "GroundPair",
    "Instance",
    "RunMetrics",
    "RunResult",
    "StepCounter",
    "Task",
    "ThresholdSchedule",
    "Topology",
    "agent_value",
    "brute_force_opt",
    "generate_instance",
    "is_feasible",
    "load_instance",
    "load_rows",
    "marginal_gain",
    "max_cons",
    "max_coor",
    "parse_topology",
    "path_length",
    "run_central",
    "run_dtta",
    "run_experiment",
    "run_ldtta",
    "run_sga",
    "save_instance",
    "summarize",
    "threshold_greedy_pairs",
    "total_value",
    "trial_seed",
    "write_rows",
]

__version__ = "0.1.0"
