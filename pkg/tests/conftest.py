import numpy as np
import pytest

from dtalloc import Instance


def make_instance(task_xy, agent_xy, task_value=None, fitness=None,
                  lambda_d=0.95, lambda_n=0.98, arena=10.0) -> Instance:
    """Small hand-built instance; importance/fitness default to 1."""
    task_xy = np.asarray(task_xy, dtype=float)
    agent_xy = np.asarray(agent_xy, dtype=float)
    r, n = len(task_xy), len(agent_xy)
    if task_value is None:
        task_value = np.ones(r)
    if fitness is None:
        fitness = np.ones((n, r))
    return Instance(
        task_xy=task_xy,
        task_value=np.asarray(task_value, dtype=float),
        agent_xy=agent_xy,
        fitness=np.asarray(fitness, dtype=float),
        lambda_d=lambda_d,
        lambda_n=lambda_n,
        arena=arena,
    )


@pytest.fixture
def two_stop_instance() -> Instance:
    """One agent at the origin, tasks at (3,4) and (6,8): 5 km hops."""
    return make_instance([[3.0, 4.0], [6.0, 8.0]], [[0.0, 0.0]])
