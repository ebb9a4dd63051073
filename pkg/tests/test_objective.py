import numpy as np
import pytest

from dtalloc import (
    EvalCounter,
    agent_value,
    generate_instance,
    marginal_gain,
    path_length,
)


class TestPathLength:
    def test_empty_list_is_zero(self, two_stop_instance):
        assert path_length(0, [], two_stop_instance) == 0.0

    def test_three_four_five_triangle(self, two_stop_instance):
        assert path_length(0, [0], two_stop_instance) == pytest.approx(5.0, abs=1e-12)

    def test_two_hops(self, two_stop_instance):
        # 5 km to (3,4), then another 5 km to (6,8).
        assert path_length(0, [0, 1], two_stop_instance) == pytest.approx(10.0, abs=1e-12)


class TestMarginalGain:
    def test_first_append_matches_direct_formula(self, two_stop_instance):
        gain = marginal_gain(0, 0, [], two_stop_instance)
        assert gain == pytest.approx(0.95**5 * 0.98, abs=1e-12)
        assert gain == pytest.approx(0.7583053, abs=1e-7)

    def test_second_append_matches_direct_formula(self, two_stop_instance):
        gain = marginal_gain(0, 1, [0], two_stop_instance)
        assert gain == pytest.approx(0.95**10 * 0.98**2, abs=1e-12)
        assert gain == pytest.approx(0.5750, abs=1e-4)

    def test_gain_is_the_value_difference_of_the_append(self):
        rng = np.random.default_rng(2)
        for trial in range(30):
            inst = generate_instance(8, 2, seed=40 + trial)
            tasks = list(map(int, rng.permutation(8)[:4]))
            head, new = tasks[:-1], tasks[-1]
            diff = agent_value(0, tasks, inst) - agent_value(0, head, inst)
            assert marginal_gain(0, new, head, inst) == pytest.approx(diff, abs=1e-9)

    def test_gains_are_strictly_positive(self):
        rng = np.random.default_rng(3)
        for trial in range(50):
            inst = generate_instance(6, 2, seed=70 + trial)
            order = list(map(int, rng.permutation(6)))
            assert marginal_gain(0, order[-1], order[:-1], inst) > 0.0

    def test_task_already_in_list_rejected(self, two_stop_instance):
        with pytest.raises(ValueError):
            marginal_gain(0, 0, [0], two_stop_instance)

    def test_counter_increments_by_exactly_one(self, two_stop_instance):
        counter = EvalCounter.for_agents(1)
        marginal_gain(0, 0, [], two_stop_instance, counter)
        assert counter.per_agent[0] == 1
        marginal_gain(0, 1, [0], two_stop_instance, counter)
        assert counter.per_agent[0] == 2
        assert counter.total == 2


class TestAgentValue:
    def test_empty_list_is_zero(self, two_stop_instance):
        assert agent_value(0, [], two_stop_instance) == 0.0

    def test_single_task_equals_first_marginal(self, two_stop_instance):
        assert agent_value(0, [0], two_stop_instance) == pytest.approx(
            marginal_gain(0, 0, [], two_stop_instance), abs=1e-12
        )

    def test_two_tasks_sum_the_frozen_terms(self, two_stop_instance):
        expected = 0.95**5 * 0.98 + 0.95**10 * 0.98**2
        assert agent_value(0, [0, 1], two_stop_instance) == pytest.approx(expected, abs=1e-12)
        assert agent_value(0, [0, 1], two_stop_instance) == pytest.approx(1.3333, abs=1e-4)

    def test_duplicates_rejected(self, two_stop_instance):
        with pytest.raises(ValueError):
            agent_value(0, [0, 0], two_stop_instance)

    def test_telescoping_over_random_lists(self):
        rng = np.random.default_rng(4)
        for trial in range(25):
            inst = generate_instance(9, 2, seed=200 + trial)
            order = list(map(int, rng.permutation(9)[: rng.integers(1, 9)]))
            gains = [
                marginal_gain(0, j, order[:i], inst) for i, j in enumerate(order)
            ]
            assert agent_value(0, order, inst) == pytest.approx(sum(gains), abs=1e-9)

    def test_value_strictly_increases_with_each_append(self):
        inst = generate_instance(7, 1, seed=77)
        order = [3, 0, 6, 1]
        values = [agent_value(0, order[:k], inst) for k in range(len(order) + 1)]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestDiminishingReturns:
    def test_subsequence_never_gets_a_smaller_gain(self):
        # A is an order-preserving subsequence of B, j outside B:
        # the gain of j given A must not fall below its gain given B.
        rng = np.random.default_rng(5)
        for trial in range(100):
            inst = generate_instance(10, 2, seed=300 + trial)
            perm = list(map(int, rng.permutation(10)))
            b_len = int(rng.integers(1, 9))
            big, j = perm[:b_len], perm[b_len]
            keep = rng.random(b_len) < 0.5
            small = [t for t, k in zip(big, keep) if k]
            assert (
                marginal_gain(0, j, small, inst)
                >= marginal_gain(0, j, big, inst) - 1e-12
            )

    def test_reevaluations_along_an_append_chain_never_increase(self):
        # Fixed unallocated task, growing list: the gain sequence is
        # non-increasing, which is what lazy caching relies on.
        rng = np.random.default_rng(6)
        for trial in range(25):
            inst = generate_instance(8, 1, seed=400 + trial)
            order = list(map(int, rng.permutation(8)))
            chain, j = order[:-1], order[-1]
            gains = [
                marginal_gain(0, j, chain[:k], inst) for k in range(len(chain) + 1)
            ]
            assert all(b <= a + 1e-12 for a, b in zip(gains, gains[1:]))


class TestGenerateInstance:
    def test_same_seed_reproduces_instance(self):
        a = generate_instance(20, 4, seed=123)
        b = generate_instance(20, 4, seed=123)
        np.testing.assert_array_equal(a.task_xy, b.task_xy)
        np.testing.assert_array_equal(a.task_value, b.task_value)
        np.testing.assert_array_equal(a.agent_xy, b.agent_xy)
        np.testing.assert_array_equal(a.fitness, b.fitness)

    def test_parameter_ranges(self):
        inst = generate_instance(200, 10, seed=1)
        assert inst.fitness.shape == (10, 200)
        assert np.all(inst.fitness >= 0.5) and np.all(inst.fitness <= 1.0)
        assert np.all(inst.task_value >= 0.6) and np.all(inst.task_value <= 1.0)
        assert np.all(inst.task_xy >= 0.0) and np.all(inst.task_xy <= 10.0)
        assert np.all(inst.agent_xy >= 0.0) and np.all(inst.agent_xy <= 10.0)
        assert inst.lambda_d == 0.95
        assert inst.lambda_n == 0.98
        assert inst.arena == 10.0

    def test_growing_the_fleet_keeps_task_geometry(self):
        small = generate_instance(15, 4, seed=321)
        big = generate_instance(15, 9, seed=321)
        np.testing.assert_array_equal(small.task_xy, big.task_xy)
        np.testing.assert_array_equal(small.task_value, big.task_value)
        np.testing.assert_array_equal(small.agent_xy, big.agent_xy[:4])
        np.testing.assert_array_equal(small.fitness, big.fitness[:4])

    def test_zero_counts_rejected(self):
        with pytest.raises(ValueError):
            generate_instance(0, 3, seed=0)
        with pytest.raises(ValueError):
            generate_instance(3, 0, seed=0)
