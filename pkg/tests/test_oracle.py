import numpy as np
import pytest

from edtest import oracle_ed_feasible, oracle_egarp, random_panel
from edtest.oracle import _directed_cycles, _node_sequences


class TestCycleEnumeration:
    def test_counts_on_three_nodes(self):
        by_length = _directed_cycles(3)
        assert [len(group) for group in by_length] == [3, 2]  # 2-cycles, 3-cycles

    def test_counts_on_four_nodes(self):
        by_length = _directed_cycles(4)
        assert [len(group) for group in by_length] == [6, 8, 6]

    def test_cycles_start_at_smallest_node(self):
        for group in _directed_cycles(4):
            assert np.all(group[:, 0] == group.min(axis=1))

    def test_sequence_counts(self):
        by_length = _node_sequences(3)
        assert [len(group) for group in by_length] == [6, 6]  # P(3,2), P(3,3)


class TestOracleEdFeasible:
    def test_single_observation(self, single_observation):
        assert oracle_ed_feasible(single_observation, 1.0, 0.5)

    def test_rising_consumption(self, rising_consumption):
        assert not oracle_ed_feasible(rising_consumption, 1.0, 0.9)
        assert oracle_ed_feasible(rising_consumption, 1.0, 1.0)

    def test_violation_boundary(self, two_period_violation):
        assert oracle_ed_feasible(two_period_violation, 0.8, 0.5)
        assert not oracle_ed_feasible(two_period_violation, 0.9, 0.5)

    def test_size_cap(self):
        rng = np.random.default_rng(1)
        panel = random_panel(rng, 9, 1)
        with pytest.raises(ValueError, match="capped"):
            oracle_ed_feasible(panel, 1.0, 0.5)


class TestOracleEgarp:
    def test_single_observation(self, single_observation):
        assert oracle_egarp(single_observation, 1.0)

    def test_mutual_strict_instance(self, two_period_violation):
        assert not oracle_egarp(two_period_violation, 1.0)
        assert oracle_egarp(two_period_violation, 0.8)

    def test_size_cap(self):
        rng = np.random.default_rng(1)
        panel = random_panel(rng, 9, 1)
        with pytest.raises(ValueError, match="capped"):
            oracle_egarp(panel, 1.0)
