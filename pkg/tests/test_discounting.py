import numpy as np
import pytest

from edtest import (
    DeflatedPanel,
    build_constraint_graph,
    compute_eei,
    constraint_weights,
    delta_grid,
    ed_feasible,
    ed_witness,
    identified_set,
)

TOL = 2.0**-10


@pytest.fixture
def orthogonal_bundles() -> DeflatedPanel:
    """Equal prices, disjoint bundles of equal cost; every cycle edge is zero."""
    return DeflatedPanel(
        "orthogonal",
        discounted_prices=np.array([[1.0, 1.0], [1.0, 1.0]]),
        quantities=np.array([[1.0, 0.0], [0.0, 1.0]]),
    )


class TestConstraintWeights:
    def test_two_node_weights(self, rising_consumption):
        weights = constraint_weights(rising_consumption, 1.0, 0.5)
        assert weights[0, 1] == 1.0      # cost at t=0 of moving to the larger bundle
        assert weights[1, 0] == -2.0     # 0.5**-1 * (1 - 2)

    def test_lower_efficiency_weakly_increases_weights(self, two_period_violation):
        high = constraint_weights(two_period_violation, 1.0, 0.7)
        low = constraint_weights(two_period_violation, 0.5, 0.7)
        assert np.all(low >= high)

    def test_rejects_out_of_range_parameters(self, rising_consumption):
        with pytest.raises(ValueError):
            constraint_weights(rising_consumption, 1.2, 0.5)
        with pytest.raises(ValueError):
            constraint_weights(rising_consumption, 0.5, 0.0)

    def test_graph_type_exposes_edges(self, rising_consumption):
        graph = build_constraint_graph(rising_consumption, 1.0, 0.5)
        assert graph.num_nodes == 2
        assert graph.edge_weight(0, 1) == 1.0
        assert graph.edge_weight(1, 0) == -2.0
        assert np.all(np.isfinite(graph.weights))
        with pytest.raises(ValueError):
            graph.edge_weight(1, 1)


class TestEdFeasible:
    def test_zero_weight_cycle_is_feasible(self, orthogonal_bundles):
        assert ed_feasible(orthogonal_bundles, 1.0, 1.0)
        witness = ed_witness(orthogonal_bundles, 1.0, 1.0)
        assert witness.utilities.tolist() == [0.0, 0.0]
        assert witness.is_valid(orthogonal_bundles)

    def test_rising_consumption_needs_unit_discount(self, rising_consumption):
        assert ed_feasible(rising_consumption, 1.0, 1.0)
        for delta in (0.9, 0.5, 0.05):
            assert not ed_feasible(rising_consumption, 1.0, delta)

    def test_violation_panel_boundary_in_efficiency(self, two_period_violation):
        # cycle sum factorizes as (1 + 1/delta) * (4/e - 5): sign set by e alone
        for delta in (0.1, 0.5, 1.0):
            assert ed_feasible(two_period_violation, 0.8, delta)
            assert not ed_feasible(two_period_violation, 0.9, delta)

    def test_single_observation_always_feasible(self, single_observation):
        for efficiency, delta in ((1.0, 1.0), (0.3, 0.05), (0.9, 0.6)):
            assert ed_feasible(single_observation, efficiency, delta)

    def test_witness_none_when_infeasible(self, rising_consumption):
        assert ed_witness(rising_consumption, 1.0, 0.5) is None

    def test_witness_satisfies_every_constraint(self, two_period_violation):
        witness = ed_witness(two_period_violation, 0.7, 0.9)
        assert witness is not None
        assert witness.is_valid(two_period_violation)
        assert witness.max_violation(two_period_violation) <= 1e-9


class TestDeltaGrid:
    def test_default_centesimal_grid(self):
        grid = delta_grid(0.01)
        assert grid.size == 100
        assert grid[0] == pytest.approx(0.01)
        assert grid[-1] == 1.0

    def test_millesimal_grid(self):
        grid = delta_grid(0.001)
        assert grid.size == 1000
        assert grid[-1] == 1.0

    def test_step_not_dividing_one_still_reaches_one(self):
        grid = delta_grid(0.3)
        assert grid.tolist() == pytest.approx([0.3, 0.6, 0.9, 1.0])

    def test_invalid_steps_rejected(self):
        for step in (0.0, 1.0, -0.1):
            with pytest.raises(ValueError):
                delta_grid(step)


class TestIdentifiedSet:
    def test_unconstrained_panel_has_full_grid(self, single_observation):
        result = identified_set(single_observation, 1.0, grid_step=0.01)
        assert result.feasible_mask.all()
        assert result.lower == pytest.approx(0.01)
        assert result.upper == 1.0
        assert result.contiguous
        assert not result.is_empty

    def test_rising_consumption_pins_delta_to_one(self, rising_consumption):
        result = identified_set(rising_consumption, 1.0, grid_step=0.001)
        assert result.lower == result.upper == result.midpoint == 1.0
        assert result.width == 0.0
        assert int(result.feasible_mask.sum()) == 1

    def test_empty_when_efficiency_too_demanding(self, two_period_violation):
        result = identified_set(two_period_violation, 1.0, grid_step=0.01)
        assert result.is_empty
        assert result.lower is None and result.upper is None and result.midpoint is None
        assert result.contiguous  # vacuously

    def test_midpoint_between_bounds(self, two_period_violation):
        result = identified_set(two_period_violation, 0.75, grid_step=0.01)
        assert not result.is_empty
        assert result.lower <= result.midpoint <= result.upper


class TestComputeEei:
    def test_single_observation(self, single_observation):
        eei, best_delta = compute_eei(single_observation)
        assert eei == 1.0
        assert best_delta == pytest.approx(0.01)  # first grid point already works

    def test_violation_panel_boundary(self, two_period_violation):
        eei, best_delta = compute_eei(two_period_violation, tol=TOL)
        assert eei == pytest.approx(0.8, abs=TOL)
        assert ed_feasible(two_period_violation, eei, best_delta)

    def test_certified_endpoint_feasible_on_grid(self, rising_consumption):
        eei, best_delta = compute_eei(rising_consumption)
        assert eei == 1.0
        assert best_delta == 1.0  # only the unit discount factor works
