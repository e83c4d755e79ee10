"""Dynamic rationality: feasibility at a fixed (efficiency, discount factor),
the EEI, witness utilities, and discount-factor identified sets.

For a candidate discount factor, consistency with discounting-with-efficiency
reduces to a difference-constraint system over per-period utility numbers:

    u_s <= u_t + delta**(-t) * cost_t(bundle_s / e - bundle_t)   for all t, s.

Such a system is feasible exactly when the complete directed graph with those
edge weights has no negative cycle, which min-plus Floyd-Warshall decides by
inspecting the diagonal of the all-pairs shortest-path matrix. Cycle sums
within a small relative tolerance of zero count as feasible, since boundary
instances sit exactly at zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from ._search import certified_sup
from .dataset import DeflatedPanel
from .defaults import DEFAULT_BOUNDS_STEP, DEFAULT_DELTA_STEP, DEFAULT_EFFICIENCY_TOL
from .garp import _check_efficiency

_NEG_CYCLE_RTOL = 1e-9
_WITNESS_RTOL = 1e-9


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"discount factor must lie in (0, 1], got {delta!r}")
    return delta


def constraint_weights(panel: DeflatedPanel, efficiency: float, delta: float) -> NDArray[np.float64]:
    """Edge-weight matrix of the difference-constraint graph.

    Entry (t, s) bounds u_s - u_t from above. The diagonal is meaningless
    (self-edges are excluded from feasibility) but returned for shape
    convenience.
    """
    efficiency = _check_efficiency(efficiency)
    delta = _check_delta(delta)
    cross = panel.cross_expenditure
    own = cross.diagonal()
    growth = delta ** -np.arange(panel.num_periods, dtype=np.float64)
    weights = growth[:, None] * (cross / efficiency - own[:, None])
    if not np.all(np.isfinite(weights)):
        raise ValueError(
            f"household {panel.household_id!r}: non-finite constraint weight at "
            f"efficiency={efficiency}, delta={delta}; panel values or parameters are extreme"
        )
    return weights


@dataclass(frozen=True, eq=False)
class ConstraintGraph:
    """Complete directed graph of the difference-constraint system.

    Edge t -> s carries the upper bound on u_s - u_t; self-edges are excluded
    from feasibility questions. Kept around for inspection and debugging; the
    feasibility routines build the same weights internally.
    """

    weights: NDArray[np.float64]
    efficiency: float
    delta: float

    @property
    def num_nodes(self) -> int:
        return self.weights.shape[0]

    def edge_weight(self, t: int, s: int) -> float:
        if t == s:
            raise ValueError("self-edges are excluded from the constraint graph")
        return float(self.weights[t, s])


def build_constraint_graph(panel: DeflatedPanel, efficiency: float, delta: float) -> ConstraintGraph:
    return ConstraintGraph(
        weights=constraint_weights(panel, efficiency, delta),
        efficiency=_check_efficiency(efficiency),
        delta=_check_delta(delta),
    )


def cycle_tolerance(weights: NDArray[np.float64]) -> float:
    """Absolute slack below zero at which a cycle sum still counts as nonnegative."""
    n = weights.shape[0]
    if n < 2:
        return _NEG_CYCLE_RTOL
    off_diagonal = np.abs(weights[~np.eye(n, dtype=bool)])
    return _NEG_CYCLE_RTOL * (1.0 + float(off_diagonal.max()))


def _all_pairs_shortest(weights: NDArray[np.float64]) -> NDArray[np.float64]:
    dist = weights.copy()
    np.fill_diagonal(dist, 0.0)
    for k in range(dist.shape[0]):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return dist


def _solve(panel: DeflatedPanel, efficiency: float, delta: float):
    weights = constraint_weights(panel, efficiency, delta)
    dist = _all_pairs_shortest(weights)
    feasible = bool(dist.diagonal().min() >= -cycle_tolerance(weights))
    return feasible, dist


def ed_feasible(panel: DeflatedPanel, efficiency: float, delta: float) -> bool:
    """True iff the utility-number system is feasible at (efficiency, delta)."""
    feasible, _ = _solve(panel, efficiency, delta)
    return feasible


@dataclass(frozen=True, eq=False)
class FeasibilityWitness:
    """Node potentials certifying feasibility at one (efficiency, delta).

    The utilities are defined up to a common additive offset; these are the
    shortest-path potentials from a zero-weight virtual source.
    """

    utilities: NDArray[np.float64]
    delta: float
    efficiency: float

    def max_violation(self, panel: DeflatedPanel) -> float:
        """Largest amount by which any constraint u_s <= u_t + w(t, s) fails."""
        weights = constraint_weights(panel, self.efficiency, self.delta)
        slack = self.utilities[None, :] - self.utilities[:, None] - weights
        np.fill_diagonal(slack, -np.inf)
        return float(slack.max())

    def is_valid(self, panel: DeflatedPanel) -> bool:
        """Check every constraint to additive tolerance scaled by its bound."""
        weights = constraint_weights(panel, self.efficiency, self.delta)
        bound = _WITNESS_RTOL * (1.0 + np.abs(weights))
        slack = self.utilities[None, :] - self.utilities[:, None] - weights
        np.fill_diagonal(slack, -np.inf)
        return bool(np.all(slack <= bound))


def ed_witness(panel: DeflatedPanel, efficiency: float, delta: float) -> FeasibilityWitness | None:
    """Witness utilities when feasible at (efficiency, delta), else None."""
    feasible, dist = _solve(panel, efficiency, delta)
    if not feasible:
        return None
    utilities = dist.min(axis=0)
    utilities.setflags(write=False)
    return FeasibilityWitness(
        utilities=utilities,
        delta=_check_delta(delta),
        efficiency=_check_efficiency(efficiency),
    )


@lru_cache(maxsize=32)
def _cached_grid(step: float) -> NDArray[np.float64]:
    count = int(math.floor((1.0 + 1e-9) / step))
    grid = step * np.arange(1, count + 1, dtype=np.float64)
    if abs(grid[-1] - 1.0) <= 1e-9:
        grid[-1] = 1.0
    else:
        grid = np.append(grid, 1.0)
    grid.setflags(write=False)
    return grid


def delta_grid(step: float) -> NDArray[np.float64]:
    """Discount-factor grid {step, 2*step, ...} capped at and including 1.0."""
    step = float(step)
    if not 0.0 < step < 1.0:
        raise ValueError(f"grid step must lie in (0, 1), got {step!r}")
    return _cached_grid(step)


@dataclass(frozen=True, eq=False)
class IdentifiedSet:
    """Discount factors consistent with the data at one efficiency level.

    Holds the full feasibility mask over the grid so callers can refine;
    bounds and midpoint are derived. An empty set (possible when the
    efficiency level exceeds the certified EEI) has None bounds.
    """

    grid_step: float
    grid: NDArray[np.float64]
    feasible_mask: NDArray[np.bool_]

    def __post_init__(self) -> None:
        if self.grid.shape != self.feasible_mask.shape:
            raise ValueError("grid and feasibility mask must have identical shape")

    @property
    def is_empty(self) -> bool:
        return not bool(self.feasible_mask.any())

    @property
    def lower(self) -> float | None:
        if self.is_empty:
            return None
        return float(self.grid[int(np.argmax(self.feasible_mask))])

    @property
    def upper(self) -> float | None:
        if self.is_empty:
            return None
        last = len(self.feasible_mask) - 1 - int(np.argmax(self.feasible_mask[::-1]))
        return float(self.grid[last])

    @property
    def midpoint(self) -> float | None:
        if self.is_empty:
            return None
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self) -> float | None:
        if self.is_empty:
            return None
        return self.upper - self.lower

    @property
    def contiguous(self) -> bool:
        """True when the feasible grid points form one unbroken run."""
        if self.is_empty:
            return True
        first = int(np.argmax(self.feasible_mask))
        last = len(self.feasible_mask) - 1 - int(np.argmax(self.feasible_mask[::-1]))
        return bool(self.feasible_mask[first : last + 1].all())


def identified_set(panel: DeflatedPanel, efficiency: float,
                   grid_step: float = DEFAULT_BOUNDS_STEP) -> IdentifiedSet:
    """Evaluate feasibility at every grid discount factor for one efficiency."""
    efficiency = _check_efficiency(efficiency)
    grid = delta_grid(grid_step)
    mask = np.fromiter(
        (ed_feasible(panel, efficiency, delta) for delta in grid),
        dtype=bool,
        count=grid.size,
    )
    mask.setflags(write=False)
    return IdentifiedSet(grid_step=float(grid_step), grid=grid, feasible_mask=mask)


def compute_eei(panel: DeflatedPanel, delta_step: float = DEFAULT_DELTA_STEP,
                tol: float = DEFAULT_EFFICIENCY_TOL) -> tuple[float, float]:
    """Exponential efficiency index with a witnessing discount factor.

    Bisects on the efficiency level; a trial level counts as feasible when
    any grid discount factor admits a solution. Returns the certified lower
    bracket endpoint (exactly 1.0 when the unrelaxed model fits) together
    with a discount factor that witnessed feasibility there.
    """
    grid = delta_grid(delta_step)
    witnessed: dict[str, float] = {}

    def feasible_at(efficiency: float) -> bool:
        for delta in grid:
            if ed_feasible(panel, efficiency, delta):
                witnessed["delta"] = float(delta)
                return True
        return False

    eei = certified_sup(feasible_at, tol)
    return eei, witnessed["delta"]
