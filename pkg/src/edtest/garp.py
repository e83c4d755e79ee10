"""Static rationality: GARP at an efficiency level, and the CCEI.

At efficiency e, bundle t is weakly revealed preferred to bundle s when
e times the cost of t's own bundle (at t's prices) still covers the cost of
s's bundle; strictly when it exceeds it. GARP holds when no chain of weak
preferences loops back through a strict one. The CCEI is the largest e at
which GARP survives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ._search import certified_sup
from .dataset import DeflatedPanel
from .defaults import DEFAULT_EFFICIENCY_TOL


@dataclass(frozen=True, eq=False)
class RevealedPreferenceRelation:
    """Direct weak/strict revealed-preference matrices at one efficiency level.

    ``direct[t, s]`` is True iff e * cost_t(bundle_t) >= cost_t(bundle_s);
    ``strict`` uses a strict inequality. No transitive closure is applied.
    """

    direct: NDArray[np.bool_]
    strict: NDArray[np.bool_]
    efficiency: float


def _check_efficiency(efficiency: float) -> float:
    efficiency = float(efficiency)
    if not 0.0 < efficiency <= 1.0:
        raise ValueError(f"efficiency must lie in (0, 1], got {efficiency!r}")
    return efficiency


def build_relation(panel: DeflatedPanel, efficiency: float) -> RevealedPreferenceRelation:
    efficiency = _check_efficiency(efficiency)
    cross = panel.cross_expenditure
    budget = efficiency * cross.diagonal()
    return RevealedPreferenceRelation(
        direct=budget[:, None] >= cross,
        strict=budget[:, None] > cross,
        efficiency=efficiency,
    )


def _transitive_closure(adjacency: NDArray[np.bool_]) -> NDArray[np.bool_]:
    # Boolean Floyd-Warshall; reach[t, s] = path of length >= 1 from t to s.
    reach = adjacency.copy()
    for k in range(reach.shape[0]):
        reach |= reach[:, k, None] & reach[None, k, :]
    return reach


def check_egarp(panel: DeflatedPanel, efficiency: float) -> bool:
    """True iff the panel satisfies GARP at the given efficiency level.

    A violation is a pair (t, s) with t reaching s through the weak relation
    while s is directly strictly preferred over t.
    """
    relation = build_relation(panel, efficiency)
    reach = _transitive_closure(relation.direct)
    return not bool(np.any(reach & relation.strict.T))


def compute_ccei(panel: DeflatedPanel, tol: float = DEFAULT_EFFICIENCY_TOL) -> float:
    """Critical cost efficiency index, certified by bisection.

    Returns an efficiency at which :func:`check_egarp` passes, within ``tol``
    of the true threshold; exactly 1.0 when the panel passes unrelaxed.
    """
    return certified_sup(lambda e: check_egarp(panel, e), tol)
