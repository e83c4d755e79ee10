"""Brute-force reference checks by exhaustive enumeration.

These verifiers decide the same questions as the production engines but by
listing every simple cycle (or preference sequence) explicitly. They are
deliberately naive, capped at 8 observations, and shipped so the equivalence
can be spot-checked on real data, not just in the test suite.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .dataset import DeflatedPanel
from .discounting import _NEG_CYCLE_RTOL
from .garp import _check_efficiency

MAX_NODES = 8


def _check_size(panel: DeflatedPanel) -> int:
    n = panel.num_periods
    if n > MAX_NODES:
        raise ValueError(f"panel has {n} periods; enumeration is capped at {MAX_NODES}")
    return n


@lru_cache(maxsize=MAX_NODES + 1)
def _directed_cycles(n: int) -> tuple[np.ndarray, ...]:
    """Every simple directed cycle on n nodes, as index arrays grouped by length.

    Rotations are deduplicated by pinning each cycle to start at its smallest
    node; both orientations are kept since edge weights are asymmetric.
    """
    grouped = []
    for size in range(2, n + 1):
        cycles = []
        for nodes in combinations(range(n), size):
            first, *rest = nodes
            for tail in permutations(rest):
                cycles.append((first, *tail))
        grouped.append(np.array(cycles, dtype=np.intp))
    return tuple(grouped)


@lru_cache(maxsize=MAX_NODES + 1)
def _node_sequences(n: int) -> tuple[np.ndarray, ...]:
    """Every ordered tuple of distinct nodes, length 2..n, grouped by length."""
    grouped = []
    for size in range(2, n + 1):
        seqs = list(permutations(range(n), size))
        grouped.append(np.array(seqs, dtype=np.intp))
    return tuple(grouped)


def oracle_ed_feasible(panel: DeflatedPanel, efficiency: float, delta: float) -> bool:
    """Feasible iff every simple cycle of constraint weights sums to >= -tolerance."""
    n = _check_size(panel)
    efficiency = _check_efficiency(efficiency)
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"discount factor must lie in (0, 1], got {delta!r}")
    prices = panel.discounted_prices
    bundles = panel.quantities
    weights = np.empty((n, n))
    for t in range(n):
        for s in range(n):
            weights[t, s] = delta ** (-t) * float(
                np.dot(prices[t], bundles[s] / efficiency - bundles[t])
            )
    if n < 2:
        return True
    off_diagonal = np.abs(weights[~np.eye(n, dtype=bool)])
    tolerance = _NEG_CYCLE_RTOL * (1.0 + float(off_diagonal.max()))
    for cycles in _directed_cycles(n):
        sums = weights[cycles, np.roll(cycles, -1, axis=1)].sum(axis=1)
        if sums.min() < -tolerance:
            return False
    return True


def oracle_egarp(panel: DeflatedPanel, efficiency: float) -> bool:
    """GARP by explicit sequence enumeration instead of transitive closure.

    Fails iff some sequence t_1 R t_2 R ... R t_m of weak preferences closes
    with a strict preference of t_m over t_1.
    """
    n = _check_size(panel)
    efficiency = _check_efficiency(efficiency)
    prices = panel.discounted_prices
    bundles = panel.quantities
    direct = np.empty((n, n), dtype=bool)
    strict = np.empty((n, n), dtype=bool)
    for t in range(n):
        budget = efficiency * float(np.dot(prices[t], bundles[t]))
        for s in range(n):
            cost = float(np.dot(prices[t], bundles[s]))
            direct[t, s] = budget >= cost
            strict[t, s] = budget > cost
    # Length-1 sequences need strict(t, t), impossible at efficiency <= 1.
    for seqs in _node_sequences(n):
        chained = direct[seqs[:, :-1], seqs[:, 1:]].all(axis=1)
        closing = strict[seqs[:, -1], seqs[:, 0]]
        if bool(np.any(chained & closing)):
            return False
    return True
