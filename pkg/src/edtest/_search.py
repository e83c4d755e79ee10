"""Certified bisection over a monotone feasibility predicate on (0, 1]."""

from __future__ import annotations

from typing import Callable


def certified_sup(predicate: Callable[[float], bool], tol: float) -> float:
    """Largest value in (0, 1] certified feasible, to within ``tol``.

    ``predicate`` must be monotone: feasible at x implies feasible at every
    smaller x. Returns exactly 1.0 when 1.0 is feasible; otherwise returns
    the lower endpoint of the final bracket, which was itself evaluated and
    found feasible (never an untested midpoint). Keeps halving past ``tol``
    if no feasible point has been seen yet, so the result is always a
    genuinely certified point.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    if predicate(1.0):
        return 1.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol or lo == 0.0:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            if lo > 0.0:
                break
            raise RuntimeError("no feasible point found down to float resolution")
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return lo
