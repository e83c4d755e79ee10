"""Index decomposition, per-household reports, and population aggregation.

The three indices satisfy EEI = CCEI * TCEI: total departure from the
discounting model splits into a static-rationality component (CCEI) and a
time-consistency component (TCEI). The TCEI is recovered as the quotient of
the other two rather than by re-running a two-stage search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import DeflatedPanel
from .defaults import DEFAULT_BOUNDS_STEP, DEFAULT_DELTA_STEP, DEFAULT_EFFICIENCY_TOL
from .discounting import IdentifiedSet, compute_eei, identified_set
from .garp import compute_ccei


@dataclass(frozen=True)
class AnalysisConfig:
    """Grid steps and certification tolerance for one analysis run."""

    delta_step: float = DEFAULT_DELTA_STEP
    bounds_step: float = DEFAULT_BOUNDS_STEP
    tol: float = DEFAULT_EFFICIENCY_TOL

    def __post_init__(self) -> None:
        if not 0.0 < self.delta_step < 1.0:
            raise ValueError(f"delta_step must lie in (0, 1), got {self.delta_step!r}")
        if not 0.0 < self.bounds_step < 1.0:
            raise ValueError(f"bounds_step must lie in (0, 1), got {self.bounds_step!r}")
        if self.tol <= 0.0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")


def compute_tcei(ccei: float, eei: float, tol: float = DEFAULT_EFFICIENCY_TOL) -> float:
    """Time-consistency index: eei / ccei, clamped to (0, 1] within 2*tol slack.

    An EEI exceeding the CCEI by more than the combined certification slack
    signals an engine bug and raises rather than clamping it away.
    """
    if not 0.0 < ccei <= 1.0 or not 0.0 < eei <= 1.0:
        raise ValueError(f"indices must lie in (0, 1], got ccei={ccei!r}, eei={eei!r}")
    if eei > ccei + 2.0 * tol:
        raise ValueError(
            f"eei={eei!r} exceeds ccei={ccei!r} beyond tolerance {2.0 * tol!r}; "
            "this violates the index decomposition and indicates an engine bug"
        )
    return min(1.0, eei / ccei)


@dataclass(frozen=True, eq=False)
class EfficiencyReport:
    """All efficiency indices and the discount-factor set for one household."""

    household_id: str
    ccei: float
    eei: float
    tcei: float
    best_delta: float
    tol: float
    identified_set: IdentifiedSet

    def __post_init__(self) -> None:
        for name in ("ccei", "eei", "tcei"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name}={value!r} outside (0, 1]")
        slack = 2.0 * self.tol
        if self.eei > self.ccei + slack:
            raise ValueError(f"eei={self.eei!r} exceeds ccei={self.ccei!r} beyond {slack!r}")
        if abs(self.tcei * self.ccei - self.eei) > slack:
            raise ValueError(
                f"decomposition identity broken: tcei*ccei={self.tcei * self.ccei!r} "
                f"vs eei={self.eei!r} beyond {slack!r}"
            )


def analyze_household(panel: DeflatedPanel,
                      config: AnalysisConfig = AnalysisConfig()) -> EfficiencyReport:
    """Full per-household analysis: CCEI, EEI, TCEI, and the identified set.

    The identified set is evaluated at the certified EEI, which guarantees it
    is nonempty (up to knife-edge float coincidences between the two grids).
    """
    ccei = compute_ccei(panel, tol=config.tol)
    eei, best_delta = compute_eei(panel, delta_step=config.delta_step, tol=config.tol)
    tcei = compute_tcei(ccei, eei, tol=config.tol)
    bounds = identified_set(panel, eei, grid_step=config.bounds_step)
    return EfficiencyReport(
        household_id=panel.household_id,
        ccei=ccei,
        eei=eei,
        tcei=tcei,
        best_delta=best_delta,
        tol=config.tol,
        identified_set=bounds,
    )


@dataclass(frozen=True)
class SummaryStats:
    """Min, max, mean, and population standard deviation of one quantity."""

    minimum: float
    maximum: float
    mean: float
    sd: float


def _stats(values: np.ndarray) -> SummaryStats:
    return SummaryStats(
        minimum=float(values.min()),
        maximum=float(values.max()),
        mean=float(values.mean()),
        sd=float(values.std()),  # population denominator n
    )


@dataclass(frozen=True)
class PopulationSummary:
    """Population statistics over per-household reports.

    Standard deviations use the population denominator n. The identified-set
    rows summarize interval width (upper minus lower) and interval midpoint.
    """

    n: int
    ccei: SummaryStats
    tcei: SummaryStats
    eei: SummaryStats
    set_width: SummaryStats
    delta_midpoint: SummaryStats


def summarize(reports) -> PopulationSummary:
    """Aggregate reports; permutation-invariant in the input order."""
    reports = list(reports)
    if not reports:
        raise ValueError("cannot summarize an empty report list")
    for report in reports:
        if report.identified_set.is_empty:
            raise ValueError(
                f"household {report.household_id!r} has an empty identified set; "
                "evaluate bounds at the certified EEI before summarizing"
            )
    return PopulationSummary(
        n=len(reports),
        ccei=_stats(np.array([r.ccei for r in reports])),
        tcei=_stats(np.array([r.tcei for r in reports])),
        eei=_stats(np.array([r.eei for r in reports])),
        set_width=_stats(np.array([r.identified_set.width for r in reports])),
        delta_midpoint=_stats(np.array([r.identified_set.midpoint for r in reports])),
    )
