"""Domain model for consumption panels and interest rates.

A household panel holds spot prices and chosen quantities over consecutive
periods. Before any rationality test runs, spot prices are deflated by the
cumulative gross interest factor, with the first-period rate pinned to zero,
so that all tests operate on discounted prices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

PER_PERIOD = "per-period"
QUARTERLY = "quarterly-source"


class PanelValidationError(ValueError):
    """Raised when panel or rate data violates a structural requirement."""


def _as_matrix(values, name: str) -> NDArray[np.float64]:
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise PanelValidationError(
            f"{name} must be a 2-D matrix with at least one period and one good, "
            f"got shape {arr.shape}"
        )
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HouseholdPanel:
    """One consumer's spot prices and quantities, shaped (periods, goods).

    Prices must be strictly positive and quantities nonnegative; both
    matrices must be finite and share dimensions.
    """

    household_id: str
    spot_prices: NDArray[np.float64]
    quantities: NDArray[np.float64]

    def __post_init__(self) -> None:
        prices = _as_matrix(self.spot_prices, "spot_prices")
        quantities = _as_matrix(self.quantities, "quantities")
        if prices.shape != quantities.shape:
            raise PanelValidationError(
                f"household {self.household_id!r}: spot_prices shape {prices.shape} "
                f"does not match quantities shape {quantities.shape}"
            )
        if not np.all(np.isfinite(prices)) or not np.all(prices > 0.0):
            raise PanelValidationError(
                f"household {self.household_id!r}: spot prices must be finite and strictly positive"
            )
        if not np.all(np.isfinite(quantities)) or not np.all(quantities >= 0.0):
            raise PanelValidationError(
                f"household {self.household_id!r}: quantities must be finite and nonnegative"
            )
        object.__setattr__(self, "spot_prices", prices)
        object.__setattr__(self, "quantities", quantities)

    @property
    def num_periods(self) -> int:
        return self.spot_prices.shape[0]

    @property
    def num_goods(self) -> int:
        return self.spot_prices.shape[1]


@dataclass(frozen=True, eq=False)
class RateSeries:
    """Per-period interest rates (0.01 means 1%).

    ``frequency`` records whether the series is already per-period or was
    loaded from a quarterly source and still needs interpolation. Every rate
    must exceed -1 so gross factors stay positive.
    """

    rates: NDArray[np.float64]
    frequency: str = PER_PERIOD

    def __post_init__(self) -> None:
        rates = np.array(self.rates, dtype=np.float64)
        if rates.ndim != 1 or rates.size == 0:
            raise PanelValidationError("rates must be a nonempty 1-D vector")
        if not np.all(np.isfinite(rates)) or not np.all(rates > -1.0):
            raise PanelValidationError("every interest rate must be finite and > -1")
        if self.frequency not in (PER_PERIOD, QUARTERLY):
            raise PanelValidationError(f"unknown rate frequency tag {self.frequency!r}")
        rates.setflags(write=False)
        object.__setattr__(self, "rates", rates)

    def __len__(self) -> int:
        return self.rates.size

    def aligned(self, num_periods: int) -> NDArray[np.float64]:
        """First ``num_periods`` rates with the opening rate forced to zero.

        The first-period rate is a modelling convention, not data, so it is
        overwritten regardless of the stored value.
        """
        if self.frequency != PER_PERIOD:
            raise PanelValidationError(
                "quarterly-source rates must be interpolated to per-period before alignment"
            )
        if self.rates.size < num_periods:
            raise PanelValidationError(
                f"rate series has {self.rates.size} entries but the panel needs {num_periods}"
            )
        out = self.rates[:num_periods].copy()
        out[0] = 0.0
        return out


@dataclass(frozen=True, eq=False)
class DeflatedPanel:
    """Discounted prices plus quantities; the object every test consumes."""

    household_id: str
    discounted_prices: NDArray[np.float64]
    quantities: NDArray[np.float64]

    def __post_init__(self) -> None:
        prices = _as_matrix(self.discounted_prices, "discounted_prices")
        quantities = _as_matrix(self.quantities, "quantities")
        if prices.shape != quantities.shape:
            raise PanelValidationError(
                f"household {self.household_id!r}: price/quantity shape mismatch "
                f"{prices.shape} vs {quantities.shape}"
            )
        if not np.all(np.isfinite(prices)) or not np.all(prices > 0.0):
            raise PanelValidationError(
                f"household {self.household_id!r}: discounted prices must be finite and positive"
            )
        if not np.all(np.isfinite(quantities)) or not np.all(quantities >= 0.0):
            raise PanelValidationError(
                f"household {self.household_id!r}: quantities must be finite and nonnegative"
            )
        object.__setattr__(self, "discounted_prices", prices)
        object.__setattr__(self, "quantities", quantities)

    @property
    def num_periods(self) -> int:
        return self.discounted_prices.shape[0]

    @property
    def num_goods(self) -> int:
        return self.discounted_prices.shape[1]

    @cached_property
    def cross_expenditure(self) -> NDArray[np.float64]:
        """Matrix whose (t, s) entry is the cost of bundle s at period-t prices."""
        out = self.discounted_prices @ self.quantities.T
        out.setflags(write=False)
        return out

    @property
    def own_expenditure(self) -> NDArray[np.float64]:
        return self.cross_expenditure.diagonal()


def interpolate_rates(quarterly_rates, periods_per_quarter: int) -> RateSeries:
    """Expand quarterly rate anchors to a per-period series by linear interpolation.

    Output length is ``(len(quarterly_rates) - 1) * periods_per_quarter + 1``;
    anchor positions reproduce the inputs exactly.
    """
    anchors = np.asarray(quarterly_rates, dtype=np.float64)
    if anchors.ndim != 1 or anchors.size == 0:
        raise PanelValidationError("quarterly rates must be a nonempty vector")
    if not np.all(np.isfinite(anchors)) or not np.all(anchors > -1.0):
        raise PanelValidationError("every quarterly rate must be finite and > -1")
    if int(periods_per_quarter) != periods_per_quarter or periods_per_quarter < 1:
        raise PanelValidationError("periods_per_quarter must be a positive integer")
    periods_per_quarter = int(periods_per_quarter)
    num_out = (anchors.size - 1) * periods_per_quarter + 1
    positions = np.arange(num_out, dtype=np.float64)
    anchor_positions = np.arange(anchors.size, dtype=np.float64) * periods_per_quarter
    values = np.interp(positions, anchor_positions, anchors)
    return RateSeries(values, frequency=PER_PERIOD)


def annual_to_per_period(annual_rate: float, days_per_period: float,
                         days_per_year: float = 365.25) -> float:
    """Convert an annualized rate to an n-day-period rate by compounding.

    Uses ``(1 + annual) ** (days_per_period / days_per_year) - 1``. This is a
    convention, not a law; pass a different ``days_per_year`` or bypass the
    helper entirely if your source quotes rates under another compounding rule.
    """
    if annual_rate <= -1.0:
        raise PanelValidationError("annual rate must be > -1")
    if days_per_period <= 0 or days_per_year <= 0:
        raise PanelValidationError("day counts must be positive")
    return float((1.0 + annual_rate) ** (days_per_period / days_per_year) - 1.0)


def zero_rates(num_periods: int) -> RateSeries:
    """Rate series of zeros; deflation with it leaves prices unchanged."""
    return RateSeries(np.zeros(max(int(num_periods), 1)), frequency=PER_PERIOD)


def deflate_prices(panel: HouseholdPanel, rates: RateSeries) -> DeflatedPanel:
    """Divide each period's spot prices by the cumulative gross interest factor.

    Period t prices are divided by the product of (1 + rate) over periods
    0..t; with the first rate pinned to zero, period-0 prices pass through
    unchanged. Quantities are copied as-is.
    """
    aligned = rates.aligned(panel.num_periods)
    factors = np.cumprod(1.0 + aligned)
    discounted = panel.spot_prices / factors[:, None]
    if not np.all(np.isfinite(discounted)) or not np.all(discounted > 0.0):
        raise RuntimeError(
            f"household {panel.household_id!r}: deflation produced a nonpositive or "
            "non-finite price; input validation should have prevented this"
        )
    return DeflatedPanel(
        household_id=panel.household_id,
        discounted_prices=discounted,
        quantities=panel.quantities,
    )
