"""Ground-truth generators: exact exponential discounters and fuzz panels.

The Cobb-Douglas family is used because its budget-free per-period maximizer
is closed form: good l at period t gets quantity weight_l * delta**t / price.
That makes generated panels exact oracles for the test engines, with no inner
numerical solver to second-guess.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .dataset import DeflatedPanel


@dataclass(frozen=True, eq=False)
class CobbDouglasConsumer:
    """Log-utility weights (positive, summing to 1) and a true discount factor."""

    weights: NDArray[np.float64]
    delta_true: float

    def __post_init__(self) -> None:
        weights = np.array(self.weights, dtype=np.float64)
        if weights.ndim != 1 or weights.size == 0:
            raise ValueError("weights must be a nonempty vector")
        if not np.all(weights > 0.0):
            raise ValueError("weights must be strictly positive")
        if abs(weights.sum() - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {weights.sum()!r}")
        if not 0.0 < self.delta_true <= 1.0:
            raise ValueError(f"delta_true must lie in (0, 1], got {self.delta_true!r}")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @property
    def num_goods(self) -> int:
        return self.weights.size


def generate_ed_panel(consumer: CobbDouglasConsumer, discounted_prices,
                      household_id: str = "synthetic") -> DeflatedPanel:
    """Exact per-period optimizer of the discounting model at given prices.

    Quantities follow the first-order condition in closed form, so the
    resulting panel is rationalizable by construction with the consumer's
    true discount factor.
    """
    prices = np.asarray(discounted_prices, dtype=np.float64)
    if prices.ndim != 2:
        raise ValueError(f"discounted_prices must be 2-D, got shape {prices.shape}")
    if prices.shape[1] != consumer.num_goods:
        raise ValueError(
            f"price matrix has {prices.shape[1]} goods but consumer has {consumer.num_goods}"
        )
    if not np.all(np.isfinite(prices)) or not np.all(prices > 0.0):
        raise ValueError("discounted prices must be finite and strictly positive")
    periods = np.arange(prices.shape[0], dtype=np.float64)
    quantities = consumer.weights[None, :] * consumer.delta_true ** periods[:, None] / prices
    return DeflatedPanel(
        household_id=household_id,
        discounted_prices=prices,
        quantities=quantities,
    )


def perturb_panel(panel: DeflatedPanel, noise_scale: float, seed: int) -> DeflatedPanel:
    """Multiply each quantity by an independent log-uniform factor.

    Factors are drawn from exp(Uniform(log(1 - s), log(1 + s))); the output
    is deterministic given the seed, and a zero scale returns quantities
    unchanged.
    """
    if not 0.0 <= noise_scale < 1.0:
        raise ValueError(f"noise_scale must lie in [0, 1), got {noise_scale!r}")
    if noise_scale == 0.0:
        return panel
    rng = np.random.default_rng(seed)
    low, high = np.log1p(-noise_scale), np.log1p(noise_scale)
    factors = np.exp(rng.uniform(low, high, size=panel.quantities.shape))
    return DeflatedPanel(
        household_id=panel.household_id,
        discounted_prices=panel.discounted_prices,
        quantities=panel.quantities * factors,
    )


def random_panel(rng: np.random.Generator, num_periods: int, num_goods: int,
                 low: float = 0.1, high: float = 10.0,
                 household_id: str = "random") -> DeflatedPanel:
    """Fuzz instance with log-uniform prices and quantities; not rational by design."""
    if num_periods < 1 or num_goods < 1:
        raise ValueError("panel needs at least one period and one good")
    if not 0.0 < low < high:
        raise ValueError(f"need 0 < low < high, got {low!r}, {high!r}")
    shape = (num_periods, num_goods)
    log_low, log_high = np.log(low), np.log(high)
    return DeflatedPanel(
        household_id=household_id,
        discounted_prices=np.exp(rng.uniform(log_low, log_high, size=shape)),
        quantities=np.exp(rng.uniform(log_low, log_high, size=shape)),
    )
