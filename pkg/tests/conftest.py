import numpy as np
import pytest

from edtest import DeflatedPanel


@pytest.fixture
def two_period_violation() -> DeflatedPanel:
    """Mutual strict preference at full efficiency; boundary exactly at 0.8.

    Both cross expenditures are 4 against own expenditures of 5, so every
    efficiency above 0.8 produces a strict two-cycle.
    """
    return DeflatedPanel(
        household_id="violation",
        discounted_prices=np.array([[1.0, 2.0], [2.0, 1.0]]),
        quantities=np.array([[1.0, 2.0], [2.0, 1.0]]),
    )


@pytest.fixture
def single_observation() -> DeflatedPanel:
    return DeflatedPanel(
        household_id="solo",
        discounted_prices=np.array([[1.0, 3.0]]),
        quantities=np.array([[2.0, 0.5]]),
    )


@pytest.fixture
def rising_consumption() -> DeflatedPanel:
    """Consumption doubles at constant prices; consistent only with delta = 1."""
    return DeflatedPanel(
        household_id="rising",
        discounted_prices=np.array([[1.0, 1.0], [1.0, 1.0]]),
        quantities=np.array([[1.0, 0.0], [2.0, 0.0]]),
    )
