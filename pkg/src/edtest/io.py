"""CSV ingestion and serialization for panels and rate series.

Panel files use the long format ``household,period,good,price,quantity``.
Period and good may be 0-based integers or arbitrary labels; labels are
mapped to dense indices per household in first-appearance order. Every
(period, good) cell must be present exactly once per household. Parsing is
locale-independent (decimal point only).
"""

from __future__ import annotations

import numpy as np
import pandas as pd

from .dataset import PER_PERIOD, QUARTERLY, HouseholdPanel, PanelValidationError, RateSeries

PANEL_COLUMNS = ("household", "period", "good", "price", "quantity")
_MAX_REPORTED = 20


def _name_of(source) -> str:
    if isinstance(source, (str, bytes)):
        return str(source)
    return getattr(source, "name", "<stream>")


def _read_table(source, columns: tuple[str, ...]) -> pd.DataFrame:
    name = _name_of(source)
    try:
        frame = pd.read_csv(source, dtype=str, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise PanelValidationError(f"{name}: file is empty") from None
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise PanelValidationError(f"{name}: missing required column(s) {missing}")
    if frame.empty:
        raise PanelValidationError(f"{name}: no data rows")
    return frame


def _float_or_nan(token) -> float:
    try:
        return float(token)
    except (TypeError, ValueError):
        return float("nan")


def _parse_float_column(frame: pd.DataFrame, column: str, name: str) -> np.ndarray:
    # float() is correctly rounded; pandas' fast parser can be off by one ulp,
    # which would break the serialize/load round trip.
    values = np.array([_float_or_nan(token) for token in frame[column]], dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        row = frame.iloc[bad[0]]
        raise PanelValidationError(
            f"{name}: household {row['household']!r}, period {row['period']!r}, "
            f"good {row['good']!r}: {column} {row[column]!r} is not a finite number"
        )
    return values


def _dense_index(tokens: pd.Series, kind: str, household: str, name: str) -> np.ndarray:
    """Map period/good tokens to dense 0-based indices for one household.

    Integer tokens are taken literally and must already be dense from 0;
    anything else is treated as labels ordered by first appearance.
    """
    raw = tokens.to_numpy(dtype=object)
    try:
        as_int = np.array([int(tok) for tok in raw], dtype=np.int64)
    except (TypeError, ValueError):
        codes, _ = pd.factorize(tokens, sort=False)
        return codes.astype(np.int64)
    distinct = np.unique(as_int)
    expected = np.arange(distinct.size)
    if distinct.min() < 0 or not np.array_equal(distinct, expected):
        raise PanelValidationError(
            f"{name}: household {household!r}: {kind} indices {sorted(set(as_int.tolist()))} "
            f"are not dense 0..{distinct.size - 1}"
        )
    return as_int


def load_panels(source) -> list[HouseholdPanel]:
    """Parse a long-format panel CSV into one validated panel per household.

    Row order is irrelevant; households are returned in first-appearance
    order. Raises :class:`PanelValidationError` listing every offending cell
    (capped) with household/period/good coordinates.
    """
    name = _name_of(source)
    frame = _read_table(source, PANEL_COLUMNS)

    prices = _parse_float_column(frame, "price", name)
    quantities = _parse_float_column(frame, "quantity", name)

    problems: list[str] = []
    for idx in np.flatnonzero(~(prices > 0.0)):
        row = frame.iloc[idx]
        problems.append(
            f"household {row['household']!r}, period {row['period']!r}, good "
            f"{row['good']!r}: price must be > 0 (got {prices[idx]!r})"
        )
    for idx in np.flatnonzero(~(quantities >= 0.0)):
        row = frame.iloc[idx]
        problems.append(
            f"household {row['household']!r}, period {row['period']!r}, good "
            f"{row['good']!r}: quantity must be >= 0 (got {quantities[idx]!r})"
        )

    if problems:
        _raise_listing(name, problems)

    panels: list[HouseholdPanel] = []
    for household, group in frame.groupby("household", sort=False):
        period_idx = _dense_index(group["period"], "period", str(household), name)
        good_idx = _dense_index(group["good"], "good", str(household), name)
        num_periods = int(period_idx.max()) + 1
        num_goods = int(good_idx.max()) + 1

        cells = list(zip(period_idx.tolist(), good_idx.tolist()))
        present = set(cells)
        if len(present) < len(cells):
            seen: set[tuple[int, int]] = set()
            for cell, (_, row) in zip(cells, group.iterrows()):
                if cell in seen:
                    problems.append(
                        f"household {household!r}, period {row['period']!r}, good "
                        f"{row['good']!r}: duplicate cell"
                    )
                seen.add(cell)
            _raise_listing(name, problems)
        if len(present) != num_periods * num_goods:
            period_names = _token_for_index(group["period"], period_idx)
            good_names = _token_for_index(group["good"], good_idx)
            for t in range(num_periods):
                for g in range(num_goods):
                    if (t, g) not in present:
                        problems.append(
                            f"household {household!r}, period {period_names[t]!r}, good "
                            f"{good_names[g]!r}: cell missing"
                        )
            _raise_listing(name, problems)

        price_matrix = np.empty((num_periods, num_goods), dtype=np.float64)
        quantity_matrix = np.empty((num_periods, num_goods), dtype=np.float64)
        rows = group.index.to_numpy()
        price_matrix[period_idx, good_idx] = prices[rows]
        quantity_matrix[period_idx, good_idx] = quantities[rows]
        panels.append(
            HouseholdPanel(
                household_id=str(household),
                spot_prices=price_matrix,
                quantities=quantity_matrix,
            )
        )
    return panels


def _token_for_index(tokens: pd.Series, indices: np.ndarray) -> dict[int, str]:
    mapping: dict[int, str] = {}
    for tok, idx in zip(tokens.to_numpy(dtype=object), indices.tolist()):
        mapping.setdefault(int(idx), str(tok))
    return mapping


def _raise_listing(name: str, problems: list[str]) -> None:
    shown = problems[:_MAX_REPORTED]
    suffix = "" if len(problems) <= _MAX_REPORTED else f"\n... and {len(problems) - _MAX_REPORTED} more"
    raise PanelValidationError(f"{name}: invalid panel data\n" + "\n".join(shown) + suffix)


def write_panels(panels, sink) -> None:
    """Serialize panels to the long CSV format; inverse of :func:`load_panels`.

    Periods and goods are written as dense 0-based integers, so a round trip
    through :func:`load_panels` reproduces the matrices exactly.
    """
    records = []
    for panel in panels:
        for t in range(panel.num_periods):
            for g in range(panel.num_goods):
                records.append(
                    (
                        panel.household_id,
                        t,
                        g,
                        # repr gives the shortest string that parses back exactly
                        repr(float(panel.spot_prices[t, g])),
                        repr(float(panel.quantities[t, g])),
                    )
                )
    frame = pd.DataFrame.from_records(records, columns=PANEL_COLUMNS)
    frame.to_csv(sink, index=False)


def load_rates(source, quarterly: bool = False) -> RateSeries:
    """Read a rates CSV: ``period,rate`` per-period or ``quarter,rate`` quarterly.

    Rows are sorted by the index column, which must be dense integers from 0.
    A quarterly series is returned tagged for interpolation, not interpolated.
    """
    name = _name_of(source)
    index_column = "quarter" if quarterly else "period"
    frame = _read_table(source, (index_column, "rate"))
    try:
        order = frame[index_column].astype(int)
    except ValueError:
        raise PanelValidationError(f"{name}: {index_column} column must be integer") from None
    frame = frame.assign(_order=order).sort_values("_order")
    positions = frame["_order"].to_numpy()
    if positions[0] != 0 or not np.array_equal(positions, np.arange(positions.size)):
        raise PanelValidationError(f"{name}: {index_column} indices must be dense 0..n-1")
    rates = np.array([_float_or_nan(token) for token in frame["rate"]], dtype=np.float64)
    if not np.all(np.isfinite(rates)):
        bad = int(positions[np.flatnonzero(~np.isfinite(rates))[0]])
        raise PanelValidationError(f"{name}: rate at {index_column} {bad} is not a finite number")
    return RateSeries(rates, frequency=QUARTERLY if quarterly else PER_PERIOD)
