#!/usr/bin/env python3
"""Population analysis of the Stanford Basket panel, if a local copy exists.

The Stanford Basket Dataset (Mendeley Data, DOI 10.17632/9js2bj7c33.2) covers
494 households' grocery purchases over two years. To analyze it here:

1. Download and preprocess it into the standard long CSV
   (household,period,good,price,quantity) with 4-week periods and a complete
   price grid (drop goods whose prices are not observed in every period).
2. Build a per-period rate series. The published analysis deflates with
   personal-loan rates at commercial banks (FRED series), quarterly, linearly
   interpolated to the monthly frequency. Quoted annual rates must be
   converted to 4-week-period rates; the compounding convention is a genuine
   degree of freedom, so this script sweeps a few and reports all of them.
3. Point EDTEST_STANFORD_PANEL at the panel CSV and (optionally)
   EDTEST_STANFORD_ANNUAL_RATES at a per-period CSV of quoted annual rates.

Reference population means at these settings (delta grid 0.01, bounds grid
0.001, certification tolerance 2**-10): CCEI 0.9551, TCEI 0.8365, EEI 0.7984,
mean identified-set midpoint 0.877.
"""

import os
import sys

import numpy as np

from edtest import (
    AnalysisConfig,
    RateSeries,
    analyze_household,
    annual_to_per_period,
    deflate_prices,
    load_panels,
    load_rates,
    summarize,
    zero_rates,
)

PANEL_ENV = "EDTEST_STANFORD_PANEL"
RATES_ENV = "EDTEST_STANFORD_ANNUAL_RATES"
DAYS_PER_PERIOD = 28.0

panel_path = os.environ.get(PANEL_ENV)
if not panel_path:
    print(f"set {PANEL_ENV} to the preprocessed panel CSV to run this demo")
    sys.exit(0)

panels = load_panels(panel_path)
print(f"loaded {len(panels)} households from {panel_path}")

rates_path = os.environ.get(RATES_ENV)
conventions = {}
if rates_path:
    quoted = load_rates(rates_path)
    conventions["compound-365.25"] = RateSeries(
        np.array([annual_to_per_period(r, DAYS_PER_PERIOD) for r in quoted.rates])
    )
    conventions["compound-360"] = RateSeries(
        np.array([annual_to_per_period(r, DAYS_PER_PERIOD, days_per_year=360.0) for r in quoted.rates])
    )
    conventions["simple-13ths"] = RateSeries(np.asarray(quoted.rates) / 13.0)
else:
    print(f"{RATES_ENV} not set; falling back to zero rates (prices taken as already discounted)")
    conventions["zero-rates"] = zero_rates(max(p.num_periods for p in panels))

config = AnalysisConfig()
for label, rates in conventions.items():
    reports = [analyze_household(deflate_prices(panel, rates), config) for panel in panels]
    summary = summarize(reports)
    print(f"\nrate convention: {label}")
    print(f"  n = {summary.n}")
    print(f"  CCEI  mean {summary.ccei.mean:.4f}  (min {summary.ccei.minimum:.4f}, "
          f"max {summary.ccei.maximum:.4f}, sd {summary.ccei.sd:.4f})")
    print(f"  TCEI  mean {summary.tcei.mean:.4f}")
    print(f"  EEI   mean {summary.eei.mean:.4f}")
    print(f"  IS width mean {summary.set_width.mean:.4f}, midpoint mean "
          f"{summary.delta_midpoint.mean:.4f}")
