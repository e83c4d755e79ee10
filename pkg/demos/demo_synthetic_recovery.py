#!/usr/bin/env python3
"""Population experiment: exact discounters, then increasing choice noise.

Generates a cohort of Cobb-Douglas discounters, perturbs their quantities
with multiplicative noise, and tracks how the population efficiency indices
respond. With no noise every index sits at 1 and the identified sets cover
the true discount factors. Moderate noise mostly tightens or shifts the sets
while the data stay rationalizable; heavy noise finally drags the EEI down.
"""

import numpy as np

from edtest import (
    AnalysisConfig,
    CobbDouglasConsumer,
    analyze_household,
    generate_ed_panel,
    perturb_panel,
    summarize,
)

COHORT = 15
PERIODS = 26
GOODS = 5
TRUE_DELTAS = (0.86, 0.90, 0.94)

rng = np.random.default_rng(77)
base_panels = []
for i in range(COHORT):
    weights = rng.dirichlet(np.ones(GOODS))
    consumer = CobbDouglasConsumer(weights / weights.sum(), TRUE_DELTAS[i % 3])
    prices = np.exp(rng.uniform(np.log(0.5), np.log(2.0), size=(PERIODS, GOODS)))
    base_panels.append(generate_ed_panel(consumer, prices, household_id=f"hh-{i:02d}"))

config = AnalysisConfig(bounds_step=0.01)  # coarse bounds keep the sweep quick

print(f"{'noise':>6} | {'mean CCEI':>9} {'mean EEI':>9} {'mean TCEI':>9} | "
      f"{'mean IS width':>13} {'mean midpoint':>13}")
print("-" * 72)
for noise in (0.0, 0.2, 0.4, 0.6, 0.8):
    reports = []
    for i, panel in enumerate(base_panels):
        noisy = perturb_panel(panel, noise, seed=1000 + i) if noise else panel
        reports.append(analyze_household(noisy, config))
    summary = summarize(reports)
    print(
        f"{noise:>6.1f} | {summary.ccei.mean:>9.4f} {summary.eei.mean:>9.4f} "
        f"{summary.tcei.mean:>9.4f} | {summary.set_width.mean:>13.4f} "
        f"{summary.delta_midpoint.mean:>13.4f}"
    )

print("\nsame experiment through the command line:")
print("  edtest synth --households 15 --periods 26 --goods 5 \\")
print("      --noise-scale 0.4 --seed 77 --out cohort.csv --truth truth.csv")
print("  edtest analyze --panel cohort.csv --out-dir results/")
