"""Batch front end: analyze populations, generate synthetic panels, spot-check.

Subcommands:
  analyze  ingest a panel CSV (plus optional rates), write per-household
           JSON-lines reports and a population summary CSV
  synth    write a deterministic synthetic panel CSV of exact discounters
  verify   compare the fast engines against the brute-force checks on a
           small panel over a probe grid of parameters

Exit codes: 0 success, 1 validation failure (or verify disagreement),
2 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .dataset import (
    DeflatedPanel,
    HouseholdPanel,
    PanelValidationError,
    deflate_prices,
    interpolate_rates,
    zero_rates,
)
from .defaults import DEFAULT_BOUNDS_STEP, DEFAULT_DELTA_STEP, DEFAULT_EFFICIENCY_TOL
from .discounting import ed_feasible
from .garp import check_egarp
from .indices import AnalysisConfig, EfficiencyReport, analyze_household, summarize
from .io import load_panels, load_rates, write_panels
from .oracle import MAX_NODES, oracle_ed_feasible, oracle_egarp
from .synth import CobbDouglasConsumer, generate_ed_panel, perturb_panel

_VERIFY_EFFICIENCIES = (0.5, 0.8, 0.95, 1.0)
_VERIFY_DELTAS = (0.25, 0.5, 0.9, 1.0)


def _add_rate_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rates", help="rates CSV (period,rate); omit for zero rates")
    parser.add_argument(
        "--rates-quarterly",
        action="store_true",
        help="treat the rates CSV as quarterly (quarter,rate) and interpolate",
    )
    parser.add_argument(
        "--periods-per-quarter",
        type=int,
        default=3,
        help="interpolation factor when --rates-quarterly is set (default 3)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edtest",
        description="Efficiency indices and discount-factor bounds for consumption panels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze every household in a panel CSV")
    analyze.add_argument("--panel", required=True, help="long-format panel CSV")
    _add_rate_flags(analyze)
    analyze.add_argument("--delta-step", type=float, default=DEFAULT_DELTA_STEP,
                         help="discount-factor grid step for the EEI search")
    analyze.add_argument("--bounds-step", type=float, default=DEFAULT_BOUNDS_STEP,
                         help="discount-factor grid step for identified-set bounds")
    analyze.add_argument("--e-tol", type=float, default=DEFAULT_EFFICIENCY_TOL,
                         help="bisection tolerance for efficiency indices")
    analyze.add_argument("--out-dir", required=True, help="directory for report files")
    analyze.add_argument("--jobs", type=int, default=1, help="worker processes")
    analyze.set_defaults(func=cmd_analyze)

    synth = sub.add_parser("synth", help="generate a synthetic panel of exact discounters")
    synth.add_argument("--households", type=int, default=10)
    synth.add_argument("--periods", type=int, default=26, help="number of periods per household")
    synth.add_argument("--goods", type=int, default=5)
    synth.add_argument("--delta-min", type=float, default=0.85)
    synth.add_argument("--delta-max", type=float, default=0.99)
    synth.add_argument("--noise-scale", type=float, default=0.0,
                       help="log-uniform quantity noise half-width in [0, 1)")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", required=True, help="output panel CSV path")
    synth.add_argument("--truth", help="optional CSV recording each household's true delta")
    synth.set_defaults(func=cmd_synth)

    verify = sub.add_parser("verify", help="engines vs brute-force checks on a small panel")
    verify.add_argument("--panel", required=True, help="long-format panel CSV")
    _add_rate_flags(verify)
    verify.set_defaults(func=cmd_verify)

    return parser


def _load_deflated(args) -> list[DeflatedPanel]:
    panels = load_panels(args.panel)
    if args.rates:
        rates = load_rates(args.rates, quarterly=args.rates_quarterly)
        if args.rates_quarterly:
            rates = interpolate_rates(rates.rates, args.periods_per_quarter)
    else:
        rates = zero_rates(max(p.num_periods for p in panels))
    return [deflate_prices(panel, rates) for panel in panels]


def _analyze_worker(task: tuple[DeflatedPanel, AnalysisConfig]) -> EfficiencyReport:
    panel, config = task
    return analyze_household(panel, config)


def _report_record(report: EfficiencyReport) -> dict:
    bounds = report.identified_set
    return {
        "household_id": report.household_id,
        "ccei": report.ccei,
        "eei": report.eei,
        "tcei": report.tcei,
        "best_delta": report.best_delta,
        "tol": report.tol,
        "identified_set": {
            "grid_step": bounds.grid_step,
            "lower": bounds.lower,
            "upper": bounds.upper,
            "midpoint": bounds.midpoint,
            "contiguous": bounds.contiguous,
            "feasible_mask": "".join("1" if f else "0" for f in bounds.feasible_mask),
        },
    }


def _summary_rows(summary) -> list[tuple[str, float, float, float, float]]:
    return [
        (label, stats.minimum, stats.maximum, stats.mean, stats.sd)
        for label, stats in (
            ("ccei", summary.ccei),
            ("tcei", summary.tcei),
            ("eei", summary.eei),
            ("is_width", summary.set_width),
            ("delta_midpoint", summary.delta_midpoint),
        )
    ]


def cmd_analyze(args) -> int:
    panels = _load_deflated(args)
    config = AnalysisConfig(delta_step=args.delta_step, bounds_step=args.bounds_step, tol=args.e_tol)

    tasks = [(panel, config) for panel in panels]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_analyze_worker, tasks))
    else:
        reports = [_analyze_worker(task) for task in tasks]
    reports.sort(key=lambda r: r.household_id)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports_path = out_dir / "reports.jsonl"
    with reports_path.open("w", encoding="utf-8") as handle:
        for report in reports:
            handle.write(json.dumps(_report_record(report)) + "\n")

    summary = summarize(reports)
    summary_path = out_dir / "summary.csv"
    with summary_path.open("w", encoding="utf-8") as handle:
        handle.write("statistic,min,max,mean,sd\n")
        for label, *values in _summary_rows(summary):
            handle.write(label + "," + ",".join(repr(v) for v in values) + "\n")

    print(f"analyzed {summary.n} household(s)")
    print(f"  ccei mean {summary.ccei.mean:.4f}  eei mean {summary.eei.mean:.4f}  "
          f"tcei mean {summary.tcei.mean:.4f}")
    print(f"wrote {reports_path} and {summary_path}")
    return 0


def cmd_synth(args) -> int:
    if args.households < 1 or args.periods < 1 or args.goods < 1:
        raise PanelValidationError("households, periods, and goods must all be positive")
    if not 0.0 < args.delta_min <= args.delta_max <= 1.0:
        raise PanelValidationError(
            f"need 0 < delta-min <= delta-max <= 1, got [{args.delta_min}, {args.delta_max}]"
        )
    if not 0.0 <= args.noise_scale < 1.0:
        raise PanelValidationError(f"noise-scale must lie in [0, 1), got {args.noise_scale}")

    rng = np.random.default_rng(args.seed)
    width = len(str(args.households - 1))
    panels = []
    truths: list[tuple[str, float]] = []
    for i in range(args.households):
        household_id = f"synth-{i:0{width}d}"
        delta = float(rng.uniform(args.delta_min, args.delta_max))
        weights = rng.dirichlet(np.ones(args.goods))
        weights = weights / weights.sum()
        prices = np.exp(rng.uniform(np.log(0.5), np.log(2.0), size=(args.periods, args.goods)))
        consumer = CobbDouglasConsumer(weights=weights, delta_true=delta)
        panel = generate_ed_panel(consumer, prices, household_id=household_id)
        if args.noise_scale > 0.0:
            panel = perturb_panel(panel, args.noise_scale, seed=int(rng.integers(2**31)))
        panels.append(HouseholdPanel(household_id, panel.discounted_prices, panel.quantities))
        truths.append((household_id, delta))

    # Synthetic prices are already discounted; the written CSV pairs with
    # zero rates on the analyze side.
    write_panels(panels, args.out)
    print(f"wrote {args.households} household(s) to {args.out}")
    if args.truth:
        with open(args.truth, "w", encoding="utf-8") as handle:
            handle.write("household_id,delta_true\n")
            for household_id, delta in truths:
                handle.write(f"{household_id},{delta!r}\n")
        print(f"wrote true discount factors to {args.truth}")
    return 0


def cmd_verify(args) -> int:
    panels = _load_deflated(args)
    oversized = [p.household_id for p in panels if p.num_periods > MAX_NODES]
    if oversized:
        raise PanelValidationError(
            f"verify is capped at {MAX_NODES} periods; too large: {oversized}"
        )
    disagreements = 0
    for panel in panels:
        checks = 0
        for e in _VERIFY_EFFICIENCIES:
            if check_egarp(panel, e) != oracle_egarp(panel, e):
                disagreements += 1
                print(f"  MISMATCH garp household={panel.household_id!r} e={e}")
            checks += 1
            for delta in _VERIFY_DELTAS:
                if ed_feasible(panel, e, delta) != oracle_ed_feasible(panel, e, delta):
                    disagreements += 1
                    print(f"  MISMATCH feasibility household={panel.household_id!r} "
                          f"e={e} delta={delta}")
                checks += 1
        print(f"household {panel.household_id!r}: {checks} engine/oracle comparisons")
    if disagreements:
        print(f"FAIL: {disagreements} disagreement(s)")
        return 1
    print("OK: engines agree with brute-force checks on every probe")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PanelValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
