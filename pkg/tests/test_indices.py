import numpy as np
import pytest

from edtest import (
    AnalysisConfig,
    CobbDouglasConsumer,
    EfficiencyReport,
    IdentifiedSet,
    analyze_household,
    compute_tcei,
    generate_ed_panel,
    summarize,
)

TOL = 2.0**-10


def _toy_set(lower_idx=0, upper_idx=2, size=4):
    grid = 0.25 * np.arange(1, size + 1)
    mask = np.zeros(size, dtype=bool)
    mask[lower_idx : upper_idx + 1] = True
    return IdentifiedSet(grid_step=0.25, grid=grid, feasible_mask=mask)


def _report(household_id="h", ccei=0.9, eei=0.9, tcei=1.0, best_delta=0.5):
    return EfficiencyReport(
        household_id=household_id,
        ccei=ccei,
        eei=eei,
        tcei=tcei,
        best_delta=best_delta,
        tol=TOL,
        identified_set=_toy_set(),
    )


class TestComputeTcei:
    def test_division_by_one(self):
        assert compute_tcei(1.0, 0.8) == 0.8

    def test_all_inefficiency_static(self):
        assert compute_tcei(0.8, 0.8) == 1.0

    def test_fully_rational(self):
        assert compute_tcei(1.0, 1.0) == 1.0

    def test_clamped_within_slack(self):
        assert compute_tcei(0.9, 0.9 + TOL) == 1.0

    def test_rejects_eei_above_ccei_beyond_slack(self):
        with pytest.raises(ValueError, match="engine bug"):
            compute_tcei(0.5, 0.6)

    def test_rejects_out_of_range_indices(self):
        with pytest.raises(ValueError):
            compute_tcei(0.0, 0.5)
        with pytest.raises(ValueError):
            compute_tcei(0.5, 1.5)


class TestEfficiencyReport:
    def test_valid_report_constructs(self):
        report = _report()
        assert report.identified_set.midpoint == pytest.approx(0.5)

    def test_rejects_broken_decomposition(self):
        with pytest.raises(ValueError, match="decomposition"):
            _report(ccei=1.0, eei=0.5, tcei=1.0)

    def test_rejects_eei_above_ccei(self):
        with pytest.raises(ValueError, match="exceeds"):
            _report(ccei=0.5, eei=0.9, tcei=1.0)

    def test_rejects_out_of_range_index(self):
        with pytest.raises(ValueError, match="outside"):
            _report(ccei=0.0)


class TestAnalyzeHousehold:
    def test_single_observation(self, single_observation):
        report = analyze_household(single_observation)
        assert report.ccei == report.eei == report.tcei == 1.0
        assert report.identified_set.feasible_mask.all()

    def test_two_period_violation(self, two_period_violation):
        report = analyze_household(two_period_violation)
        assert report.ccei == pytest.approx(0.8, abs=TOL)
        assert report.eei == pytest.approx(0.8, abs=TOL)
        assert report.tcei == pytest.approx(1.0, abs=2 * TOL)
        assert not report.identified_set.is_empty

    def test_synthetic_discounter_recovery(self):
        rng = np.random.default_rng(5)
        prices = np.exp(rng.uniform(np.log(0.5), np.log(2.0), size=(12, 3)))
        consumer = CobbDouglasConsumer(weights=np.array([0.2, 0.3, 0.5]), delta_true=0.9)
        panel = generate_ed_panel(consumer, prices, household_id="cd")
        report = analyze_household(panel)
        assert report.eei >= 1.0 - 2 * TOL
        bounds = report.identified_set
        assert bounds.lower <= consumer.delta_true <= bounds.upper

    def test_config_validation(self):
        with pytest.raises(ValueError):
            AnalysisConfig(delta_step=0.0)
        with pytest.raises(ValueError):
            AnalysisConfig(bounds_step=1.0)
        with pytest.raises(ValueError):
            AnalysisConfig(tol=-1.0)


class TestSummarize:
    def test_singleton_statistics(self):
        summary = summarize([_report(ccei=0.9)])
        assert summary.n == 1
        assert summary.ccei.minimum == summary.ccei.maximum == summary.ccei.mean == 0.9
        assert summary.ccei.sd == 0.0

    def test_two_point_population_sd(self):
        reports = [_report("a", ccei=0.8, eei=0.8), _report("b", ccei=1.0, eei=1.0)]
        summary = summarize(reports)
        assert summary.ccei.mean == pytest.approx(0.9)
        assert summary.ccei.sd == pytest.approx(0.1)  # population denominator

    def test_permutation_invariance(self):
        # dyadic values keep every reduction exact regardless of order
        reports = [
            _report("a", ccei=0.75, eei=0.75),
            _report("b", ccei=0.875, eei=0.875),
            _report("c", ccei=1.0, eei=1.0),
        ]
        forward = summarize(reports)
        backward = summarize(list(reversed(reports)))
        assert forward == backward

    def test_identified_set_rows(self):
        summary = summarize([_report()])
        assert summary.set_width.mean == pytest.approx(0.5)
        assert summary.delta_midpoint.mean == pytest.approx(0.5)

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            summarize([])

    def test_empty_identified_set_rejected(self):
        report = _report()
        empty = IdentifiedSet(
            grid_step=0.25,
            grid=report.identified_set.grid,
            feasible_mask=np.zeros(4, dtype=bool),
        )
        broken = EfficiencyReport(
            household_id="x",
            ccei=report.ccei,
            eei=report.eei,
            tcei=report.tcei,
            best_delta=report.best_delta,
            tol=report.tol,
            identified_set=empty,
        )
        with pytest.raises(ValueError, match="empty identified set"):
            summarize([broken])
