"""Nonparametric tests of exponential discounting on consumption panels.

Given a panel of prices and chosen quantities, the library measures how far
the household is from static utility maximization (CCEI), from the full
discounting model (EEI), and from time consistency specifically (TCEI), and
recovers nonparametric bounds on the discount factor.
"""

from .dataset import (
    PER_PERIOD,
    QUARTERLY,
    DeflatedPanel,
    HouseholdPanel,
    PanelValidationError,
    RateSeries,
    annual_to_per_period,
    deflate_prices,
    interpolate_rates,
    zero_rates,
)
from .defaults import DEFAULT_BOUNDS_STEP, DEFAULT_DELTA_STEP, DEFAULT_EFFICIENCY_TOL
from .discounting import (
    ConstraintGraph,
    FeasibilityWitness,
    IdentifiedSet,
    build_constraint_graph,
    compute_eei,
    constraint_weights,
    delta_grid,
    ed_feasible,
    ed_witness,
    identified_set,
)
from .garp import RevealedPreferenceRelation, build_relation, check_egarp, compute_ccei
from .indices import (
    AnalysisConfig,
    EfficiencyReport,
    PopulationSummary,
    SummaryStats,
    analyze_household,
    compute_tcei,
    summarize,
)
from .io import load_panels, load_rates, write_panels
from .oracle import oracle_ed_feasible, oracle_egarp
from .synth import CobbDouglasConsumer, generate_ed_panel, perturb_panel, random_panel

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "CobbDouglasConsumer",
    "ConstraintGraph",
    "DEFAULT_BOUNDS_STEP",
    "DEFAULT_DELTA_STEP",
    "DEFAULT_EFFICIENCY_TOL",
    "DeflatedPanel",
    "EfficiencyReport",
    "FeasibilityWitness",
    "HouseholdPanel",
    "IdentifiedSet",
    "PER_PERIOD",
    "PanelValidationError",
    "PopulationSummary",
    "QUARTERLY",
    "RateSeries",
    "RevealedPreferenceRelation",
    "SummaryStats",
    "analyze_household",
    "annual_to_per_period",
    "build_constraint_graph",
    "build_relation",
    "check_egarp",
    "compute_ccei",
    "compute_eei",
    "compute_tcei",
    "constraint_weights",
    "deflate_prices",
    "delta_grid",
    "ed_feasible",
    "ed_witness",
    "generate_ed_panel",
    "identified_set",
    "interpolate_rates",
    "load_panels",
    "load_rates",
    "oracle_ed_feasible",
    "oracle_egarp",
    "perturb_panel",
    "random_panel",
    "summarize",
    "write_panels",
    "zero_rates",
]
