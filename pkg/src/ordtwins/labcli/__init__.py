from .experiment import (
    ExperimentPlan,
    Row,
    ScalingFit,
    fit_exponent,
    relative_iqr,
    run_cell,
    run_experiment,
    summarize,
    trial_seed,
)
from .report import emit_report, load_report, parse, render

__all__ = [
    "ExperimentPlan",
    "Row",
    "ScalingFit",
    "emit_report",
    "fit_exponent",
    "load_report",
    "parse",
    "relative_iqr",
    "render",
    "run_cell",
    "run_experiment",
    "summarize",
    "trial_seed",
]
