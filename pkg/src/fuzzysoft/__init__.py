"""Fuzzy soft sets for clinical risk ranking.

Fuzzifies clinical measurements through piecewise-linear membership functions,
builds fuzzy soft sets over a patient cohort, applies soft-set products and
normal parameter reduction, and ranks objects by comparison-table scores. The
default configuration reproduces a published breast-cancer risk-ranking case
study end to end, including a machine-readable errata report for every cell
where the study's printed tables contradict its own formulas.
"""

__version__ = "0.1.0"

from .errors import ConfigError, DataError, FuzzySoftError, InternalError
from .membership import MembershipFunction, left_shoulder, make_piecewise, right_shoulder, triangle
from .softset import FuzzySoftSet, from_table, positional_labels, product, product_n, restrict, to_table
from .variables import (
    HEALTHY_CONTROL,
    PATIENT,
    ErrataCell,
    Partition,
    PatientRecord,
    VariableSpec,
    default_variable_specs,
    errata_report,
    fuzzify_cohort,
    fuzzify_value,
    load_variable_specs,
    specs_from_json,
    specs_to_json,
)
from .reduction import ReductionResult, choice_values, find_reductions, is_dispensable, optimal_objects
from .scoring import (
    HEALTHY,
    HIGH_RISK,
    ComparisonTable,
    ScoreReport,
    classify,
    comparison_table,
    evaluate,
    format_report_text,
    report_to_csv,
    score_pipeline,
    scores,
)
from .ingest import DEFAULT_SCHEMA, DatasetSchema, builtin_table1, load_csv, select_samples
from .pipeline import BUILTIN_SOURCE, PipelineConfig, RunResult, emit_curves, run_pipeline
from .verify import verify_fixtures

__all__ = [
    "__version__",
    "ConfigError",
    "DataError",
    "FuzzySoftError",
    "InternalError",
    "MembershipFunction",
    "make_piecewise",
    "triangle",
    "left_shoulder",
    "right_shoulder",
    "FuzzySoftSet",
    "product",
    "product_n",
    "restrict",
    "to_table",
    "from_table",
    "positional_labels",
    "HEALTHY_CONTROL",
    "PATIENT",
    "Partition",
    "VariableSpec",
    "PatientRecord",
    "ErrataCell",
    "default_variable_specs",
    "fuzzify_value",
    "fuzzify_cohort",
    "errata_report",
    "specs_to_json",
    "specs_from_json",
    "load_variable_specs",
    "ReductionResult",
    "choice_values",
    "optimal_objects",
    "is_dispensable",
    "find_reductions",
    "HIGH_RISK",
    "HEALTHY",
    "ComparisonTable",
    "ScoreReport",
    "comparison_table",
    "scores",
    "classify",
    "evaluate",
    "score_pipeline",
    "report_to_csv",
    "format_report_text",
    "DatasetSchema",
    "DEFAULT_SCHEMA",
    "load_csv",
    "select_samples",
    "builtin_table1",
    "BUILTIN_SOURCE",
    "PipelineConfig",
    "RunResult",
    "run_pipeline",
    "emit_curves",
    "verify_fixtures",
]
