"""Configuration-count expressivity of articulated platforms, in bits.

A platform's capacity is log2 of the number of distinct complete state
assignments over all of its degrees of freedom. This package models
platforms, computes that capacity (log-domain and exact), ships the full
built-in dataset of published platform transcriptions, and emits
computation-vs-mechanization trend data.
"""

from .model import (
    ActuatorGroup,
    CapacityResult,
    Discrete,
    FactorizationExpr,
    GroupContribution,
    InconsistentRangeError,
    PaperRegressionEntry,
    PlatformSpec,
    ProcessorSpec,
    Ranged,
    Violation,
    validate,
)
from .engine import (
    DEFAULT_MAX_DECIMAL_DIGITS,
    ExactModeConfig,
    ExactTooLarge,
    capacity,
    combine,
    decimal_magnitude,
    effective_states,
    eval_factorization,
    processor_bits,
    states_per_dof,
    transistor_equivalent,
)
from .dataset import (
    DatasetEntry,
    Provenance,
    SpecFileError,
    builtin_platforms,
    builtin_processors,
    builtin_years,
    find_platform,
    load_spec_file,
    paper_regressions,
    save_spec_file,
)
from .trend import ComparisonStatement, TrendRow, build_trend, compare, emit_csv

__version__ = "0.1.0"

__all__ = [
    "ActuatorGroup",
    "CapacityResult",
    "ComparisonStatement",
    "DEFAULT_MAX_DECIMAL_DIGITS",
    "DatasetEntry",
    "Discrete",
    "ExactModeConfig",
    "ExactTooLarge",
    "FactorizationExpr",
    "GroupContribution",
    "InconsistentRangeError",
    "PaperRegressionEntry",
    "PlatformSpec",
    "ProcessorSpec",
    "Provenance",
    "Ranged",
    "SpecFileError",
    "TrendRow",
    "Violation",
    "builtin_platforms",
    "builtin_processors",
    "builtin_years",
    "capacity",
    "combine",
    "compare",
    "decimal_magnitude",
    "effective_states",
    "emit_csv",
    "eval_factorization",
    "find_platform",
    "load_spec_file",
    "paper_regressions",
    "processor_bits",
    "save_spec_file",
    "states_per_dof",
    "transistor_equivalent",
    "validate",
    "build_trend",
    "__version__",
]
