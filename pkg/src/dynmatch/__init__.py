"""Fully dynamic approximate matching and vertex cover maintenance.

Maintainers for (1+eps)-approximate maximum cardinality and maximum weight
matchings under edge insert/delete streams, a deamortized round engine with
per-update step budgets, weight rounding/bucketing ensembles, and the exact
brute-force oracles that verify every guarantee at desk scale.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .combine import ChargeReport, combine
from .core import CoreSubgraph, build_core
from .cover import CoverMaintainer
from .errors import (
    ApproximationUnverified,
    DuplicateInsert,
    DynMatchError,
    GuaranteeViolation,
    InvalidCover,
    InvalidLevelMatching,
    InvalidParams,
    MissingDelete,
    OracleLimitExceeded,
    ParseError,
    WeightOutOfRange,
)
from .graph import (
    DynamicGraph,
    Edge,
    GraphSnapshot,
    UpdateEvent,
    UpdateKind,
    format_event,
    parse_stream,
)
from .lazy import LazyMcm, WeightedLazy
from .matching import Matching
from .schemes import BucketPlan, BucketedMwmScheme, GeometricMwmScheme, GeometricRounding
from .static_match import (
    StepBudgetedTask,
    approx_cover,
    approx_mcm,
    approx_mwm,
    exact_mcm_oracle,
    exact_min_vc_oracle,
    exact_mwm_oracle,
    maximal_matching,
)
from .worstcase import WorstCaseMwm

__version__ = "0.1.0"

__all__ = [
    "ApproximationUnverified",
    "BucketPlan",
    "BucketedMwmScheme",
    "ChargeReport",
    "CoreSubgraph",
    "CoverMaintainer",
    "DuplicateInsert",
    "DynMatchError",
    "DynamicGraph",
    "Edge",
    "GeometricMwmScheme",
    "GeometricRounding",
    "GraphSnapshot",
    "GuaranteeViolation",
    "InvalidCover",
    "InvalidLevelMatching",
    "InvalidParams",
    "KERNEL_BACKEND",
    "LazyMcm",
    "Matching",
    "MissingDelete",
    "OracleLimitExceeded",
    "ParseError",
    "StepBudgetedTask",
    "UpdateEvent",
    "UpdateKind",
    "WeightOutOfRange",
    "WeightedLazy",
    "WorstCaseMwm",
    "approx_cover",
    "approx_mcm",
    "approx_mwm",
    "build_core",
    "combine",
    "exact_mcm_oracle",
    "exact_min_vc_oracle",
    "exact_mwm_oracle",
    "format_event",
    "maximal_matching",
    "parse_stream",
]
