"""Exception types shared across the package."""

from __future__ import annotations


class DynMatchError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateInsert(DynMatchError):
    """An insert event names an edge that is already present."""


class MissingDelete(DynMatchError):
    """A delete event names an edge that is not present."""


class WeightOutOfRange(DynMatchError):
    """An edge weight falls outside the configured [floor, cap] range."""


class OracleLimitExceeded(DynMatchError):
    """The instance is too large for an exact brute-force oracle."""


class InvalidCover(DynMatchError):
    """The supplied vertex set leaves at least one edge uncovered."""


class InvalidLevelMatching(DynMatchError):
    """A per-level edge set is not a matching."""


class InvalidParams(DynMatchError):
    """Workload-generator parameters are inconsistent or out of range."""


class ApproximationUnverified(DynMatchError):
    """The heuristic matcher could not certify its approximation ratio.

    Raised only on inputs past the exact-search size threshold, where the
    greedy fallback's post-hoc certificate fails to establish the requested
    ratio.  The caller sees an error instead of a silently weaker matching.
    """


class ParseError(DynMatchError):
    """An update-stream line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GuaranteeViolation(DynMatchError):
    """A checked step failed the maintained approximation guarantee."""

    def __init__(self, seq: int, ratio: float, message: str = ""):
        detail = f"update {seq}: observed ratio {ratio}"
        if message:
            detail += f" ({message})"
        super().__init__(detail)
        self.seq = seq
        self.ratio = ratio
