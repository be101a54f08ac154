"""Inconsistency analysis of pairwise-comparisons matrices.

A thin veneer over the compiled extension: build indicators from selector
strings, scan matrices for their inconsistency value, validate and
transport matrices, and run the algebraic law suites.
"""

from ._core import (
    AbelianRequired,
    Indicator,
    LawViolation,
    ParseError,
    PcxError,
    __version__,
    analyze,
    axioms,
    consistent,
    indicator,
    transport,
    validate,
)

__all__ = [
    "AbelianRequired",
    "Indicator",
    "LawViolation",
    "ParseError",
    "PcxError",
    "__version__",
    "analyze",
    "axioms",
    "consistent",
    "indicator",
    "transport",
    "validate",
]
