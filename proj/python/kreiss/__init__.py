"""Kreiss constants of stable matrices."""

from ._core import (
    KreissError,
    Problem,
    certify,
    generate,
    gradient,
    grid_min,
    kreiss,
    load,
    objective,
    problem,
    ratio_curve,
)

__all__ = [
    "KreissError",
    "Problem",
    "certify",
    "generate",
    "gradient",
    "grid_min",
    "kreiss",
    "load",
    "objective",
    "problem",
    "ratio_curve",
]
