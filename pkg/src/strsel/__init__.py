"""String selection problems with outliers: exact and heuristic solvers,
hardness reductions as verified instance generators, and verification
experiments."""

from .words import (
    Alphabet,
    BINARY,
    CksInstance,
    CmsInstance,
    FfmsInstance,
    MsfbcInstance,
    StringSet,
    Word,
    anticoverage,
    bad_columns,
    complement,
    coverage,
    hamming,
)

__all__ = [
    "Alphabet",
    "BINARY",
    "CksInstance",
    "CmsInstance",
    "FfmsInstance",
    "MsfbcInstance",
    "StringSet",
    "Word",
    "anticoverage",
    "bad_columns",
    "complement",
    "coverage",
    "hamming",
]

__version__ = "0.1.0"
