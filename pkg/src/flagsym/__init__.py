"""Exact rational-arithmetic toolkit for flag-variety symmetry verification.

Everything in this package computes over Q with no floating point: subspaces,
Weyl groups, Schubert coordinates, symmetry witnesses and group-law checks are
all exact, so every verification is a proof at the sampled points.
"""

from flagsym.exactla import Matrix, Subspace, rat, rat_str
from flagsym.rootdata import LQSpec, GradedLie, Root

__all__ = [
    "Matrix",
    "Subspace",
    "rat",
    "rat_str",
    "LQSpec",
    "GradedLie",
    "Root",
]
