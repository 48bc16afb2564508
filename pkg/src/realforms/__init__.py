"""Exact constructions of the real forms of e6 and f4.

The package builds composition algebras, Albert algebras and the magic
square Lie algebras over Q(sqrt3, i) with exact structure constants, then
extracts Killing signatures, restricted root systems and Satake diagrams
for the real forms by direct computation.
"""

from .scalars import Scalar, sc, parse_scalar, ZERO, ONE, HALF, SQRT3, IUNIT, OMEGA

__version__ = "0.1.0"

__all__ = [
    "Scalar",
    "sc",
    "parse_scalar",
    "ZERO",
    "ONE",
    "HALF",
    "SQRT3",
    "IUNIT",
    "OMEGA",
    "__version__",
]
