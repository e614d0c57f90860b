"""Exact Kazhdan-Lusztig Schubert calculus for type-A flag varieties."""

__version__ = "0.1.0"

from .field import FieldElement
from .groupalgebra import GroupAlgebra, LaurentT
from .weyl import WeylGroup, weyl_group

__all__ = [
    "FieldElement",
    "GroupAlgebra",
    "LaurentT",
    "WeylGroup",
    "weyl_group",
    "__version__",
]
