"""Ordered semigroups and categories of ideals of commutative principal ideal rings."""

from pirideals.errors import (
    AlgebraError,
    CompositionError,
    DomainError,
    FormatError,
    IllDefinedMorphismError,
    UnsupportedEnumerationError,
    UnsupportedFamilyError,
)
from pirideals.report import CheckReport
from pirideals.rings import (
    IntegerRing,
    ModularRing,
    PolyRing,
    RingElement,
    TriangularRing,
)
from pirideals.ideals import Ideal, RingIso

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CheckReport",
    "CompositionError",
    "DomainError",
    "FormatError",
    "Ideal",
    "IllDefinedMorphismError",
    "IntegerRing",
    "ModularRing",
    "PolyRing",
    "RingElement",
    "RingIso",
    "TriangularRing",
    "UnsupportedEnumerationError",
    "UnsupportedFamilyError",
]
