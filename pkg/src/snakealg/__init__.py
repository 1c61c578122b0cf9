"""Exact computations in the Steinberg algebras of the two- and three-headed snake groupoids."""

from .algebra import SnakeElement, Term, convolve, equals, evaluate, from_terms, linear_combine, unit
from .body import BodyMap, PointDescriptor, combine, germ_at_zero, indicator, is_zero, scale
from .fields import Elem, Field, FieldKind, FieldSpec, RootReport, arith, make_field
from .grammar import parse_element, print_element
from .ideals import (
    IdealDescriptor,
    SingularClass,
    classify_singular,
    delta,
    enumerate_singular_ideals,
    ideal_membership,
    is_s_simple,
    is_singular,
)

__all__ = [
    "BodyMap",
    "Elem",
    "Field",
    "FieldKind",
    "FieldSpec",
    "IdealDescriptor",
    "PointDescriptor",
    "RootReport",
    "SingularClass",
    "SnakeElement",
    "Term",
    "arith",
    "classify_singular",
    "combine",
    "convolve",
    "delta",
    "enumerate_singular_ideals",
    "equals",
    "evaluate",
    "from_terms",
    "germ_at_zero",
    "ideal_membership",
    "indicator",
    "is_s_simple",
    "is_singular",
    "is_zero",
    "linear_combine",
    "make_field",
    "parse_element",
    "print_element",
    "scale",
    "unit",
]
