"""Singular functions and singular ideals of the 2- and 3-headed snake algebras.

A singular element has zero body, so it is determined by its head vector, whose
coordinates sum to 0.  For singular s the ideal generated by s is
{f * s : f in the algebra}, and the head vector of f * s is the cyclic
convolution of the two head vectors.  Membership in a principal singular ideal
is therefore the solvability of a circulant linear system over the field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import body as bodymod
from .algebra import SnakeElement, augmentation, check_heads, cyclic_convolve
from .errors import MixedFields, MixedHeadCounts, NotSingular
from .fields import Elem, Field


def is_singular(f: SnakeElement) -> bool:
    singular = bodymod.is_zero(f.body)
    if singular:
        # the germ invariant makes this automatic
        assert augmentation(f.field, f.heads).is_zero()
    return singular


def _require_singular(f: SnakeElement) -> None:
    if not is_singular(f):
        raise NotSingular(f"element with head vector {_fmt(f.heads)} has nonzero body")


class Family(enum.Enum):
    ZERO = "Zero"
    ZERO_LEADING = "ZeroLeading"
    UNIT_LEADING = "UnitLeading"


@dataclass(frozen=True)
class SingularClass:
    """k*[0,1,-1] (ZeroLeading) or k*[1,b,-(b+1)] (UnitLeading)."""

    family: Family
    k: Elem
    b: Elem | None = None

    def head_vector(self) -> tuple[Elem, ...]:
        f = self.k.field
        if self.family is Family.UNIT_LEADING:
            return tuple(f.mul(self.k, x) for x in unit_leading_vector(self.b))
        return (f.zero, self.k, f.neg(self.k))


def unit_leading_vector(b: Elem) -> tuple[Elem, Elem, Elem]:
    f = b.field
    return (f.one, b, f.neg(f.add(b, f.one)))


def full_generator(field: Field, n: int) -> tuple[Elem, ...]:
    """[1,-1] for n = 2, [0,1,-1] for n = 3."""
    check_heads(n)
    if n == 2:
        return (field.one, field(-1))
    return (field.zero, field.one, field(-1))


def classify_singular(f: SnakeElement) -> SingularClass:
    if f.n != 3:
        raise MixedHeadCounts("classification into the two families is for the 3-headed snake")
    _require_singular(f)
    field = f.field
    a0, a1, _ = f.heads
    if f.is_zero():
        return SingularClass(Family.ZERO, field.zero)
    if a0.is_zero():
        return SingularClass(Family.ZERO_LEADING, a1)
    return SingularClass(Family.UNIT_LEADING, a0, field.div(a1, a0))


def delta(b: Elem) -> Elem:
    """b^2 + b + 1."""
    f = b.field
    return f.add(f.add(f.mul(b, b), b), f.one)


def k_scalar(heads: Sequence[Elem], b: Elem) -> Elem:
    """a_0 - (b+1) a_1 + b a_2, the factor with f * [1,b,-(b+1)] = k [1,b,-(b+1)] when b^2+b+1 = 0."""
    f = b.field
    a0, a1, a2 = heads
    return f.add(f.sub(a0, f.mul(f.add(b, f.one), a1)), f.mul(b, a2))


def solve_linear(field: Field, rows: list[list[Elem]], rhs: list[Elem], column_order: Sequence[int]):
    """Solve rows * x = rhs exactly; free variables are set to zero.

    Columns are eliminated in ``column_order``.  Returns None when inconsistent.
    """
    m = [list(r) + [v] for r, v in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in column_order:
        pivot = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                factor = m[i][c]
                m[i] = [field.sub(v, field.mul(factor, w)) for v, w in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == len(m):
            break
    if any(not m[i][-1].is_zero() for i in range(r, len(m))):
        return None
    x = [field.zero] * ncols
    for row, c in pivots:
        x[c] = m[row][-1]
    return x


def circulant(heads: Sequence[Elem]) -> list[list[Elem]]:
    """Matrix C with C x = x * heads (cyclic convolution)."""
    n = len(heads)
    return [[heads[(k - i) % n] for i in range(n)] for k in range(n)]


def _scalar_multiple(field: Field, target: Sequence[Elem], base: Sequence[Elem]) -> Elem | None:
    """c with target = c * base, if one exists (base nonzero)."""
    i = next(i for i, v in enumerate(base) if not v.is_zero())
    c = field.div(target[i], base[i])
    if all(field.mul(c, v) == t for v, t in zip(base, target)):
        return c
    return None


def ideal_membership(candidate: SnakeElement, generator: SnakeElement) -> tuple[Elem, ...] | None:
    """Head vector x with [x] * generator = candidate, or None if candidate is not in <generator>.

    Scalar multiples c * generator get the witness c * [1,0,...,0].  Otherwise the
    circulant system is eliminated with x_0 last, so x_0 = 0 whenever it is free.
    """
    if candidate.field != generator.field:
        raise MixedFields(f"elements over {candidate.field} and {generator.field}")
    if candidate.n != generator.n:
        raise MixedHeadCounts(f"elements of the {candidate.n}- and {generator.n}-headed snakes")
    _require_singular(candidate)
    _require_singular(generator)
    field, n = candidate.field, candidate.n
    h, target = generator.heads, candidate.heads

    if generator.is_zero():
        return (field.zero,) * n if candidate.is_zero() else None
    c = _scalar_multiple(field, target, h)
    if c is not None:
        return (c,) + (field.zero,) * (n - 1)

    x = solve_linear(field, circulant(h), list(target), list(range(1, n)) + [0])
    if x is None:
        return None
    witness = tuple(x)
    assert cyclic_convolve(field, witness, h) == tuple(target)
    return witness


class IdealKind(enum.Enum):
    FULL_SINGULAR = "FullSingular"
    PROPER_SINGULAR = "ProperSingular"


class Provenance(enum.Enum):
    ANALYTIC = "Analytic"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class IdealDescriptor:
    generator: tuple[Elem, ...]
    root: Elem | None
    kind: IdealKind
    provenance: Provenance = Provenance.ANALYTIC

    def __post_init__(self):
        if self.kind is IdealKind.PROPER_SINGULAR:
            if self.root is None or not delta(self.root).is_zero():
                raise ValueError("a proper singular ideal needs a root of T^2+T+1")


def full_singular_ideal(field: Field, n: int) -> IdealDescriptor:
    """The ideal of all singular functions, generated by [1,-1] or [0,1,-1]."""
    return IdealDescriptor(full_generator(field, n), None, IdealKind.FULL_SINGULAR)


def enumerate_singular_ideals(field: Field, n: int) -> list[IdealDescriptor]:
    """Proper nonzero singular ideals, one per root of T^2+T+1 (n = 3), none for n = 2."""
    check_heads(n)
    if n == 2:
        return []
    report = field.roots_of_phi3()
    return [
        IdealDescriptor(unit_leading_vector(b), b, IdealKind.PROPER_SINGULAR)
        for b in sorted(report.roots, key=field.sort_key)
    ]


def is_s_simple(field: Field, n: int) -> tuple[bool, str]:
    check_heads(n)
    if n == 2:
        return True, "the two-headed snake has no singular ideals over any field"
    report = field.roots_of_phi3()
    if not report.roots:
        return True, f"T^2+T+1 has no root in {field}"
    roots = ", ".join(str(b) for b in report.roots)
    if report.double_root:
        return False, f"T^2+T+1 has the double root {roots} in {field}"
    return False, f"T^2+T+1 has roots {roots} in {field}"


def _fmt(heads: Sequence[Elem]) -> str:
    return "[" + ",".join(str(a) for a in heads) + "]"
