"""Steinberg algebra of the n-headed snake groupoid, n in {2, 3}.

An element f is stored pointwise:

* ``heads[i]`` is f(head i),
* ``body`` is f restricted to X minus {0}, as a :class:`BodyMap` whose leftmost
  leaf holds the germ of f at 0 (the limit of body values towards the heads).

Membership in the algebra forces the germ to equal the sum of the head values;
every constructor and operation maintains that invariant.

Convolution multiplies body values pointwise and convolves head vectors
cyclically, since the heads compose as Z/nZ.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import body as bodymod
from .body import BodyMap, PointDescriptor
from .errors import (
    HeadIndexOutOfRange,
    InvalidHeadTag,
    MixedFields,
    MixedHeadCounts,
    UnsupportedHeadCount,
)
from .fields import Elem, Field

SUPPORTED_HEADS = (2, 3)


def check_heads(n: int) -> int:
    if n not in SUPPORTED_HEADS:
        raise UnsupportedHeadCount(f"head count {n} not supported; use 2 or 3")
    return n


def cyclic_convolve(field: Field, x: Sequence[Elem], h: Sequence[Elem]) -> tuple[Elem, ...]:
    """(x * h)_k = sum of x_i h_j over i + j = k (mod n)."""
    n = len(x)
    if len(h) != n:
        raise MixedHeadCounts(f"head vectors of lengths {n} and {len(h)}")
    out = [field.zero] * n
    for i, xi in enumerate(x):
        if xi.is_zero():
            continue
        for j, hj in enumerate(h):
            k = (i + j) % n
            out[k] = field.add(out[k], field.mul(xi, hj))
    return tuple(out)


def augmentation(field: Field, heads: Iterable[Elem]) -> Elem:
    total = field.zero
    for a in heads:
        total = field.add(total, a)
    return total


@dataclass(frozen=True)
class Term:
    """``coeff * 1_B`` where B = Z(word), with head 0 swapped for head ``head`` if given."""

    coeff: Elem
    word: str = ""
    head: int | None = None


class SnakeElement:
    __slots__ = ("field", "n", "heads", "body")

    def __init__(self, field: Field, n: int, heads: Sequence[Elem], body: BodyMap):
        check_heads(n)
        heads = tuple(field(a) for a in heads)
        if len(heads) != n:
            raise MixedHeadCounts(f"expected {n} head values, got {len(heads)}")
        if body.field != field:
            raise MixedFields(f"body over {body.field} in an element over {field}")
        germ = bodymod.germ_at_zero(body)
        total = augmentation(field, heads)
        if germ != total:
            raise ValueError(f"germ {germ} at 0 differs from the head sum {total}")
        self.field = field
        self.n = n
        self.heads = heads
        self.body = body

    @classmethod
    def from_heads(cls, field: Field, heads: Sequence) -> SnakeElement:
        """The bracket element [a_0, ..., a_{n-1}] = sum of a_i 1_{X_i}."""
        hs = tuple(field(a) for a in heads)
        return cls(field, len(hs), hs, BodyMap.constant(field, augmentation(field, hs)))

    def __eq__(self, other):
        return equals(self, other) if isinstance(other, SnakeElement) else NotImplemented

    def __hash__(self):
        return hash((self.field, self.n, self.heads, self.body))

    def __repr__(self):
        hs = ",".join(str(a) for a in self.heads)
        return f"SnakeElement({self.field}, [{hs}], {bodymod._show(self.body.root)})"

    def __add__(self, other):
        return linear_combine(self.field.one, self, self.field.one, other)

    def __sub__(self, other):
        return linear_combine(self.field.one, self, self.field(-1), other)

    def __neg__(self):
        return self.scaled(-1)

    def __mul__(self, other):
        return convolve(self, other)

    def scaled(self, c) -> SnakeElement:
        return linear_combine(c, self, self.field.zero, self)

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.heads) and bodymod.is_zero(self.body)

    def remainder(self) -> BodyMap:
        """Body minus the constant head sum: the part supported away from 0."""
        return self.body - BodyMap.constant(self.field, augmentation(self.field, self.heads))


def _same_algebra(f: SnakeElement, g: SnakeElement) -> None:
    if f.field != g.field:
        raise MixedFields(f"elements over {f.field} and {g.field}")
    if f.n != g.n:
        raise MixedHeadCounts(f"elements of the {f.n}- and {g.n}-headed snakes")


def from_terms(field: Field, n: int, terms: Iterable[Term]) -> SnakeElement:
    """Normal form of a sum of scaled cylinder indicators."""
    check_heads(n)
    heads = [field.zero] * n
    beta = BodyMap.zero(field)
    for t in terms:
        if isinstance(t.coeff, Elem) and t.coeff.field != field:
            raise MixedFields(f"term coefficient from {t.coeff.field} in {field}")
        c = field(t.coeff)
        bodymod.check_word(t.word)
        if bodymod.is_all_l(t.word):
            tag = 0 if t.head is None else t.head
            if not 0 <= tag < n:
                raise InvalidHeadTag(f"head tag {tag} out of range for {n} heads")
            heads[tag] = field.add(heads[tag], c)
        elif t.head is not None:
            raise InvalidHeadTag(f"Z({t.word}) does not contain 0, so it cannot carry head tag {t.head}")
        beta = beta + bodymod.indicator(field, t.word, c)
    return SnakeElement(field, n, heads, beta)


def linear_combine(c1, f1: SnakeElement, c2, f2: SnakeElement) -> SnakeElement:
    _same_algebra(f1, f2)
    field = f1.field
    c1, c2 = field(c1), field(c2)
    heads = [field.add(field.mul(c1, a), field.mul(c2, b)) for a, b in zip(f1.heads, f2.heads)]
    beta = bodymod.scale(c1, f1.body) + bodymod.scale(c2, f2.body)
    return SnakeElement(field, f1.n, heads, beta)


def convolve(f: SnakeElement, g: SnakeElement) -> SnakeElement:
    _same_algebra(f, g)
    heads = cyclic_convolve(f.field, f.heads, g.heads)
    return SnakeElement(f.field, f.n, heads, f.body * g.body)


def unit(field: Field, n: int) -> SnakeElement:
    """1_{X_0}: heads [1, 0, ..., 0], body constant 1."""
    check_heads(n)
    return SnakeElement(field, n, [field.one] + [field.zero] * (n - 1), BodyMap.constant(field, 1))


def evaluate(f: SnakeElement, at: int | PointDescriptor) -> Elem:
    """Value at head ``at`` (an int) or at a body point.

    The body descriptor (empty word, all-l tail) reads the germ at 0, which is
    the head sum and not f(head 0).
    """
    if isinstance(at, PointDescriptor):
        return bodymod.evaluate(f.body, at)
    if not 0 <= at < f.n:
        raise HeadIndexOutOfRange(f"head {at} out of range for {f.n} heads")
    return f.heads[at]


def equals(f: SnakeElement, g: SnakeElement) -> bool:
    return f.field == g.field and f.n == g.n and f.heads == g.heads and f.body == g.body
