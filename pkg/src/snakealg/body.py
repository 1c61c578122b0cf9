"""Locally constant functions on the Cantor set {l,u}^N.

A :class:`BodyMap` is a finite binary trie.  A node is either a leaf (a field
element) or a pair ``(l_child, u_child)``.  The value of the function on the
cylinder Z(w) is the leaf reached by following ``w``.  Tries are kept canonical:
no internal node has two leaf children with equal values, so two tries represent
the same function exactly when they are structurally equal.

The leftmost leaf (the all-l path) is the germ of the function at the point
0 = lll...
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .errors import MixedFields, WordTooLong
from .fields import Elem, Field

MAX_DEPTH = 64

Node = Union[Elem, tuple]


def check_word(word: str) -> str:
    if any(c not in "lu" for c in word):
        raise ValueError(f"word {word!r} must be over the alphabet {{l, u}}")
    if len(word) > MAX_DEPTH:
        raise WordTooLong(f"word of length {len(word)} exceeds the limit {MAX_DEPTH}")
    return word


def is_all_l(word: str) -> bool:
    return all(c == "l" for c in word)


@dataclass(frozen=True)
class PointDescriptor:
    """The eventually constant sequence ``word`` followed by ``tail`` repeated forever."""

    word: str = ""
    tail: str = "l"

    def __post_init__(self):
        check_word(self.word)
        if self.tail not in ("l", "u"):
            raise ValueError(f"tail must be 'l' or 'u', got {self.tail!r}")

    def digit(self, i: int) -> str:
        return self.word[i] if i < len(self.word) else self.tail

    def __str__(self):
        return f"{self.word}{self.tail}^inf"


ZERO_POINT = PointDescriptor("", "l")


def _is_leaf(node: Node) -> bool:
    return isinstance(node, Elem)


def _join(lo: Node, hi: Node) -> Node:
    if _is_leaf(lo) and _is_leaf(hi) and lo == hi:
        return lo
    return (lo, hi)


def canonicalize(node: Node) -> Node:
    """Merge every internal node whose two children are equal leaves, bottom up."""
    if _is_leaf(node):
        return node
    return _join(canonicalize(node[0]), canonicalize(node[1]))


def _depth(node: Node) -> int:
    if _is_leaf(node):
        return 0
    return 1 + max(_depth(node[0]), _depth(node[1]))


class BodyMap:
    __slots__ = ("field", "root")

    def __init__(self, field: Field, root: Node, *, canonical: bool = False):
        if not canonical:
            root = canonicalize(root)
            if _depth(root) > MAX_DEPTH:
                raise WordTooLong(f"trie deeper than {MAX_DEPTH}")
        self.field = field
        self.root = root

    @classmethod
    def constant(cls, field: Field, value) -> BodyMap:
        return cls(field, field(value), canonical=True)

    @classmethod
    def zero(cls, field: Field) -> BodyMap:
        return cls(field, field.zero, canonical=True)

    def __eq__(self, other):
        return isinstance(other, BodyMap) and self.field == other.field and self.root == other.root

    def __hash__(self):
        return hash((self.field, self.root))

    def __repr__(self):
        return f"BodyMap({self.field}, {_show(self.root)})"

    @property
    def depth(self) -> int:
        return _depth(self.root)

    def leaves(self) -> Iterator[tuple[str, Elem]]:
        """(path, value) pairs in lexicographic path order, l before u."""
        stack = [("", self.root)]
        while stack:
            path, node = stack.pop()
            if _is_leaf(node):
                yield path, node
            else:
                stack.append((path + "u", node[1]))
                stack.append((path + "l", node[0]))

    def __add__(self, other: BodyMap) -> BodyMap:
        return combine("add", self, other)

    def __sub__(self, other: BodyMap) -> BodyMap:
        return combine("add", self, scale(self.field(-1), other))

    def __mul__(self, other: BodyMap) -> BodyMap:
        return combine("mul", self, other)

    def __neg__(self) -> BodyMap:
        return scale(self.field(-1), self)


def _show(node: Node) -> str:
    if _is_leaf(node):
        return str(node)
    return f"({_show(node[0])} | {_show(node[1])})"


def indicator(field: Field, word: str, coeff=1) -> BodyMap:
    """coeff * 1_{Z(word)}."""
    check_word(word)
    c = field(coeff)
    node: Node = c
    for digit in reversed(word):
        node = _join(node, field.zero) if digit == "l" else _join(field.zero, node)
    return BodyMap(field, node, canonical=True)


def _merge(fn: Callable[[Elem, Elem], Elem], a: Node, b: Node) -> Node:
    a_leaf, b_leaf = _is_leaf(a), _is_leaf(b)
    if a_leaf and b_leaf:
        return fn(a, b)
    lo_a, hi_a = (a, a) if a_leaf else a
    lo_b, hi_b = (b, b) if b_leaf else b
    return _join(_merge(fn, lo_a, lo_b), _merge(fn, hi_a, hi_b))


def combine(op: str, b1: BodyMap, b2: BodyMap) -> BodyMap:
    """Pointwise sum or product of two body maps."""
    if b1.field != b2.field:
        raise MixedFields(f"cannot combine body maps over {b1.field} and {b2.field}")
    f = b1.field
    if op == "add":
        fn = f.add
    elif op == "mul":
        fn = f.mul
    else:
        raise ValueError(f"unknown body operation {op!r}")
    return BodyMap(f, _merge(fn, b1.root, b2.root), canonical=True)


def _map_leaves(fn: Callable[[Elem], Elem], node: Node) -> Node:
    if _is_leaf(node):
        return fn(node)
    return _join(_map_leaves(fn, node[0]), _map_leaves(fn, node[1]))


def scale(c, beta: BodyMap) -> BodyMap:
    f = beta.field
    if isinstance(c, Elem) and c.field != f:
        raise MixedFields(f"scalar from {c.field} applied to a body map over {f}")
    c = f(c)
    if c.is_zero():
        return BodyMap.zero(f)
    return BodyMap(f, _map_leaves(lambda v: f.mul(c, v), beta.root), canonical=True)


def evaluate(beta: BodyMap, pt: PointDescriptor) -> Elem:
    node, i = beta.root, 0
    while not _is_leaf(node):
        node = node[0] if pt.digit(i) == "l" else node[1]
        i += 1
    return node


def germ_at_zero(beta: BodyMap) -> Elem:
    node = beta.root
    while not _is_leaf(node):
        node = node[0]
    return node


def is_zero(beta: BodyMap) -> bool:
    return _is_leaf(beta.root) and beta.root.is_zero()
