"""Brute-force oracle for ideals of the head group algebra K[Z/nZ], K finite.

Field elements are replaced by their indices in canonical order and arithmetic
is done with Cayley tables built once per field, so nothing here goes through
the convolution or linear algebra used by :mod:`snakealg.ideals`.  Ideals are
stored extensionally as frozensets of index tuples.

For n in {2, 3} the results are compared against the analytic classification.
For n in 4..6 the oracle only reports what it finds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .errors import BudgetExceeded, InfiniteField, NotAugmentationZero
from .fields import Elem, Field

VECTOR_BUDGET = 10**6
IDEAL_BUDGET = 10**4
ORACLE_HEADS = range(2, 7)

Vec = tuple[int, ...]


class Tables:
    """Addition and multiplication tables of a finite field over indices 0..q-1."""

    def __init__(self, field: Field):
        if not field.is_finite:
            raise InfiniteField(f"the oracle needs a finite field, got {field}")
        self.field = field
        self.elems: list[Elem] = list(field.elements())
        self.q = q = len(self.elems)
        self.index = {e: i for i, e in enumerate(self.elems)}
        self.add = [[self.index[field.add(a, b)] for b in self.elems] for a in self.elems]
        self.mul = [[self.index[field.mul(a, b)] for b in self.elems] for a in self.elems]
        self.zero = self.index[field.zero]
        self.one = self.index[field.one]
        self.neg = [next(j for j in range(q) if self.add[i][j] == self.zero) for i in range(q)]

    def vec(self, elems: Sequence[Elem]) -> Vec:
        return tuple(self.index[self.field(e)] for e in elems)

    def unvec(self, v: Vec) -> tuple[Elem, ...]:
        return tuple(self.elems[i] for i in v)

    def conv(self, x: Vec, h: Vec) -> Vec:
        n = len(x)
        add, mul = self.add, self.mul
        out = [self.zero] * n
        for k in range(n):
            acc = self.zero
            for i in range(n):
                acc = add[acc][mul[x[i]][h[(k - i) % n]]]
            out[k] = acc
        return tuple(out)

    def vadd(self, x: Vec, y: Vec) -> Vec:
        return tuple(self.add[a][b] for a, b in zip(x, y))

    def smul(self, c: int, x: Vec) -> Vec:
        return tuple(self.mul[c][a] for a in x)

    def coord_sum(self, x: Vec) -> int:
        acc = self.zero
        for a in x:
            acc = self.add[acc][a]
        return acc


def _check_budget(q: int, n: int) -> None:
    if n not in ORACLE_HEADS:
        raise BudgetExceeded(f"oracle head count must be in 2..6, got {n}")
    if q**n > VECTOR_BUDGET:
        raise BudgetExceeded(f"{q}^{n} vectors exceed the budget {VECTOR_BUDGET}")


def enumerate_vectors(field: Field, n: int) -> Iterator[tuple[Elem, ...]]:
    """All |K|^n head vectors in canonical order."""
    if not field.is_finite:
        raise InfiniteField(f"cannot enumerate vectors over {field}")
    elems = list(field.elements())
    _check_budget(len(elems), n)
    return product(elems, repeat=n)


@dataclass(frozen=True)
class IdealSet:
    """A finite ideal of K[Z/nZ] inside the augmentation-zero part, as a set of index vectors."""

    tables: Tables = dc_field(compare=False, hash=False, repr=False)
    members: frozenset[Vec]

    @cached_property
    def sorted_members(self) -> list[Vec]:
        return sorted(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def vectors(self) -> list[tuple[Elem, ...]]:
        return [self.tables.unvec(v) for v in self.sorted_members]

    def check_closure(self, rng: random.Random, samples: int = 20) -> None:
        """Assert the ideal axioms; convolution is tested against ``samples`` random multipliers."""
        t = self.tables
        n = len(next(iter(self.members)))
        zero = (t.zero,) * n
        assert zero in self.members, "ideal lacks 0"
        for v in self.members:
            assert t.coord_sum(v) == t.zero, f"{t.unvec(v)} has nonzero coordinate sum"
        for v in self.members:
            for c in range(t.q):
                assert t.smul(c, v) in self.members, "not closed under scalars"
        members = self.sorted_members
        for _ in range(samples):
            a, b = rng.choice(members), rng.choice(members)
            assert t.vadd(a, b) in self.members, "not closed under addition"
            x = tuple(rng.randrange(t.q) for _ in range(n))
            assert t.conv(x, a) in self.members, "not closed under convolution"


def _principal(t: Tables, h: Vec) -> frozenset[Vec]:
    return frozenset(t.conv(x, h) for x in product(range(t.q), repeat=len(h)))


def principal_ideal_set(field: Field, h: Sequence[Elem], tables: Tables | None = None) -> IdealSet:
    """{x * h : x in K^n}, the ideal generated by h."""
    t = tables or Tables(field)
    v = t.vec(h)
    _check_budget(t.q, len(v))
    if t.coord_sum(v) != t.zero:
        raise NotAugmentationZero(f"{t.unvec(v)} has nonzero coordinate sum")
    ideal = IdealSet(t, _principal(t, v))
    ideal.check_closure(random.Random(hash(v) & 0xFFFF))
    return ideal


def _leading_one(t: Tables, v: Vec) -> bool:
    return next((a for a in v if a != t.zero), t.one) == t.one


def all_ideals_in_augmentation(field: Field, n: int, tables: Tables | None = None) -> list[IdealSet]:
    """Every ideal of K[Z/nZ] contained in the augmentation-zero subspace.

    Principal ideals of all augmentation-zero vectors are collected (only one
    representative per nonzero scalar class is needed, since <c h> = <h>), then
    closed under pairwise sums to a fixpoint.
    """
    t = tables or Tables(field)
    _check_budget(t.q, n)
    aug_zero = [v for v in product(range(t.q), repeat=n) if t.coord_sum(v) == t.zero]

    found: dict[frozenset[Vec], None] = {}
    for v in aug_zero:
        if _leading_one(t, v):
            found.setdefault(_principal(t, v))

    frontier = list(found)
    while frontier:
        fresh = []
        current = list(found)
        for a in frontier:
            for b in current:
                s = frozenset(t.vadd(x, y) for x in a for y in b)
                if s not in found:
                    found[s] = None
                    fresh.append(s)
                    if len(found) > IDEAL_BUDGET:
                        raise BudgetExceeded(f"more than {IDEAL_BUDGET} ideals")
        frontier = fresh

    rng = random.Random(0)
    ideals = [IdealSet(t, m) for m in found]
    for ideal in ideals:
        ideal.check_closure(rng)
    return sorted(ideals, key=lambda i: (len(i), i.sorted_members))


def is_principal(ideal: IdealSet) -> bool:
    t = ideal.tables
    return any(_principal(t, v) == ideal.members for v in ideal.sorted_members)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class OracleReport:
    field: Field
    n: int
    ideal_count: int
    proper_ideals: list[IdealSet]
    checks: list[Check]
    exploratory: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def proper_count(self) -> int:
        return len(self.proper_ideals)


def _proper(ideals: list[IdealSet], n: int, t: Tables) -> list[IdealSet]:
    full = max(len(i) for i in ideals)
    return [i for i in ideals if 1 < len(i) < full]


def explore(field: Field, n: int) -> OracleReport:
    """Report ideal counts without any expected values (any n in 2..6)."""
    t = Tables(field)
    ideals = all_ideals_in_augmentation(field, n, t)
    proper = _proper(ideals, n, t)
    principal = all(is_principal(i) for i in ideals)
    checks = [Check("all ideals principal (observed)", True, str(principal))]
    return OracleReport(field, n, len(ideals), proper, checks, exploratory=n > 3)


def cross_check(field: Field, n: int) -> OracleReport:
    """Compare the oracle's proper nonzero singular ideals with the analytic enumeration."""
    from .ideals import enumerate_singular_ideals

    if n not in (2, 3):
        return explore(field, n)
    t = Tables(field)
    ideals = all_ideals_in_augmentation(field, n, t)
    proper = _proper(ideals, n, t)
    analytic = enumerate_singular_ideals(field, n)
    expected = {principal_ideal_set(field, d.generator, t).members for d in analytic}
    found = {i.members for i in proper}
    aug_dim_size = t.q ** (n - 1)

    checks = [
        Check("zero ideal present", any(len(i) == 1 for i in ideals)),
        Check(
            "full augmentation ideal present",
            any(len(i) == aug_dim_size for i in ideals),
            f"expected {aug_dim_size} elements",
        ),
        Check("proper ideal count", len(found) == len(expected), f"oracle {len(found)}, analytic {len(expected)}"),
        Check("analytic generators found", expected <= found),
        Check("no extra ideals", found <= expected),
        Check("every ideal principal", all(is_principal(i) for i in ideals)),
    ]
    return OracleReport(field, n, len(ideals), proper, checks)
