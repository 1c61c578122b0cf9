"""Exact coefficient fields.

Four kinds are supported, named by their spec strings:

    "Q"       rationals
    "Q(w)"    Q[T]/(T^2+T+1)
    "F<p>"    the prime field of order p
    "F<p>(w)" F_p[T]/(T^2+T+1), only for p = 2 mod 3

In the quadratic extensions ``w`` is a root of T^2 + T + 1, so w^2 = -1 - w.
Over Q(w) it plays the role of the complex number (-1 + i*sqrt(3))/2.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import Iterator

from . import numtheory
from .errors import DivisionByZero, FieldSpecError, InvalidExtension, MixedFields, ScalarParseError


class FieldKind(enum.Enum):
    RATIONALS = "Rationals"
    PRIME_FIELD = "PrimeField"
    PRIME_FIELD_EXT_OMEGA = "PrimeFieldExtOmega"
    RATIONALS_EXT_OMEGA = "RationalsExtOmega"


_SPEC_RE = re.compile(r"^(?:(Q)|F(\d+))(\(w\))?$")
_MONOMIAL_RE = re.compile(r"[+-]?[^+-]+")
_NUMBER_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    p: int | None = None

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        m = _SPEC_RE.match(text.strip())
        if not m:
            raise FieldSpecError(f"unrecognized field spec {text!r}; expected Q, Q(w), F<p> or F<p>(w)")
        rational, p, ext = m.groups()
        if rational:
            return cls(FieldKind.RATIONALS_EXT_OMEGA if ext else FieldKind.RATIONALS)
        return cls(FieldKind.PRIME_FIELD_EXT_OMEGA if ext else FieldKind.PRIME_FIELD, int(p))

    def __str__(self) -> str:
        base = "Q" if self.p is None else f"F{self.p}"
        return base + ("(w)" if self.kind in _EXT_KINDS else "")


_EXT_KINDS = (FieldKind.PRIME_FIELD_EXT_OMEGA, FieldKind.RATIONALS_EXT_OMEGA)


class Field:
    """A computable field.  Instances compare equal when their specs do."""

    def __init__(self, spec: FieldSpec):
        if spec.kind in (FieldKind.PRIME_FIELD, FieldKind.PRIME_FIELD_EXT_OMEGA):
            if spec.p is None:
                raise FieldSpecError(f"{spec.kind.value} needs a modulus")
            numtheory.check_prime(spec.p)
            if spec.kind is FieldKind.PRIME_FIELD_EXT_OMEGA and spec.p % 3 != 2:
                raise InvalidExtension(
                    f"T^2+T+1 is reducible over F{spec.p}; F{spec.p}(w) would not be a field"
                )
        elif spec.p is not None:
            raise FieldSpecError(f"{spec.kind.value} takes no modulus")
        self.spec = spec
        self.kind = spec.kind
        self.p = spec.p
        self.is_extension = spec.kind in _EXT_KINDS
        self.zero = self._wrap(self._from_int(0))
        self.one = self._wrap(self._from_int(1))

    # identity

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"Field({str(self.spec)!r})"

    def __str__(self):
        return str(self.spec)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        if self.p is None:
            return None
        return self.p**2 if self.is_extension else self.p

    # raw values: int mod p, Fraction, or a pair of those for a + b*w

    def _base(self, x) -> int | Fraction:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DivisionByZero(f"denominator {x.denominator} vanishes in F{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def _from_int(self, x):
        b = self._base(x)
        return (b, self._base(0)) if self.is_extension else b

    def _wrap(self, value) -> Elem:
        return Elem(self, value)

    def __call__(self, x=0, y=None) -> Elem:
        """Coerce ``x`` (or ``x + y*w``) into the field."""
        if isinstance(x, Elem):
            if x.field != self:
                raise MixedFields(f"element of {x.field} used in {self}")
            return x
        if y is None:
            return self._wrap(self._from_int(x))
        if not self.is_extension:
            raise InvalidExtension(f"{self} has no w")
        return self._wrap((self._base(x), self._base(y)))

    @property
    def w(self) -> Elem:
        return self(0, 1)

    def _check(self, *xs: Elem) -> None:
        for x in xs:
            if not isinstance(x, Elem) or x.field != self:
                other = x.field if isinstance(x, Elem) else type(x).__name__
                raise MixedFields(f"operand from {other} used in {self}")

    # arithmetic

    def add(self, x: Elem, y: Elem) -> Elem:
        self._check(x, y)
        a, b = x.value, y.value
        if self.is_extension:
            return self._wrap((self._red(a[0] + b[0]), self._red(a[1] + b[1])))
        return self._wrap(self._red(a + b))

    def neg(self, x: Elem) -> Elem:
        self._check(x)
        a = x.value
        if self.is_extension:
            return self._wrap((self._red(-a[0]), self._red(-a[1])))
        return self._wrap(self._red(-a))

    def sub(self, x: Elem, y: Elem) -> Elem:
        return self.add(x, self.neg(y))

    def mul(self, x: Elem, y: Elem) -> Elem:
        self._check(x, y)
        a, b = x.value, y.value
        if self.is_extension:
            # (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
            t = a[1] * b[1]
            return self._wrap((self._red(a[0] * b[0] - t), self._red(a[0] * b[1] + a[1] * b[0] - t)))
        return self._wrap(self._red(a * b))

    def inv(self, x: Elem) -> Elem:
        self._check(x)
        if x.is_zero():
            raise DivisionByZero(f"0 has no inverse in {self}")
        a = x.value
        if self.is_extension:
            # conjugate of a0 + a1 w is (a0 - a1) - a1 w; norm a0^2 - a0 a1 + a1^2
            norm = a[0] * a[0] - a[0] * a[1] + a[1] * a[1]
            n_inv = self._base_inv(self._red(norm))
            return self._wrap((self._red((a[0] - a[1]) * n_inv), self._red(-a[1] * n_inv)))
        return self._wrap(self._base_inv(a))

    def div(self, x: Elem, y: Elem) -> Elem:
        return self.mul(x, self.inv(y))

    def pow(self, x: Elem, k: int) -> Elem:
        if k < 0:
            return self.pow(self.inv(x), -k)
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def _red(self, v):
        return v if self.p is None else v % self.p

    def _base_inv(self, v):
        if self.p is None:
            return 1 / v
        return pow(v, -1, self.p)

    # enumeration and ordering

    def elements(self) -> Iterator[Elem]:
        """All elements of a finite field, in canonical order."""
        if self.p is None:
            raise ValueError(f"{self} is infinite")
        if self.is_extension:
            for a, b in product(range(self.p), repeat=2):
                yield self._wrap((a, b))
        else:
            for a in range(self.p):
                yield self._wrap(a)

    def sort_key(self, x: Elem):
        """Least representatives for F_p, lexicographic on (a, b) for extensions."""
        return x.value

    def is_negative(self, x: Elem) -> bool:
        """True for elements printed with a leading minus sign (rational kinds only)."""
        if self.p is not None:
            return False
        v = x.value
        if self.is_extension:
            return v[1] == 0 and v[0] < 0
        return v < 0

    def is_simple_literal(self, x: Elem) -> bool:
        """True when ``format(x)`` is a plain number that needs no parentheses before '*'."""
        return not self.is_extension or x.value[1] == 0

    # text

    def format(self, x: Elem) -> str:
        self._check(x)
        if not self.is_extension:
            return _fmt_base(x.value)
        a, b = x.value
        if b == 0:
            return _fmt_base(a)
        wpart = f"{_fmt_base(b)}*w"
        if a == 0:
            return wpart
        if self.p is None and b < 0:
            return f"{_fmt_base(a)}-{_fmt_base(-b)}*w"
        return f"{_fmt_base(a)}+{wpart}"

    def parse(self, text: str) -> Elem:
        """Parse a scalar literal: signed integers, a/b, and sums with k*w terms."""
        s = "".join(text.split())
        while s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if not s:
            raise ScalarParseError(f"empty scalar literal {text!r}")
        monomials = _MONOMIAL_RE.findall(s)
        if "".join(monomials) != s:
            raise ScalarParseError(f"cannot parse scalar {text!r}")
        total = self.zero
        for mono in monomials:
            sign = -1 if mono[0] == "-" else 1
            body = mono.lstrip("+-")
            if body.endswith("w"):
                if not self.is_extension:
                    raise ScalarParseError(f"{self} has no w, in {text!r}")
                coeff = body[:-1]
                if coeff.endswith("*"):
                    coeff = coeff[:-1]
                    if not coeff:
                        raise ScalarParseError(f"cannot parse scalar {text!r}")
                c = self._parse_number(coeff, text) if coeff else self.one
                term = self.mul(c, self.w)
            else:
                term = self._parse_number(body, text)
            total = self.add(total, term if sign > 0 else self.neg(term))
        return total

    def _parse_number(self, s: str, text: str) -> Elem:
        m = _NUMBER_RE.match(s)
        if not m:
            raise ScalarParseError(f"cannot parse scalar {text!r}")
        num, den = m.groups()
        if den is None:
            return self(int(num))
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        try:
            return self(Fraction(int(num), int(den)))
        except DivisionByZero as exc:
            raise ScalarParseError(str(exc)) from None

    # Phi_3

    def roots_of_phi3(self) -> RootReport:
        if self.kind is FieldKind.RATIONALS:
            return RootReport((), False)
        if self.kind is FieldKind.PRIME_FIELD:
            roots = tuple(self(r) for r in numtheory.phi3_roots_mod_p(self.p))
            return RootReport(roots, self.p == 3)
        w = self.w
        other = self.neg(self.add(w, self.one))
        return RootReport(tuple(sorted((w, other), key=self.sort_key)), False)


def _fmt_base(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


@total_ordering
class Elem:
    """An immutable field element; arithmetic operators dispatch to the field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    def _coerce(self, other) -> Elem:
        if isinstance(other, Elem):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.sub(self, o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.sub(o, self)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.div(self, o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self.field.div(o, self)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, k: int):
        return self.field.pow(self, k)

    def inv(self) -> Elem:
        return self.field.inv(self)

    def is_zero(self) -> bool:
        v = self.value
        return v == (0, 0) if self.field.is_extension else v == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == self.field(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        if other.field != self.field:
            raise MixedFields(f"cannot order elements of {self.field} and {other.field}")
        return self.field.sort_key(self) < self.field.sort_key(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"{self.field}({self.field.format(self)})"


@dataclass(frozen=True)
class RootReport:
    roots: tuple[Elem, ...]
    double_root: bool


def make_field(spec: FieldSpec | str) -> Field:
    if isinstance(spec, str):
        spec = FieldSpec.parse(spec)
    return Field(spec)


def arith(f: Field, op: str, x: Elem, y: Elem | None = None) -> Elem:
    """Dispatch one of add, sub, mul, neg, inv by name."""
    if op in ("neg", "inv"):
        return getattr(f, op)(x)
    if op not in ("add", "sub", "mul"):
        raise ValueError(f"unknown operation {op!r}")
    if y is None:
        raise ValueError(f"{op} needs two operands")
    return getattr(f, op)(x, y)
