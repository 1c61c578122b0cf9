"""Text syntax for snake algebra elements.

    element := term (('+'|'-') term)*
    term    := (scalar '*')? atom | scalar
    atom    := 'X' tag? | 'Z(' word ')' tag? | '[' scalar (',' scalar)* ']'
    tag     := '@' digit
    word    := [lu]*

``[a0,...,a_{n-1}]`` stands for the sum of a_i * X@i, and a bare scalar s for
s * X@0.  In term position a scalar is an unsigned integer, a fraction ``a/b``,
``w``, or any field literal in parentheses such as ``(1+2*w)``.  Inside brackets
each entry is a full field literal.  Whitespace is ignored.
"""

from __future__ import annotations

import re

from .algebra import SnakeElement, Term, check_heads
from .errors import ExprSyntaxError, InvalidHeadTag
from .fields import Elem, Field

_NUMBER = re.compile(r"\d+(?:/\d+)?")


class _Parser:
    def __init__(self, field: Field, n: int, text: str):
        self.field = field
        self.n = n
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ExprSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def element(self) -> list[Term]:
        terms: list[Term] = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            terms.extend(self.term(sign))
            ch = self.peek()
            if not ch:
                return terms
            if ch not in "+-":
                self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1

    def term(self, sign: int) -> list[Term]:
        ch = self.peek()
        if ch in ("X", "Z", "["):
            coeff = self.field(sign)
        else:
            coeff = self.scalar()
            if sign < 0:
                coeff = self.field.neg(coeff)
            if self.peek() != "*":
                return [Term(coeff, "", 0)]
            self.pos += 1
        return self.atom(coeff)

    def scalar(self) -> Elem:
        self.skip()
        start = self.pos
        ch = self.peek()
        if ch == "(":
            depth = 0
            while self.pos < len(self.text):
                c = self.text[self.pos]
                depth += (c == "(") - (c == ")")
                self.pos += 1
                if depth == 0:
                    break
            if depth:
                self.pos = start
                self.error("unbalanced parenthesis")
            return self.field.parse(self.text[start : self.pos])
        if ch == "w":
            self.pos += 1
            return self.field.parse("w")
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            self.error("expected a scalar, 'X', 'Z(' or '['")
        self.pos = m.end()
        return self.field.parse(m.group())

    def tag(self) -> int | None:
        if self.peek() != "@":
            return None
        self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            self.error("expected a digit after '@'")
        d = int(self.text[self.pos])
        self.pos += 1
        return d

    def atom(self, coeff: Elem) -> list[Term]:
        ch = self.peek()
        if ch == "X":
            self.pos += 1
            return [self._tagged(coeff, "", self.tag())]
        if ch == "Z":
            self.pos += 1
            self.expect("(")
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in "lu":
                self.pos += 1
            word = self.text[start : self.pos]
            self.expect(")")
            return [self._tagged(coeff, word, self.tag())]
        if ch == "[":
            self.pos += 1
            close = self.text.find("]", self.pos)
            if close < 0:
                self.error("unclosed '['")
            entries = self.text[self.pos : close].split(",")
            if len(entries) != self.n:
                self.error(f"bracket has {len(entries)} entries, expected {self.n}")
            values = [self.field.parse(e) for e in entries]
            self.pos = close + 1
            return [Term(self.field.mul(coeff, v), "", i) for i, v in enumerate(values)]
        self.error("expected 'X', 'Z(' or '['")

    def _tagged(self, coeff: Elem, word: str, tag: int | None) -> Term:
        if tag is not None:
            if tag >= self.n:
                raise InvalidHeadTag(f"head tag @{tag} out of range for {self.n} heads")
            if any(c != "l" for c in word):
                raise InvalidHeadTag(f"Z({word}) does not contain 0, so it cannot carry @{tag}")
        return Term(coeff, word, tag)


def parse_element(field: Field, n: int, text: str) -> list[Term]:
    check_heads(n)
    p = _Parser(field, n, text)
    if not p.peek():
        p.error("empty expression")
    return p.element()


def format_heads(heads) -> str:
    return "[" + ",".join(str(a) for a in heads) + "]"


def _scalar_text(field: Field, c: Elem) -> str:
    s = str(c)
    return s if field.is_simple_literal(c) else f"({s})"


def print_element(f: SnakeElement) -> str:
    """Bracket of head values, then c*Z(w) for each nonzero cylinder of the body remainder.

    The remainder (body minus head sum) vanishes near 0; its canonical trie leaves
    are maximal disjoint cylinders, listed in lexicographic word order.
    """
    field = f.field
    out = [format_heads(f.heads)]
    for word, c in f.remainder().leaves():
        if c.is_zero():
            continue
        if field.is_negative(c):
            out.append(f"- {_scalar_text(field, field.neg(c))}*Z({word})")
        else:
            out.append(f"+ {_scalar_text(field, c)}*Z({word})")
    return " ".join(out)

