"""Random generators shared by the test modules."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from snakealg.algebra import SnakeElement, Term, from_terms
from snakealg.body import BodyMap, PointDescriptor, canonicalize
from snakealg.fields import Field, make_field

BATTERY_SPECS = ["F2", "F3", "F5", "F7", "F11", "F13", "F2(w)", "F5(w)"]
ALL_KIND_SPECS = ["Q", "Q(w)", "F2", "F3", "F7", "F2(w)", "F5(w)"]


def random_scalar(field: Field, rng: random.Random):
    if field.is_finite:
        if field.is_extension:
            return field(rng.randrange(field.p), rng.randrange(field.p))
        return field(rng.randrange(field.p))
    def q():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    if field.is_extension:
        return field(q(), q())
    return field(q())


def random_word(rng: random.Random, max_len: int = 4) -> str:
    return "".join(rng.choice("lu") for _ in range(rng.randint(0, max_len)))


def random_trie_node(field: Field, rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.35:
        # skew towards small values so merges actually happen
        return random_scalar(field, rng) if rng.random() < 0.6 else field(rng.randint(0, 1))
    return (random_trie_node(field, rng, depth - 1), random_trie_node(field, rng, depth - 1))


def random_body(field: Field, rng: random.Random, depth: int = 4) -> BodyMap:
    return BodyMap(field, canonicalize(random_trie_node(field, rng, depth)))


def random_point(rng: random.Random, max_len: int = 6) -> PointDescriptor:
    return PointDescriptor(random_word(rng, max_len), rng.choice("lu"))


def random_terms(field: Field, n: int, rng: random.Random, count: int | None = None) -> list[Term]:
    terms = []
    for _ in range(rng.randint(0, 6) if count is None else count):
        word = random_word(rng)
        tag = None
        if all(c == "l" for c in word) and rng.random() < 0.6:
            tag = rng.randrange(n)
        terms.append(Term(random_scalar(field, rng), word, tag))
    return terms


def random_element(field: Field, n: int, rng: random.Random) -> SnakeElement:
    """A random element with body depth at most 4."""
    return from_terms(field, n, random_terms(field, n, rng))


def random_singular(field: Field, n: int, rng: random.Random) -> SnakeElement:
    heads = [random_scalar(field, rng) for _ in range(n - 1)]
    heads.append(-sum(heads, field.zero))
    return SnakeElement.from_heads(field, heads)


field_specs = st.sampled_from(ALL_KIND_SPECS).map(make_field)
