import pytest

from snakealg.errors import BudgetExceeded, InfiniteField, NotAugmentationZero
from snakealg.fields import make_field
from snakealg.oracle import (
    Tables,
    all_ideals_in_augmentation,
    cross_check,
    enumerate_vectors,
    explore,
    is_principal,
    principal_ideal_set,
)

from .helpers import BATTERY_SPECS


def test_enumerate_vectors_counts():
    assert len(list(enumerate_vectors(make_field("F2"), 2))) == 4
    assert len(list(enumerate_vectors(make_field("F3"), 3))) == 27
    assert len(list(enumerate_vectors(make_field("F2(w)"), 3))) == 64
    vs = list(enumerate_vectors(make_field("F3"), 2))
    assert [tuple(x.value for x in v) for v in vs[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]


def test_enumerate_vectors_errors():
    with pytest.raises(InfiniteField):
        enumerate_vectors(make_field("Q"), 2)
    with pytest.raises(BudgetExceeded):
        enumerate_vectors(make_field("F101"), 3)
    with pytest.raises(BudgetExceeded):
        enumerate_vectors(make_field("F2"), 7)


def test_principal_ideal_examples():
    f3 = make_field("F3")
    ideal = principal_ideal_set(f3, [f3(1)] * 3)
    assert [tuple(e.value for e in v) for v in ideal.vectors()] == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]
    f2 = make_field("F2")
    assert len(principal_ideal_set(f2, [f2(0), f2(0)])) == 1
    ideal = principal_ideal_set(f2, [f2(1), f2(1)])
    assert [tuple(e.value for e in v) for v in ideal.vectors()] == [(0, 0), (1, 1)]
    with pytest.raises(NotAugmentationZero):
        principal_ideal_set(f2, [f2(1), f2(0)])


@pytest.mark.parametrize("spec,count", [("F2", 2), ("F3", 3), ("F7", 4)])
def test_all_ideals_counts(spec, count):
    f = make_field(spec)
    ideals = all_ideals_in_augmentation(f, 3)
    assert len(ideals) == count
    sizes = sorted(len(i) for i in ideals)
    assert sizes[0] == 1 and sizes[-1] == f.order**2


def test_f7_ideals_are_the_expected_principal_ones():
    f = make_field("F7")
    ideals = {i.members for i in all_ideals_in_augmentation(f, 3)}
    for g in ([1, 2, 4], [1, 4, 2]):
        assert principal_ideal_set(f, [f(x) for x in g]).members in ideals


@pytest.mark.parametrize(
    "spec,n,proper",
    [("F5", 3, 0), ("F2(w)", 3, 2), ("F7", 2, 0), ("F3", 3, 1), ("F13", 3, 2)],
)
def test_cross_check_examples(spec, n, proper):
    report = cross_check(make_field(spec), n)
    assert report.passed, report.checks
    assert report.proper_count == proper


def test_tables_independent_arithmetic():
    f = make_field("F5(w)")
    t = Tables(f)
    assert t.q == 25
    for a in range(t.q):
        assert t.add[a][t.neg[a]] == t.zero
        assert t.mul[a][t.one] == a


def test_principal_closure_under_random_multipliers():
    f = make_field("F7")
    t = Tables(f)
    ideal = principal_ideal_set(f, [f(1), f(2), f(4)], t)
    assert len(ideal) == 7
    assert is_principal(ideal)


@pytest.mark.parametrize("spec,n", [("F2", 4), ("F3", 4), ("F2", 5), ("F2", 6)])
def test_exploratory_head_counts_run(spec, n):
    report = explore(make_field(spec), n)
    assert report.exploratory
    assert report.ideal_count >= 2


def test_cross_check_delegates_for_large_n():
    report = cross_check(make_field("F2"), 4)
    assert report.exploratory and report.passed
