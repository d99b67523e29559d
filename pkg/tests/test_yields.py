import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ceilfactor.yields import (
    divisors,
    factorize_small,
    format_fractions,
    fractions_of,
    tau,
    y1_definitional,
    y1_formula,
    yield_of,
    yield_of_set,
)


def triple_scan(d):
    """Reduced x/y in (0, 1) with x*y*z*z == d, straight from the definition."""
    out = set()
    for z in range(1, d + 1):
        if z * z > d:
            break
        for x in range(1, d // (z * z) + 1):
            y, r = divmod(d, x * z * z)
            if r == 0 and x < y and math.gcd(x, y) == 1:
                out.add((x, y))
    return out


def as_pairs(fracs):
    return {(fr.numerator, fr.denominator) for fr in fracs}


def test_fractions_of_12():
    assert fractions_of(12) == {Fraction(1, 12), Fraction(1, 3), Fraction(3, 4)}


def test_fractions_of_20():
    assert fractions_of(20) == {Fraction(1, 20), Fraction(1, 5), Fraction(4, 5)}
    assert as_pairs(fractions_of(20)) == triple_scan(20)


def test_fractions_of_1_is_empty():
    assert fractions_of(1) == frozenset()


@pytest.mark.parametrize("d, expected", [(12, 3), (1, 0), (4, 1)])
def test_yield_of_examples(d, expected):
    assert yield_of(d) == expected
    assert len(triple_scan(d)) == expected


def test_yield_matches_triple_scan():
    for d in range(1, 5001):
        assert as_pairs(fractions_of(d)) == triple_scan(d), d


def test_yield_of_set_examples():
    assert yield_of_set([5, 12, 20]) == 6
    assert yield_of_set([12, 20]) == 6
    assert yield_of_set([1]) == 0
    assert yield_of_set([]) == 0


def test_subadditivity_is_strict_for_5_20():
    assert yield_of_set([5, 20]) < yield_of(5) + yield_of(20)


@given(st.lists(st.integers(min_value=1, max_value=3000), max_size=12))
def test_subadditivity(values):
    assert yield_of_set(values) <= sum(yield_of(d) for d in values)


def test_yield_upper_bound_by_square_divisors():
    for d in range(1, 3001):
        bound = sum(tau(d // (z * z)) // 2 for z in range(1, math.isqrt(d) + 1) if d % (z * z) == 0)
        assert yield_of(d) <= bound


@pytest.mark.parametrize("d, expected", [(12, 6), (1, 1), (97, 2), (720, 30), (2**40, 41)])
def test_tau(d, expected):
    assert tau(d) == expected


def test_tau_matches_divisor_list():
    for d in range(1, 3000):
        assert tau(d) == sum(1 for k in range(1, d + 1) if d % k == 0)


@pytest.mark.parametrize("B, expected", [(12, [(2, 2), (3, 1)]), (30, [(2, 1), (3, 1), (5, 1)]),
                                         (720, [(2, 4), (3, 2), (5, 1)]), (97, [(97, 1)])])
def test_factorize_small(B, expected):
    assert factorize_small(B) == expected
    assert math.prod(p**r for p, r in expected) == B


def test_factorize_small_bound():
    with pytest.raises(ValueError):
        factorize_small(10**12 + 1)
    with pytest.raises(ValueError):
        factorize_small(1000, bound=999)
    with pytest.raises(ValueError):
        factorize_small(1)


def test_factorize_small_reconstructs():
    for B in range(2, 5000):
        fact = factorize_small(B)
        assert math.prod(p**r for p, r in fact) == B
        assert [p for p, _ in fact] == sorted({p for p, _ in fact})


def test_y1_formula():
    assert y1_formula([(2, 2), (3, 1)]) == 15
    assert y1_formula([(101, 1)]) == 3
    assert y1_formula(factorize_small(30)) == 27
    assert y1_definitional([(2, 2), (3, 1)]) == 7


def test_y1_definitional_against_union_for_12():
    assert yield_of_set(divisors(12)) == 7


def test_format_fractions_sorted_by_value():
    assert format_fractions(fractions_of(12)) == "1/12 1/3 3/4"


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(49) == [1, 7, 49]
