import math

import pytest
from hypothesis import given, strategies as st

from ceilfactor.multiplier import (
    Degenerate,
    FactorResult,
    f,
    f2,
    recover_close_factors,
    split_oracle,
    surd_gap_at_most_one,
    try_multiplier,
)
from ceilfactor.primes import primes_up_to
from ceilfactor.core import ceil_2sqrt

ODD_PRIMES = [p for p in primes_up_to(2000) if p > 2]


@pytest.mark.parametrize("n, expected", [(176039, 1444), (25, 0), (99, 4), (0, 0)])
def test_f_examples(n, expected):
    assert f(n) == expected


def test_f_99_by_definition():
    assert 20**2 - 4 * 99 == f(99)


@pytest.mark.parametrize("n", [99, 25, 188828690, 176039])
def test_f2_zero_examples(n):
    assert f2(n) == 0


def test_f2_example_product():
    assert 1110757 * 170 == 188828690


def test_f_is_nonnegative():
    assert all(f(n) >= 0 for n in range(20000))


def test_surd_gap_boundaries():
    # sqrt(4) - sqrt(1) == 1 exactly
    assert surd_gap_at_most_one(4, 1)
    assert surd_gap_at_most_one(9, 4)
    assert not surd_gap_at_most_one(10, 4)
    assert not surd_gap_at_most_one(1373, 809)
    assert surd_gap_at_most_one(439, 401)
    assert surd_gap_at_most_one(7, 7)


def test_surd_gap_matches_float_away_from_boundary():
    for a in range(1, 300):
        for b in range(1, 300):
            gap = abs(math.sqrt(a) - math.sqrt(b))
            if abs(gap - 1) > 1e-9:
                assert surd_gap_at_most_one(a, b) == (gap <= 1), (a, b)


def _close_pairs(n):
    """All divisor pairs u >= v of n with |sqrt(u) - sqrt(v)| <= 1 (float-free)."""
    out = []
    for v in range(1, n + 1):
        if v * v > n:
            break
        if n % v == 0:
            u = n // v
            s = u + v - 1
            if u == v or s * s <= 4 * u * v:
                out.append((u, v))
    return out


@pytest.mark.parametrize("n, expected", [(176039, (439, 401)), (99, (11, 9)), (36, (6, 6))])
def test_recover_close_factors(n, expected):
    assert recover_close_factors(n) == expected
    assert expected in _close_pairs(n)


def test_recover_close_factors_absent():
    assert recover_close_factors(1110757) is None
    assert _close_pairs(1110757) == []


def test_recover_matches_divisor_scan():
    for n in range(1, 5001):
        got = recover_close_factors(n)
        pairs = _close_pairs(n)
        assert (got is not None) == bool(pairs), n
        if got is not None:
            assert got in pairs and got[0] * got[1] == n


def test_try_multiplier_1110757_d170():
    res = try_multiplier(1110757, 170)
    assert isinstance(res, FactorResult)
    assert (res.t, res.u, res.v) == (23, 13753, 13730)
    assert res.factors == (809, 1373)


def test_1110757_gcd_labels():
    # the gcd with u gives 809 and the gcd with v gives 1373
    assert math.gcd(1110757, 13753) == 809
    assert math.gcd(1110757, 13730) == 1373


def test_try_multiplier_176039_d1():
    res = try_multiplier(176039, 1)
    assert (res.t, res.u, res.v, res.factors) == (38, 439, 401, (401, 439))


def test_try_multiplier_absent():
    assert f2(1110757) != 0
    assert try_multiplier(1110757, 1) is None


def test_try_multiplier_perfect_square_N():
    res = try_multiplier(4, 1)
    assert (res.t, res.u, res.v, res.factors) == (0, 2, 2, (2, 2))


@pytest.mark.parametrize("N, d", [(3, 1), (15, 0), (15, 8), (100, 50)])
def test_try_multiplier_range_checks(N, d):
    with pytest.raises(ValueError):
        try_multiplier(N, d)


def test_degenerate_marker():
    # N prime: N*d = N*d is the only split, so the gcds are N and 1
    assert try_multiplier(5, 2) == Degenerate(5, 2, 3, 5, 2)
    assert try_multiplier(7, 3) == Degenerate(7, 3, 4, 7, 3)


def test_no_degenerate_results_for_small_semiprimes():
    for i, p in enumerate(ODD_PRIMES[:25]):
        for q in ODD_PRIMES[i + 1 : 25]:
            N = p * q
            for d in range(1, min((N + 1) // 2, 400)):
                assert not isinstance(try_multiplier(N, d), Degenerate)


@pytest.mark.parametrize("p, q, d, expected", [(1373, 809, 170, True), (1373, 809, 1, False),
                                               (7, 7, 9, True), (7, 7, 36, True)])
def test_split_oracle_examples(p, q, d, expected):
    assert split_oracle(p, q, d) is expected


def test_split_oracle_1373_809_witness():
    # x = 17, y = 10: p*y = 13730, q*x = 13753
    assert 17 * 10 == 170
    assert surd_gap_at_most_one(1373 * 10, 809 * 17)


semiprime_and_multiplier = st.tuples(
    st.sampled_from(ODD_PRIMES), st.sampled_from(ODD_PRIMES), st.integers(min_value=1, max_value=5000)
).filter(lambda t: t[0] != t[1] and 2 * t[2] < t[0] * t[1])


@given(semiprime_and_multiplier)
def test_try_multiplier_agrees_with_oracle(case):
    p, q, d = case
    N = p * q
    res = try_multiplier(N, d)
    assert isinstance(res, FactorResult) == split_oracle(p, q, d)
    if isinstance(res, FactorResult):
        assert res.u * res.v == N * d
        assert res.u - res.v == res.t
        assert res.u + res.v == ceil_2sqrt(N * d)
        assert res.factors == (min(p, q), max(p, q))
    else:
        assert not isinstance(res, Degenerate)


def test_large_close_split():
    u, v = 10**40 + 12, 10**40 + 7
    assert recover_close_factors(u * v) == (u, v)
    assert f(u * v) == 25


def test_large_semiprime_with_multiplier():
    p, q = 2**61 - 1, 2**89 - 1  # Mersenne primes
    d = 2**28  # p*d = 2**89 - 2**28 sits right next to q
    assert split_oracle(p, q, d)
    res = try_multiplier(p * q, d)
    assert res.factors == (p, q)
    assert res.u * res.v == p * q * d
