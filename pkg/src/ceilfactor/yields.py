"""Yield counting: how many reduced fractions x/y in (0, 1) a multiplier covers.

A multiplier d covers x/y (lowest terms) when x*y*z**2 == d for some z.
Fractions are kept as :class:`fractions.Fraction`, which is already
reduced, hashable and ordered by value.
"""

from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Tuple

from .core import isqrt

__all__ = [
    "ReducedFraction",
    "DEFAULT_FACTOR_BOUND",
    "divisors",
    "fractions_of",
    "yield_of",
    "yield_of_set",
    "union_of_fractions",
    "tau",
    "factorize_small",
    "y1_formula",
    "y1_definitional",
    "format_fractions",
]

ReducedFraction = Fraction
PrimePowerFactorization = List[Tuple[int, int]]

DEFAULT_FACTOR_BOUND = 10**12


def divisors(n: int) -> List[int]:
    """All divisors of n >= 1 in ascending order, by trial division."""
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
    return small + large[::-1]


@lru_cache(maxsize=65536)
def fractions_of(d: int) -> FrozenSet[Fraction]:
    """Reduced fractions 0 < x/y < 1 with x*y*z**2 == d for some z >= 1.

    >>> sorted(fractions_of(12))
    [Fraction(1, 12), Fraction(1, 3), Fraction(3, 4)]
    """
    if d < 1:
        raise ValueError("fractions_of needs d >= 1")
    found = set()
    z = 1
    while z * z <= d:
        if d % (z * z) == 0:
            rest = d // (z * z)
            for a in divisors(rest):
                b = rest // a
                if a >= b:
                    break
                found.add(Fraction(a, b))
        z += 1
    return frozenset(found)


def yield_of(d: int) -> int:
    return len(fractions_of(d))


def union_of_fractions(values: Iterable[int]) -> FrozenSet[Fraction]:
    out = set()
    for d in values:
        out |= fractions_of(d)
    return frozenset(out)


def yield_of_set(values: Iterable[int]) -> int:
    """Size of the union of :func:`fractions_of` over ``values``.

    Overlapping fractions count once, so this is not the sum of yields.
    """
    return len(union_of_fractions(values))


def factorize_small(B: int, bound: int = DEFAULT_FACTOR_BOUND) -> PrimePowerFactorization:
    """Prime power factorization of B by trial division.

    Only meant for the harness-built B values, so anything above ``bound``
    is refused instead of silently running a long factorization.
    """
    if B < 2:
        raise ValueError(f"factorize_small needs B >= 2, got {B}")
    if B > bound:
        raise ValueError(f"B = {B} exceeds the trial-division bound {bound}")
    return _trial_factor(B)


def _trial_factor(n: int) -> PrimePowerFactorization:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            r = 0
            while n % p == 0:
                n //= p
                r += 1
            out.append((p, r))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def tau(d: int) -> int:
    if d < 1:
        raise ValueError("tau needs d >= 1")
    count = 1
    for _, r in _trial_factor(d):
        count *= r + 1
    return count


def y1_formula(factorization: PrimePowerFactorization) -> int:
    """Product of (2r + 1) over the prime powers p**r of B.

    This counts ordered coprime pairs (x, y) with x*y | B, the pair (1, 1)
    included. :func:`y1_definitional` gives the count of fractions in (0, 1).
    """
    out = 1
    for _, r in factorization:
        if r < 1:
            raise ValueError("exponents must be positive")
        out *= 2 * r + 1
    return out


def y1_definitional(factorization: PrimePowerFactorization) -> int:
    """Yield of the divisors of B as defined by :func:`yield_of_set`."""
    return (y1_formula(factorization) - 1) // 2


def format_fractions(fracs: Iterable[Fraction]) -> str:
    return " ".join(f"{fr.numerator}/{fr.denominator}" for fr in sorted(fracs))
