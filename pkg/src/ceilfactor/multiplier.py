"""The ceiling-square test and multiplier-based factoring.

f(n) = C(2*sqrt(n))**2 - 4n vanishes exactly on perfect squares, so
f(f(n)) == 0 means f(n) = t**2 and n splits as u*v with u - v = t and
u + v = C(2*sqrt(n)).  Running the test on N*d for a multiplier d and
taking gcds with N separates the two prime factors of a semiprime N.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

from .core import ceil_2sqrt, gcd, is_perfect_square
from .yields import divisors

__all__ = [
    "f",
    "f2",
    "FactorResult",
    "Degenerate",
    "recover_close_factors",
    "try_multiplier",
    "surd_gap_at_most_one",
    "split_oracle",
]


def f(n: int) -> int:
    c = ceil_2sqrt(n)
    return c * c - 4 * n


def f2(n: int) -> int:
    return f(f(n))


def surd_gap_at_most_one(a: int, b: int) -> bool:
    """Decide |sqrt(a) - sqrt(b)| <= 1 for positive integers, exactly.

    Squaring gives a + b - 1 <= 2*sqrt(ab); the left side is positive for
    a, b >= 1, so square again.
    """
    if a == b:
        return True
    s = a + b - 1
    return s * s <= 4 * a * b


@dataclass(frozen=True)
class FactorResult:
    """A successful multiplier test: ``u * v == N * d`` and ``a * b == N``."""

    N: int
    d: int
    t: int
    u: int
    v: int
    factors: Tuple[int, int]  # (a, b) with a <= b


class Degenerate(NamedTuple):
    """The test passed for N*d but the gcds only produced trivial divisors."""

    N: int
    d: int
    t: int
    u: int
    v: int


def _split(n: int):
    """Return (t, u, v) with u*v == n, u - v == t when f2(n) == 0, else None."""
    c = ceil_2sqrt(n)
    ft = c * c - 4 * n
    ok, t = is_perfect_square(ft)
    if not ok:
        return None
    # c and t share parity because c^2 - t^2 = 4n
    return t, (c + t) // 2, (c - t) // 2


def recover_close_factors(N: int) -> Optional[Tuple[int, int]]:
    """Recover (p, q), p >= q, when N = p*q with |sqrt(p) - sqrt(q)| <= 1.

    Returns None when N has no such factorization.
    """
    parts = _split(N)
    if parts is None:
        return None
    _, u, v = parts
    return u, v


def try_multiplier(N: int, d: int):
    """Run the test on N*d and extract a factor pair of N.

    Returns a :class:`FactorResult` on success, a :class:`Degenerate` when
    the test passes but the gcds give only trivial divisors, and None when
    f2(N*d) != 0.
    """
    if N < 4:
        raise ValueError(f"N must be at least 4, got {N}")
    if d < 1 or 2 * d >= N:
        raise ValueError(f"multiplier d={d} outside 1 <= d < N/2 for N={N}")
    parts = _split(N * d)
    if parts is None:
        return None
    t, u, v = parts
    a, b = gcd(N, u), gcd(N, v)
    if a * b != N:
        if 1 < a < N:
            b = N // a
        elif 1 < b < N:
            a = N // b
    if a * b != N or not (1 < a < N and 1 < b < N):
        return Degenerate(N, d, t, u, v)
    return FactorResult(N, d, t, u, v, (min(a, b), max(a, b)))


@lru_cache(maxsize=4096)
def _divisors(n: int) -> Tuple[int, ...]:
    return tuple(divisors(n))


def split_oracle(p: int, q: int, d: int) -> bool:
    """True iff d = x*y for some ordered pair with |sqrt(p*y) - sqrt(q*x)| <= 1.

    Needs the prime factors, so it is a ground-truth check rather than a
    factoring method.
    """
    if p < 2 or q < 2 or d < 1:
        raise ValueError("split_oracle needs p, q >= 2 and d >= 1")
    return any(surd_gap_at_most_one(p * (d // x), q * x) for x in _divisors(d))
