"""Small prime tables (sieve of Eratosthenes)."""

from functools import lru_cache
from typing import List

from .core import isqrt


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple:
    if limit < 2:
        return ()
    bs = bytearray(b"\x01") * (limit + 1)
    bs[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if bs[p]:
            bs[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return tuple(i for i, flag in enumerate(bs) if flag)


def primes_up_to(limit: int) -> List[int]:
    """Primes p <= limit."""
    return list(_sieve(limit))


def first_primes(k: int) -> List[int]:
    if k < 0:
        raise ValueError("k must be nonnegative")
    limit = 16
    while True:
        table = _sieve(limit)
        if len(table) >= k:
            return list(table[:k])
        limit *= 2
