"""Exact integer primitives: square roots, the ceiling of 2*sqrt(n), gcd.

Everything here works on Python ints of any size and never touches floats.
"""

import math
import re

__all__ = ["isqrt", "ceil_2sqrt", "is_perfect_square", "gcd", "parse_natural"]

_DECIMAL = re.compile(r"[0-9]+")


def parse_natural(text: str) -> int:
    """Parse a plain decimal string (digits only, no sign, no separators)."""
    if not isinstance(text, str) or not _DECIMAL.fullmatch(text):
        raise ValueError(f"not a decimal natural number: {text!r}")
    return int(text)


def isqrt(n: int) -> int:
    """Return floor(sqrt(n)) for n >= 0.

    >>> [isqrt(k) for k in (0, 17, 176039)]
    [0, 4, 419]
    """
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def ceil_2sqrt(n: int) -> int:
    """Smallest integer c with c >= 2*sqrt(n), i.e. c*c >= 4n.

    >>> ceil_2sqrt(176039), ceil_2sqrt(25), ceil_2sqrt(99)
    (840, 10, 20)
    """
    s = isqrt(4 * n)
    return s if s * s == 4 * n else s + 1


def is_perfect_square(n: int):
    """Return ``(True, root)`` if n is a square, else ``(False, None)``."""
    if n < 0:
        return False, None
    s = isqrt(n)
    if s * s == n:
        return True, s
    return False, None


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative arguments")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)
