"""Test databases of multipliers and the capacity heuristics for them.

Two families are built here: consecutive integers ``1..m`` and the sorted
divisors of some B (given directly, or as n!, a primorial, or lcm(1..m)).
Recipes are written as strings so the CLI and CSV output can name them::

    consecutive:m
    consecutive:auto             # m chosen per semiprime, see min_consecutive_size
    divisors:B
    divisors:factorial:n
    divisors:primorial:k
    divisors:lcm:m
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .primes import first_primes
from .yields import DEFAULT_FACTOR_BOUND, divisors, factorize_small, y1_formula

__all__ = [
    "Recipe",
    "TestDatabase",
    "parse_recipe",
    "build",
    "build_consecutive",
    "build_divisors",
    "factorial",
    "primorial",
    "lcm_upto",
    "d0_capacity_ok",
    "d1_capacity_ok",
    "min_consecutive_size",
    "recipe_B",
]

Rational = Union[int, Fraction]

_B_SOURCES = ("explicit", "factorial", "primorial", "lcm")


@dataclass(frozen=True)
class Recipe:
    kind: str  # "consecutive" or "divisors"
    param: Optional[int]  # m, B, n, k; None for consecutive:auto
    source: str = "explicit"  # how B is built, divisors only

    def __str__(self):
        if self.kind == "consecutive":
            return f"consecutive:{'auto' if self.param is None else self.param}"
        if self.source == "explicit":
            return f"divisors:{self.param}"
        return f"divisors:{self.source}:{self.param}"

    @property
    def is_auto(self) -> bool:
        return self.kind == "consecutive" and self.param is None


def _positive(text: str, what: str) -> int:
    if not text.isdigit() or int(text) < 1:
        raise ValueError(f"{what} must be a positive decimal integer, got {text!r}")
    return int(text)


def parse_recipe(text: str) -> Recipe:
    parts = text.strip().split(":")
    if parts[0] == "consecutive" and len(parts) == 2:
        if parts[1] == "auto":
            return Recipe("consecutive", None)
        return Recipe("consecutive", _positive(parts[1], "m"))
    if parts[0] == "divisors" and len(parts) == 2:
        return Recipe("divisors", _positive(parts[1], "B"))
    if parts[0] == "divisors" and len(parts) == 3 and parts[1] in _B_SOURCES[1:]:
        return Recipe("divisors", _positive(parts[2], parts[1] + " parameter"), parts[1])
    raise ValueError(
        f"bad database recipe {text!r}; expected consecutive:m, consecutive:auto, "
        "divisors:B, divisors:factorial:n, divisors:primorial:k or divisors:lcm:m"
    )


@dataclass(frozen=True)
class TestDatabase:
    """Ascending multipliers plus the recipe that produced them.

    ``values`` is a ``range`` for consecutive databases, so huge m costs
    nothing until iterated.
    """

    __test__ = False  # keep pytest from collecting this class

    recipe: Recipe
    values: Sequence[int]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    @property
    def size(self) -> int:
        """Number of entries; unlike ``len`` this works past sys.maxsize."""
        if isinstance(self.values, range):
            return max(0, (self.values.stop - self.values.start) // self.values.step)
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _check_bound(B: int, bound: int, label: str) -> int:
    if B > bound:
        raise ValueError(f"{label} = {B} exceeds the configured B bound {bound}")
    return B


def factorial(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    if n < 1:
        raise ValueError("factorial parameter must be >= 1")
    return _check_bound(math.factorial(n), bound, f"{n}!")


def primorial(k: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Product of the first k primes."""
    if k < 1:
        raise ValueError("primorial parameter must be >= 1")
    return _check_bound(math.prod(first_primes(k)), bound, f"primorial({k})")


def lcm_upto(m: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    if m < 1:
        raise ValueError("lcm parameter must be >= 1")
    return _check_bound(math.lcm(*range(1, m + 1)), bound, f"lcm(1..{m})")


def build_consecutive(m: int) -> TestDatabase:
    if m < 1:
        raise ValueError("consecutive database needs m >= 1")
    return TestDatabase(Recipe("consecutive", m), range(1, m + 1))


def build_divisors(B: int, bound: int = DEFAULT_FACTOR_BOUND, recipe: Optional[Recipe] = None) -> TestDatabase:
    if B < 1:
        raise ValueError("divisor database needs B >= 1")
    if B > 1:
        factorize_small(B, bound)  # enforces the bound
    return TestDatabase(recipe or Recipe("divisors", B), tuple(divisors(B)))


def recipe_B(recipe: Recipe, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    if recipe.kind != "divisors":
        raise ValueError(f"{recipe} is not a divisor recipe")
    builder = {
        "explicit": lambda v: _check_bound(v, bound, "B"),
        "factorial": lambda v: factorial(v, bound),
        "primorial": lambda v: primorial(v, bound),
        "lcm": lambda v: lcm_upto(v, bound),
    }[recipe.source]
    return builder(recipe.param)


def _icbrt(n: int) -> int:
    """floor(n ** (1/3)) for n >= 0, exact."""
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def _as_ratio(R: Rational) -> Fraction:
    R = Fraction(R)
    if R <= 1:
        raise ValueError(f"ratio R must exceed 1, got {R}")
    return R


def d0_capacity_ok(N: int, m: int, R: Rational) -> bool:
    """Heuristic: consecutive:m should factor N when N <= m**3 / R."""
    R = _as_ratio(R)
    return N * R.numerator <= m**3 * R.denominator


def min_consecutive_size(N: int, R: Rational) -> int:
    """Smallest m >= 1 with d0_capacity_ok(N, m, R)."""
    R = _as_ratio(R)
    target = N * R.numerator
    den = R.denominator
    m = max(1, _icbrt(-(-target // den)))
    while m**3 * den < target:
        m += 1
    while m > 1 and (m - 1) ** 3 * den >= target:
        m -= 1
    return m


def d1_capacity_ok(N: int, B: int, R: Rational, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Heuristic: divisors of B should factor N when Y1(B) >= (N R)**(1/4) B**(1/8).

    Y1 is the product formula over B's prime powers; both sides are raised
    to the eighth power so the comparison is exact.
    """
    R = _as_ratio(R)
    y1 = 1 if B == 1 else y1_formula(factorize_small(B, bound))
    return y1**8 * R.denominator**2 >= N * N * R.numerator**2 * B


def build(recipe: Union[Recipe, str], N: Optional[int] = None, R: Optional[Rational] = None,
          bound: int = DEFAULT_FACTOR_BOUND) -> TestDatabase:
    """Materialize a recipe. ``consecutive:auto`` needs N and the true ratio R."""
    if isinstance(recipe, str):
        recipe = parse_recipe(recipe)
    if recipe.kind == "consecutive":
        if recipe.is_auto:
            if N is None or R is None:
                raise ValueError("consecutive:auto needs N and R")
            m = min_consecutive_size(N, R)
            return TestDatabase(recipe, range(1, m + 1))
        return build_consecutive(recipe.param)
    return build_divisors(recipe_B(recipe, bound), bound, recipe)
