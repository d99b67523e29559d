"""Semiprime factoring with the ceiling-square multiplier test, and tools to
build, measure and compare multiplier databases."""

from .core import ceil_2sqrt, gcd, is_perfect_square, isqrt, parse_natural
from .databases import (
    Recipe,
    TestDatabase,
    build,
    build_consecutive,
    build_divisors,
    d0_capacity_ok,
    d1_capacity_ok,
    factorial,
    lcm_upto,
    min_consecutive_size,
    parse_recipe,
    primorial,
)
from .harness import (
    BenchRecord,
    SemiprimeSpec,
    compare_strategies,
    factor_with_db,
    generate_semiprimes,
    summarize,
)
from .multiplier import (
    Degenerate,
    FactorResult,
    f,
    f2,
    recover_close_factors,
    split_oracle,
    try_multiplier,
)
from .yields import factorize_small, fractions_of, tau, y1_formula, yield_of, yield_of_set

__version__ = "0.1.0"
