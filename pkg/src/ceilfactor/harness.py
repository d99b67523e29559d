"""Cost measurement: scan a database for the first multiplier that factors N.

Cost is the number of multipliers actually tested.  Values d >= N/2 are
skipped without counting, since the multiplier test is only valid below
that.  A scan that runs out of candidates is recorded as a failure whose
cost is everything that was tested.
"""

import csv
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, TextIO, Tuple, Union

from .databases import Recipe, TestDatabase, build, parse_recipe
from .multiplier import FactorResult, try_multiplier
from .primes import primes_up_to

__all__ = [
    "PRNG_NAME",
    "PRIME_TABLE_LIMIT",
    "CSV_COLUMNS",
    "SemiprimeSpec",
    "BenchRecord",
    "RecipeSummary",
    "factor_with_db",
    "generate_semiprimes",
    "compare_strategies",
    "summarize",
    "write_csv",
    "read_csv",
]

PRNG_NAME = "python-random-mt19937"
PRIME_TABLE_LIMIT = 1 << 20
CSV_COLUMNS = ["N", "p", "q", "R_num", "R_den", "recipe", "cost", "success", "winning_d", "elapsed_ms"]


@dataclass(frozen=True)
class SemiprimeSpec:
    p: int
    q: int

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("semiprime factors must be distinct")

    @property
    def N(self) -> int:
        return self.p * self.q

    @property
    def R(self) -> Fraction:
        return Fraction(max(self.p, self.q), min(self.p, self.q))


@dataclass(frozen=True)
class BenchRecord:
    N: int
    recipe: str
    cost: int
    success: bool
    winning_d: Optional[int] = None
    factors: Optional[Tuple[int, int]] = None
    elapsed_ms: float = 0.0
    db_size: int = 0
    spec: Optional[SemiprimeSpec] = None
    t: Optional[int] = None

    def csv_row(self) -> List[str]:
        p = q = r_num = r_den = ""
        if self.spec is not None:
            p, q = str(self.spec.p), str(self.spec.q)
            r_num, r_den = str(self.spec.R.numerator), str(self.spec.R.denominator)
        return [
            str(self.N), p, q, r_num, r_den, self.recipe, str(self.cost),
            "true" if self.success else "false",
            "" if self.winning_d is None else str(self.winning_d),
            f"{self.elapsed_ms:.3f}",
        ]


def factor_with_db(N: int, db: Iterable[int], max_scan: Optional[int] = None) -> BenchRecord:
    """Test multipliers from ``db`` in order until one yields a factor pair."""
    if N < 4:
        raise ValueError(f"N must be at least 4, got {N}")
    recipe = str(db.recipe) if isinstance(db, TestDatabase) else "custom"
    if isinstance(db, TestDatabase):
        size = db.size
    else:
        size = len(db) if hasattr(db, "__len__") else 0
    cost = 0
    start = time.perf_counter()
    for d in db:
        if max_scan is not None and cost >= max_scan:
            break
        if 2 * d >= N:
            break  # ascending, so every later d is out of range too
        cost += 1
        res = try_multiplier(N, d)
        if isinstance(res, FactorResult):
            elapsed = (time.perf_counter() - start) * 1000
            return BenchRecord(N, recipe, cost, True, d, res.factors, elapsed, size, t=res.t)
    elapsed = (time.perf_counter() - start) * 1000
    return BenchRecord(N, recipe, cost, False, elapsed_ms=elapsed, db_size=size)


def generate_semiprimes(bit_size: int, n_samples: int, seed: int,
                        R_max: Optional[Union[int, Fraction]] = None,
                        max_rejections: int = 10_000) -> List[SemiprimeSpec]:
    """Draw ``n_samples`` pairs of distinct odd primes of exactly ``bit_size`` bits.

    Primes come from a sieve up to 2**20; pairs whose ratio exceeds ``R_max``
    are redrawn, and the call gives up after ``max_rejections`` redraws.
    """
    if bit_size < 2 or (1 << bit_size) - 1 > PRIME_TABLE_LIMIT:
        raise ValueError(f"bit_size must lie in 2..20, got {bit_size}")
    if n_samples < 0:
        raise ValueError("n_samples must be nonnegative")
    lo, hi = 1 << (bit_size - 1), (1 << bit_size) - 1
    table = [p for p in primes_up_to(hi) if p >= lo and p % 2 == 1]
    if len(table) < 2:
        raise ValueError(f"fewer than two odd primes with {bit_size} bits")
    R_max = None if R_max is None else Fraction(R_max)
    if R_max is not None and R_max <= 1:
        raise ValueError(f"no pair of distinct primes has ratio <= {R_max}")
    rng = random.Random(seed)
    out: List[SemiprimeSpec] = []
    rejected = 0
    while len(out) < n_samples:
        p, q = sorted(rng.sample(table, 2))
        if R_max is not None and q > R_max * p:
            rejected += 1
            if rejected >= max_rejections:
                raise ValueError(
                    f"gave up after {rejected} rejections: no pairs of {bit_size}-bit primes "
                    f"found with ratio <= {R_max}"
                )
            continue
        out.append(SemiprimeSpec(p, q))
    return out


@lru_cache(maxsize=64)
def _fixed_db(recipe: Recipe) -> TestDatabase:
    return build(recipe)


def _run_cell(args) -> BenchRecord:
    spec, recipe, max_scan = args
    if isinstance(recipe, TestDatabase):
        db = recipe
    elif recipe.is_auto:
        db = build(recipe, spec.N, spec.R)
    else:
        db = _fixed_db(recipe)
    return replace(factor_with_db(spec.N, db, max_scan), spec=spec)


def compare_strategies(specs: Sequence[SemiprimeSpec], recipes: Sequence[Union[Recipe, str, TestDatabase]],
                       max_scan: Optional[int] = None, workers: int = 1) -> List[BenchRecord]:
    """One record per (spec, recipe), spec-major, in input order.

    ``recipes`` may mix recipe strings, :class:`Recipe` objects and
    prebuilt :class:`TestDatabase` instances.

    With ``workers > 1`` cells run in a process pool; the order of the
    returned records does not change.
    """
    recipes = [parse_recipe(r) if isinstance(r, str) else r for r in recipes]
    cells = [(spec, recipe, max_scan) for spec in specs for recipe in recipes]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell, cells, chunksize=max(1, len(cells) // (4 * workers))))
    return [_run_cell(c) for c in cells]


@dataclass(frozen=True)
class RecipeSummary:
    recipe: str
    count: int
    success_rate: float
    mean_cost: float
    q1: float
    median: float
    q3: float
    median_fraction: float  # median of cost / database size

    def line(self) -> str:
        return (f"{self.recipe:<28} n={self.count:<5d} success={self.success_rate:.3f} "
                f"mean_cost={self.mean_cost:.2f} q1={self.q1:g} median={self.median:g} "
                f"q3={self.q3:g} median_cost/size={self.median_fraction:.3f}")


def _quartiles(xs: Sequence[float]):
    if len(xs) == 1:
        return xs[0], xs[0], xs[0]
    q1, q2, q3 = statistics.quantiles(xs, n=4, method="inclusive")
    return q1, q2, q3


def summarize(records: Iterable[BenchRecord]) -> List[RecipeSummary]:
    """Per-recipe statistics over all records, failures included at their scanned cost."""
    groups: Dict[str, List[BenchRecord]] = {}
    for r in records:
        groups.setdefault(r.recipe, []).append(r)
    out = []
    for name, recs in groups.items():
        costs = [r.cost for r in recs]
        fracs = [r.cost / r.db_size if r.db_size else 0.0 for r in recs]
        q1, med, q3 = _quartiles(costs)
        out.append(RecipeSummary(
            name, len(recs), sum(r.success for r in recs) / len(recs),
            statistics.fmean(costs), q1, med, q3, statistics.median(fracs),
        ))
    return out


def write_csv(records: Iterable[BenchRecord], out: TextIO, meta: Optional[Dict[str, object]] = None,
              timing: bool = True) -> None:
    """Write records as CSV, preceded by ``# key=value`` provenance lines."""
    meta = dict(meta or {})
    meta.setdefault("prng", PRNG_NAME)
    out.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        row = rec.csv_row()
        if not timing:
            row[-1] = ""
        writer.writerow(row)


def read_csv(stream: TextIO) -> List[Dict[str, str]]:
    lines = (line for line in stream if not line.startswith("#"))
    return list(csv.DictReader(lines))
