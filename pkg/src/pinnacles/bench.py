"""Operation-count and wall-time measurements for :func:`fast_count`."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .blocks import fast_count
from .comb_kernel import Arithmetic

# largest prime below 2^63
DEFAULT_PRIME = 2**63 - 25


def spread_set(n: int, k: int) -> tuple[int, ...]:
    """k members spaced evenly through [n]; every gap is a separate block."""
    if n < 2 * k + 1:
        raise ValueError(f"n={n} too small for k={k}")
    return tuple((t * n) // (k + 1) + 1 for t in range(1, k + 1))


def model(k: int, n: int) -> float:
    return k * k * math.log2(n) + k ** 4


@dataclass(frozen=True)
class BenchRow:
    k: int
    n: int
    ops: int
    seconds: float
    count: int

    @property
    def ratio(self) -> float:
        return self.ops / model(self.k, self.n)


def run_one(k: int, n: int, prime: int = DEFAULT_PRIME) -> BenchRow:
    arith = Arithmetic(prime)
    pins = spread_set(n, k)
    start = time.perf_counter()
    value = fast_count(n, pins, arith)
    return BenchRow(k, n, arith.ops, time.perf_counter() - start, value)


def run_grid(ks, ns, prime: int = DEFAULT_PRIME) -> list[BenchRow]:
    return [run_one(k, n, prime) for k in ks for n in ns]


def fit_constant(rows: list[BenchRow]) -> tuple[float, float]:
    """Fit ``ops ~ c * (k^2 log2 n + k^4)`` minimising the worst ratio error.

    Returns ``(c, spread)`` where every row satisfies
    ``1/spread <= ops / (c * model) <= spread``.
    """
    ratios = [r.ratio for r in rows]
    lo, hi = min(ratios), max(ratios)
    return math.sqrt(lo * hi), math.sqrt(hi / lo)
