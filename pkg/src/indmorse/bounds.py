"""Closed-form evaluators: the Lucas product bound in the number of disjoint
cycles, the planar lattice lower bound, and the Ramanujan subgraph threshold."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cycles import voss_table
from .errors import PreconditionError
from .lucas import lucas

GOLDEN = (1 + math.sqrt(5)) / 2


def lucas_product_bound(k: int) -> int:
    """Product of lucas(g(i)) for i = 1..k, g from the effective-girth table; 1 for k <= 0."""
    if k <= 0:
        return 1
    table = voss_table(k)
    out = 1
    for i in range(1, k + 1):
        out *= lucas(table[i])
    return out


@dataclass(frozen=True)
class CorollaryBound:
    k: int
    exact: int
    indicative: float
    note: str = "float column drops the o(1) term in the exponent; indicative only"


def corollary_bound(k: int) -> CorollaryBound:
    """Exact Lucas product and the comparator golden**(2 k log2 k)."""
    if k < 2:
        raise PreconditionError("the asymptotic comparison is stated for k >= 2")
    return CorollaryBound(k, lucas_product_bound(k), GOLDEN ** (2 * k * math.log2(k)))


@dataclass(frozen=True)
class PlanarBound:
    m: int
    exponent: Fraction | float
    value: float

    @property
    def vacuous(self) -> bool:
        return self.exponent <= 0


def planar_lower_bound(m: int) -> PlanarBound:
    """2 ** ((m - 40 sqrt m) / 36); the exponent is exact when m is a square."""
    if m < 1:
        raise PreconditionError("m must be at least 1")
    r = math.isqrt(m)
    if r * r == m:
        exponent = Fraction(m - 40 * r, 36)
    else:
        exponent = (m - 40 * math.sqrt(m)) / 36
    return PlanarBound(m, exponent, 2.0 ** float(exponent))


def ramanujan_threshold(n: int, chi: int) -> float:
    """(log2 n / (3 log2 chi)) * n ** (0.003 / log2 chi)."""
    if n < 2 or chi < 2:
        raise PreconditionError("need n >= 2 and chi >= 2")
    lc = math.log2(chi)
    return math.log2(n) / (3 * lc) * n ** (0.003 / lc)


def comparison_table(k_max: int) -> list[tuple[int, int, int]]:
    """Rows ``(k, Lucas product bound, 4**k)`` for k = 0..k_max."""
    if not 0 <= k_max <= 20:
        raise PreconditionError("k_max must lie in 0..20")
    return [(k, lucas_product_bound(k), 4 ** k) for k in range(k_max + 1)]


def format_table(rows) -> str:
    header = ("k", "product bound", "4^k")
    cells = [header] + [tuple(str(x) for x in r) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(3)]
    return "\n".join("  ".join(c[i].rjust(widths[i]) for i in range(3)) for c in cells)
