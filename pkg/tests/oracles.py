"""Slow reference computations that share no code with the package.

Independent sets come from itertools over vertex subsets, homology from dense
integer matrices reduced with plain Gaussian elimination, and sequence
counts from literal enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def independent_sets(n: int, edges) -> list[tuple[int, ...]]:
    es = {frozenset(e) for e in edges}
    out = []
    for k in range(n + 1):
        for s in combinations(range(n), k):
            if all(frozenset(p) not in es for p in combinations(s, 2)):
                out.append(s)
    return out


def _rank(rows: list[list[int]], p: int | None) -> int:
    """Rank over GF(p) if p is given, else over Q."""
    m = [[Fraction(x) if p is None else x % p for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                if p is None:
                    f = m[i][c] / m[rank][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
                else:
                    f = m[i][c] * pow(m[rank][c], -1, p) % p
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def reduced_betti(n: int, edges, field: str = "gf2") -> dict[int, int]:
    faces = independent_sets(n, edges)
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    top = max(by_size)
    p = 2 if field == "gf2" else None
    ranks = {}
    for k in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by_size[k - 1])}
        rows = []
        for f in by_size[k]:
            r = [0] * len(lower)
            for pos in range(k):
                r[lower[f[:pos] + f[pos + 1:]]] = (-1) ** pos
            rows.append(r)
        ranks[k] = _rank(rows, p)
    out = {}
    for k in range(top + 1):
        d = len(by_size[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if d:
            out[k - 1] = d
    return out


def total_betti(n: int, edges, field: str = "gf2") -> int:
    return sum(reduced_betti(n, edges, field).values())


def fib(n: int) -> int:
    if n < 0:
        return (-1) ** (n + 1) * fib(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def luc(n: int) -> int:
    return fib(n - 1) + fib(n + 1)


def count_sequence(s) -> int:
    n = len(s)
    return sum(all(x[i] + x[(i + 1) % n] != s[i] for i in range(n)) for x in product((0, 1), repeat=n))


def triangle_row(n: int) -> list[int]:
    """Row n of the triangle: m zeros followed by n - m twos."""
    if n == 0:
        return [2]
    return [count_sequence((0,) * m + (2,) * (n - m)) for m in range(n + 1)]


def voss(k_max: int) -> list[int]:
    """Largest g with g <= 2 + 2 log2(1 + sum of earlier values + g), seeded with 4, 6, 8."""
    vals = [4, 6, 8]
    while len(vals) < k_max:
        s = sum(vals)
        g = 1
        while 2 ** (g + 1 - 2) <= (1 + s + g + 1) ** 2:
            g += 1
        vals.append(g)
    return vals[:k_max]
