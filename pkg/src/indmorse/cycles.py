"""Girth, effective girth, disjoint cycle packing, feedback vertex sets, and
the recursive bound table for effective girth."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import PreconditionError, ResourceError
from .graph import Graph, bits, induced, is_forest, popcount, to_mask

INF = math.inf
DEFAULT_CYCLE_CAP = 10**6
EXHAUSTIVE_VERTEX_CAP = 16
FEEDBACK_VERTEX_CAP = 20


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests (BFS from every vertex)."""
    best = INF
    for root in bits(g.mask):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for v in queue:
            if 2 * dist[v] + 1 >= best:
                break
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def two_core(g: Graph, mask: int | None = None) -> int:
    """Vertices that survive repeated deletion of degree <= 1 vertices."""
    core = g.mask if mask is None else mask & g.mask
    changed = True
    while changed:
        changed = False
        for v in bits(core):
            if popcount(g.adj[v] & core) <= 1:
                core &= ~(1 << v)
                changed = True
    return core


def _cycles_from(g: Graph, s: int, allowed: int, chordless: bool):
    """Cycles through ``s`` whose other vertices lie in ``allowed``.

    Each cycle is yielded once as a tuple starting at ``s`` with the second
    vertex smaller than the last.
    """
    sbit = 1 << s
    stack = [(s, (s,), sbit)]
    while stack:
        v, path, pmask = stack.pop()
        for w in bits(g.adj[v]):
            wbit = 1 << w
            if w == s:
                if not chordless and len(path) >= 3 and path[1] < path[-1]:
                    yield path
                continue
            if not allowed & wbit or pmask & wbit:
                continue
            if chordless:
                if g.adj[w] & pmask & ~(1 << v) & ~sbit:
                    continue
                if len(path) >= 2 and g.adj[w] & sbit:
                    if path[1] < w:
                        yield path + (w,)
                    continue
            stack.append((w, path + (w,), pmask | wbit))


def _collect(gen, cap):
    out = []
    for c in gen:
        out.append(c)
        if len(out) > cap:
            raise ResourceError(f"cycle enumeration exceeded the cap {cap}", reached=len(out))
    return out


def simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple starting at its smallest vertex."""
    core = two_core(g)

    def gen():
        for s in bits(core):
            yield from _cycles_from(g, s, core >> (s + 1) << (s + 1), False)

    return _collect(gen(), cap)


def chordless_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP, through: int | None = None):
    """Induced cycles, optionally only those through vertex ``through``."""
    core = two_core(g)
    if through is not None:
        if not core >> through & 1:
            return []
        return _collect(_cycles_from(g, through, core, True), cap)

    def gen():
        for s in bits(core):
            yield from _cycles_from(g, s, core >> (s + 1) << (s + 1), True)

    return _collect(gen(), cap)


def attachments(g: Graph, cycle) -> int:
    """Bitmask of cycle vertices with a neighbour off the cycle."""
    cmask = to_mask(cycle)
    return sum(1 << v for v in cycle if g.adj[v] & ~cmask)


def is_induced_cycle(g: Graph, cycle) -> bool:
    n = len(cycle)
    if n < 3 or len(set(cycle)) != n or not all(g.has_vertex(v) for v in cycle):
        return False
    cmask = to_mask(cycle)
    for i, v in enumerate(cycle):
        want = (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % n])
        if g.adj[v] & cmask != want:
            return False
    return True


def effective_girth(g: Graph, vertex_cap: int = EXHAUSTIVE_VERTEX_CAP,
                    cycle_cap: int = DEFAULT_CYCLE_CAP) -> float:
    """Fewest degree >= 3 vertices on a common cycle; ``inf`` if acyclic.

    Minimising over induced cycles suffices: splitting a cycle along a chord
    never increases the minimum count.
    """
    if g.order > vertex_cap:
        raise ResourceError(f"effective girth is exhaustive up to {vertex_cap} vertices", reached=g.order)
    branch = sum(1 << v for v in bits(g.mask) if g.degree(v) >= 3)
    best = INF
    for c in chordless_cycles(g, cycle_cap):
        best = min(best, popcount(to_mask(c) & branch))
        if best == 0:
            break
    return best


# feedback sets -----------------------------------------------------------------


def min_feedback_set(g: Graph, cap: int = FEEDBACK_VERTEX_CAP) -> frozenset[int]:
    """A minimum set whose deletion leaves a forest, lexicographically first
    among those of minimum size."""
    if g.order > cap:
        raise ResourceError(f"exact feedback search limited to {cap} vertices", reached=g.order)
    core = sorted(bits(two_core(g)))
    for size in range(len(core) + 1):
        for subset in combinations(core, size):
            if is_forest(induced(g, g.mask & ~to_mask(subset))):
                return frozenset(subset)
    raise AssertionError("deleting the whole 2-core always leaves a forest")


def greedy_feedback_set(g: Graph) -> frozenset[int]:
    """Repeatedly delete a maximum-degree vertex of the 2-core."""
    chosen = 0
    while True:
        core = two_core(g, g.mask & ~chosen)
        if not core:
            return frozenset(bits(chosen))
        v = max(bits(core), key=lambda x: (popcount(g.adj[x] & core), -x))
        chosen |= 1 << v


# packing ---------------------------------------------------------------------


@dataclass(frozen=True)
class CyclePacking:
    lower: int
    upper: int
    witness: tuple[tuple[int, ...], ...]
    exact: bool


def _exact_packing(g: Graph) -> tuple[tuple[int, ...], ...]:
    memo: dict[int, tuple] = {}

    def best(mask: int) -> tuple:
        core = two_core(g, mask)
        if not core:
            return ()
        if core in memo:
            return memo[core]
        sub = induced(g, core)
        v = (core & -core).bit_length() - 1
        result = best(core & ~(1 << v))
        for c in chordless_cycles(sub, through=v):
            rest = best(core & ~to_mask(c))
            if len(rest) + 1 > len(result):
                result = (c,) + rest
        memo[core] = result
        return result

    return best(g.mask)


def _greedy_packing(g: Graph) -> tuple[tuple[int, ...], ...]:
    out = []
    mask = g.mask
    while True:
        sub = induced(g, two_core(g, mask))
        if not sub.mask:
            return tuple(out)
        c = shortest_cycle(sub)
        out.append(c)
        mask &= ~to_mask(c)


def shortest_cycle(g: Graph) -> tuple[int, ...] | None:
    """A shortest cycle (deterministic) or ``None``."""
    best = None
    for root in bits(g.mask):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for v in queue:
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v] and (best is None or dist[v] + dist[w] + 1 < len(best)):
                    pv, pw = [v], [w]
                    while pv[-1] != root:
                        pv.append(parent[pv[-1]])
                    while pw[-1] != root:
                        pw.append(parent[pw[-1]])
                    cyc = tuple(reversed(pv)) + tuple(pw[:-1])
                    if len(set(cyc)) == len(cyc):
                        best = cyc
    return best


def cycle_packing(g: Graph, exact_cap: int = EXHAUSTIVE_VERTEX_CAP) -> CyclePacking:
    """Maximum number of vertex-disjoint cycles.

    Exact (branch on the lowest vertex of the 2-core) up to ``exact_cap``
    vertices; beyond that a greedy lower bound and the better of
    ``|feedback set|`` and ``floor(n / girth)`` as upper bound.
    """
    if g.order <= exact_cap:
        w = _exact_packing(g)
        return CyclePacking(len(w), len(w), w, True)
    w = _greedy_packing(g)
    fb = min_feedback_set(g) if g.order <= FEEDBACK_VERTEX_CAP else greedy_feedback_set(g)
    gi = girth(g)
    upper = len(fb) if gi == INF else min(len(fb), int(g.order // gi))
    return CyclePacking(len(w), upper, w, False)


# effective-girth bound table ---------------------------------------------------------


@dataclass(frozen=True)
class VossTable:
    values: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    @staticmethod
    def asymptotic(k: int) -> float:
        """Leading term 2 log2 k of the growth rate; indicative only."""
        return 2 * math.log2(k)


BASE_VALUES = {1: 4, 2: 6, 3: 8}


def voss_table(k_max: int) -> VossTable:
    """Upper bounds on the maximal effective girth g(k) for k = 1..k_max.

    Beyond the three base values, entry k is the largest integer x with
    x <= 2 + 2 log2(1 + sum_{i<k} g(i) + x), decided exactly as
    2^(x-2) <= (1 + sum + x)^2.
    """
    if k_max < 1:
        raise PreconditionError("k_max must be at least 1")
    values: dict[int, int] = {}
    total = 0
    for k in range(1, k_max + 1):
        if k in BASE_VALUES:
            x = BASE_VALUES[k]
        else:
            x = 2
            while 1 << (x - 1) <= (total + x + 2) ** 2:  # does x + 1 still fit?
                x += 1
        values[k] = x
        total += x
    return VossTable(values)


# low-attachment cycles ---------------------------------------------------------


@dataclass(frozen=True)
class LowAttachmentCycle:
    cycle: tuple[int, ...]
    attachments: frozenset[int]
    heuristic: bool = False


def find_low_attachment_cycle(g: Graph, limit: int | None = None,
                              cycle_cap: int = DEFAULT_CYCLE_CAP) -> LowAttachmentCycle | None:
    """Induced cycle with the fewest attachment vertices (then shortest, then
    lexicographically smallest sorted vertex set), if that count is <= limit.

    If enumeration hits ``cycle_cap`` the best cycle seen so far is returned
    with ``heuristic`` set.
    """
    md = min(g.degree(v) for v in bits(g.mask)) if g.mask else None
    if md is not None and md < 2:
        raise PreconditionError("low-attachment cycle search needs minimum degree at least 2")
    best_key = None
    best = None
    heuristic = False
    core = two_core(g)
    seen = 0
    for s in bits(core):
        for c in _cycles_from(g, s, core >> (s + 1) << (s + 1), True):
            seen += 1
            if seen > cycle_cap:
                heuristic = True
                break
            att = attachments(g, c)
            key = (popcount(att), len(c), tuple(sorted(c)))
            if best_key is None or key < best_key:
                best_key, best = key, (c, att)
        if heuristic:
            break
    if best is None or (limit is not None and best_key[0] > limit):
        return None
    return LowAttachmentCycle(best[0], frozenset(bits(best[1])), heuristic)


@dataclass(frozen=True)
class CycleAnalysis:
    girth: float
    effective_girth: float
    packing_lower: int
    packing_upper: int
    min_feedback: frozenset[int]
    witness: tuple[tuple[int, ...], ...] = ()

    def to_json(self, g: Graph | None = None) -> dict:
        lab = g.label if g is not None else (lambda v: v)

        def num(x):
            return None if x == INF else int(x)

        return {
            "girth": num(self.girth),
            "effective_girth": num(self.effective_girth),
            "packing_lower": self.packing_lower,
            "packing_upper": self.packing_upper,
            "min_feedback": sorted(lab(v) for v in self.min_feedback),
            "witness": [[lab(v) for v in c] for c in self.witness],
        }


def analyze(g: Graph) -> CycleAnalysis:
    packing = cycle_packing(g)
    fb = min_feedback_set(g) if g.order <= FEEDBACK_VERTEX_CAP else greedy_feedback_set(g)
    eg = effective_girth(g) if g.order <= EXHAUSTIVE_VERTEX_CAP else INF
    return CycleAnalysis(girth(g), eg, packing.lower, packing.upper, fb, packing.witness)
