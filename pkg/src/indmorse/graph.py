"""Finite simple graphs on dense integer vertices, stored as neighbour bitmasks.

A :class:`Graph` lives on a fixed universe ``0..n-1``. Deleting vertices keeps
the universe and clears bits in ``mask``, so every induced subgraph reached by
a reduction keeps the vertex identifiers of the graph it came from. Faces of
independence complexes, feedback sets and matchings are all plain ``int``
bitmasks over the same universe.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InputError, PreconditionError, StructuralError


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbour bitmask of ``v`` restricted to ``mask``; it is
    zero for vertices outside ``mask``. ``labels`` optionally maps internal
    indices to the external identifiers seen at ingestion.
    """

    adj: tuple[int, ...]
    mask: int
    labels: tuple | None = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise InputError("labels must have one entry per vertex")
        return cls(tuple(adj), (1 << n) - 1, labels)

    @classmethod
    def from_adjacency(cls, adjacency: dict) -> Graph:
        """Build from a ``{label: iterable of labels}`` map; labels are sorted
        when possible and assigned dense indices in that order."""
        keys = set(adjacency)
        for nbrs in adjacency.values():
            keys.update(nbrs)
        try:
            order = sorted(keys)
        except TypeError:
            order = sorted(keys, key=repr)
        index = {lab: i for i, lab in enumerate(order)}
        edges = [(index[a], index[b]) for a, nbrs in adjacency.items() for b in nbrs]
        g = cls.from_edges(len(order), edges, labels=order)
        for a, nbrs in adjacency.items():
            for b in nbrs:
                if a not in adjacency.get(b, ()) and b in adjacency:
                    raise InputError(f"adjacency is not symmetric at {a!r}-{b!r}")
        return g

    # basic queries -------------------------------------------------------

    @property
    def universe(self) -> int:
        return len(self.adj)

    @property
    def order(self) -> int:
        return popcount(self.mask)

    def vertices(self) -> list[int]:
        return list(bits(self.mask))

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < len(self.adj) and bool(self.mask >> v & 1)

    def nbr(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in bits(self.mask) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(popcount(self.adj[v]) for v in bits(self.mask)) // 2

    def is_independent(self, face: int) -> bool:
        if face & ~self.mask:
            return False
        return all(not (self.adj[v] & face) for v in bits(face))

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def check(self) -> None:
        """Raise :class:`InputError` if a structural invariant is broken."""
        for v in range(len(self.adj)):
            a = self.adj[v]
            if not self.mask >> v & 1:
                if a:
                    raise InputError(f"absent vertex {v} has neighbours")
                continue
            if a >> v & 1:
                raise InputError(f"loop at {v}")
            if a & ~self.mask:
                raise InputError(f"vertex {v} has an undeclared neighbour")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _require(g: Graph, v: int) -> None:
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v!r}")


def neighbourhood(g: Graph, v: int) -> frozenset[int]:
    _require(g, v)
    return frozenset(bits(g.adj[v]))


def induced(g: Graph, keep: int) -> Graph:
    """Induced subgraph on ``keep & g.mask``."""
    keep &= g.mask
    if keep == g.mask:
        return g
    adj = tuple(a & keep if keep >> v & 1 else 0 for v, a in enumerate(g.adj))
    return Graph(adj, keep, g.labels)


def delete_vertices(g: Graph, s: Iterable[int] | int) -> Graph:
    return induced(g, g.mask & ~to_mask(s))


def closed_nbr(g: Graph, v: int) -> int:
    return g.adj[v] | (1 << v)


def compact(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Relabel present vertices to ``0..order-1``; returns the graph and old->new map."""
    old = g.vertices()
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges()]
    labels = [g.label(v) for v in old] if g.labels is not None else None
    return Graph.from_edges(len(old), edges, labels), index


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Disjoint union with fresh identifiers: ``g``'s vertices first, then ``h``'s.

    Returns the union and the two relabelling maps (old id -> new id).
    """
    gmap = {v: i for i, v in enumerate(g.vertices())}
    hmap = {v: len(gmap) + i for i, v in enumerate(h.vertices())}
    edges = [(gmap[u], gmap[v]) for u, v in g.edges()]
    edges += [(hmap[u], hmap[v]) for u, v in h.edges()]
    return Graph.from_edges(len(gmap) + len(hmap), edges), gmap, hmap


class Fold(NamedTuple):
    """``u`` may be deleted because ``N(v) ⊆ N(u)``."""

    u: int
    v: int


def find_fold(g: Graph) -> Fold | None:
    """First fold in lexicographic order of ``(v, u)``, or ``None``."""
    verts = g.vertices()
    for v in verts:
        nv = g.adj[v]
        for u in verts:
            if u != v and nv & ~g.adj[u] == 0:
                return Fold(u, v)
    return None


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    out = []
    rest = g.mask
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.num_edges() == g.order - len(components(g))


def min_degree(g: Graph) -> int | None:
    if not g.mask:
        return None
    return min(g.degree(v) for v in bits(g.mask))


def isolated_vertex(g: Graph) -> int | None:
    for v in bits(g.mask):
        if not g.adj[v]:
            return v
    return None


def isolated_edge(g: Graph) -> tuple[int, int] | None:
    for u in bits(g.mask):
        a = g.adj[u]
        if a and a & (a - 1) == 0:
            v = a.bit_length() - 1
            if g.adj[v] == 1 << u and u < v:
                return u, v
    return None


# degree-two contraction ------------------------------------------------------


@dataclass(frozen=True)
class Contraction:
    """Result of suppressing all degree-two vertices.

    ``paths`` maps each simple edge ``frozenset({x, y})`` of ``graph`` to the
    vertex sequences (from x to y) of the original graph that were contracted
    into it; more than one sequence means parallel edges were merged, which
    sets ``flagged``.
    """

    graph: Graph
    flagged: bool
    paths: dict


def contract_degree_two(g: Graph) -> Contraction:
    """Iteratively replace each degree-two vertex and its two edges by one edge.

    Works on the multigraph so that parallel edges created along the way keep
    their multiplicity until the end, then merges them into a simple graph.
    A contraction that would create a loop raises :class:`StructuralError`.
    """
    md = min_degree(g)
    if md is not None and md < 2:
        raise PreconditionError("degree-two contraction needs minimum degree at least 2")
    chains: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {v: [] for v in bits(g.mask)}
    for cid, (u, v) in enumerate(g.edges()):
        chains[cid] = [u, v]
        ends[u].append(cid)
        ends[v].append(cid)
    alive = set(ends)

    def loop_error(w):
        comp = next(c for c in components(g) if c >> w & 1)
        raise StructuralError(
            f"contraction at vertex {w} produces a loop; component {sorted(bits(comp))} "
            "contains a cycle with a single branch vertex or is a bare cycle"
        )

    changed = True
    while changed:
        changed = False
        for w in sorted(alive):
            if len(ends[w]) != 2:
                continue
            c1, c2 = ends[w]
            if c1 == c2:
                loop_error(w)
            a, b = chains.pop(c1), chains.pop(c2)
            if a[0] == w:
                a.reverse()
            if b[-1] == w:
                b.reverse()
            merged = a + b[1:]
            x, y = merged[0], merged[-1]
            if x == y:
                loop_error(w)
            ends[x].remove(c1)
            ends[y].remove(c2)
            chains[c1] = merged
            ends[x].append(c1)
            ends[y].append(c1)
            del ends[w]
            alive.discard(w)
            changed = True
            break

    keep = to_mask(alive)
    paths: dict[frozenset, list[tuple[int, ...]]] = {}
    for chain in chains.values():
        x, y = chain[0], chain[-1]
        if x > y:
            chain = chain[::-1]
        paths.setdefault(frozenset((x, y)), []).append(tuple(chain))
    adj = [0] * g.universe
    for e in paths:
        x, y = tuple(e)
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    flagged = any(len(p) > 1 for p in paths.values())
    for p in paths.values():
        p.sort(key=lambda c: (len(c), c))
    return Contraction(Graph(tuple(adj), keep, g.labels), flagged, paths)


def is_complete_bipartite_3t(g: Graph) -> int | None:
    """Return ``t`` if ``g`` is isomorphic to ``K_{3,t}`` with ``t >= 3``."""
    if g.order < 6 or not is_connected(g):
        return None
    start = g.mask & -g.mask
    side = {start.bit_length() - 1: 0}
    stack = [start.bit_length() - 1]
    while stack:
        v = stack.pop()
        for u in bits(g.adj[v]):
            if u not in side:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return None
    sizes = Counter(side.values())
    a, b = sizes[0], sizes[1]
    if g.num_edges() != a * b or min(a, b) != 3:
        return None
    return max(a, b)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Insert a new vertex (id ``universe``) in the middle of edge ``uv``."""
    if not g.adj[u] >> v & 1:
        raise InputError(f"({u}, {v}) is not an edge")
    w = g.universe
    edges = [e for e in g.edges() if set(e) != {u, v}] + [(u, w), (w, v)]
    full = Graph.from_edges(w + 1, edges)
    return induced(full, g.mask | (1 << w))

