"""Canonical forms for small graphs by degree refinement plus backtracking.

Intended for graphs up to roughly a dozen vertices (corpus deduplication,
isomorphism checks in tests). No automorphism pruning is done.
"""

from __future__ import annotations

from .graph import Graph, bits


def _refine(adj: dict[int, int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every other cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(bin(adj[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _code(adj: dict[int, int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        r = 0
        for u in bits(adj[v]):
            r |= 1 << pos[u]
        rows.append(r)
    return tuple(rows)


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """An isomorphism invariant that is complete: equal iff isomorphic."""
    verts = g.vertices()
    adj = {v: g.adj[v] for v in verts}
    if not verts:
        return (0, ())
    best = None

    def search(cells):
        nonlocal best
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            code = _code(adj, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        i = next(k for k, c in enumerate(cells) if len(c) > 1)
        for v in cells[i]:
            rest = [u for u in cells[i] if u != v]
            search(cells[:i] + [[v], rest] + cells[i + 1:])

    search([verts])
    return (len(verts), best)


def canonical_graph(g: Graph) -> Graph:
    n, rows = canonical_form(g)
    edges = [(i, j) for i, r in enumerate(rows) for j in bits(r) if i < j]
    return Graph.from_edges(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)
