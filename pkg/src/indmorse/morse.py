"""Acyclic matchings on independence complexes, and certificates that build them.

A :class:`MorseCertificate` records how a bound on the minimal number of
critical cells of Ind(G) was obtained. It is a tree: every internal node is
either

* a *fiber* node: for a vertex set ``S`` the order-preserving map
  ``I -> I & S`` sends Ind(G) onto Ind(G[S]); the fiber over an independent
  ``sigma ⊆ S`` is ``sigma ∪ Ind(G - S - N(sigma))`` and gets the matching of
  a child certificate, shifted by ``sigma``. Gluing acyclic fiber matchings
  along an order-preserving map gives an acyclic matching, so only leaves
  need to be trusted. Link, fold and isolated-edge steps are fiber nodes
  with ``|S| = 1``; wrappers are fiber nodes with ``S = ∅``.
* a *product* node for a disjoint union, matched fiberwise over the
  quotient of the second factor's complex by its own matching.

Leaves are the empty graph (one critical cell, the empty face) and graphs
with an isolated vertex ``v`` (complete matching ``I <-> I + v``).

Matchings are only materialised on demand, since they live on the
exponentially large face poset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .complex import IndComplex, build_complex, betti_numbers, independent_sets
from .cycles import (
    DEFAULT_CYCLE_CAP,
    attachments,
    cycle_packing,
    find_low_attachment_cycle,
    is_induced_cycle,
    min_feedback_set,
)
from .errors import (
    CapabilityError,
    InputError,
    PreconditionError,
    StructuralError,
    VerificationError,
)
from .graph import (
    Graph,
    bits,
    closed_nbr,
    components,
    contract_degree_two,
    find_fold,
    induced,
    is_complete_bipartite_3t,
    is_forest,
    isolated_edge,
    isolated_vertex,
    popcount,
    to_mask,
)
from .bounds import lucas_product_bound
from .lucas import analyze_sequence, lucas

EMPTY = "Empty"
ISO_VERTEX = "IsoVertex"
LINK = "Link"
ISO_EDGE = "IsoEdge"
FOLD = "Fold"
FOREST = "Forest"
FEEDBACK = "Feedback"
PRODUCT = "DisjointProduct"
REMOVE_CYCLE = "RemoveCycle"
MAIN = "MainRecursion"
TWO_CYCLE_FREE = "NoTwoDisjointCycles"
ASSUMED = "Assumed"

# lemmas whose args are vertices or vertex collections
_VERTEX_ARGS = {ISO_VERTEX, LINK, ISO_EDGE, FOLD, FEEDBACK, REMOVE_CYCLE}


# matchings ---------------------------------------------------------------------


@dataclass(frozen=True)
class MorseMatching:
    """Pairs ``(small, large)`` of faces of ``complex``, as vertex bitmasks."""

    complex: IndComplex
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def matched(self) -> frozenset[int]:
        return frozenset(f for p in self.pairs for f in p)

    @cached_property
    def critical(self) -> frozenset[int]:
        return frozenset(f for f in self.complex.faces() if f not in self.matched)

    @property
    def num_critical(self) -> int:
        return self.complex.num_faces - len(self.matched)


def is_valid_matching(m: MorseMatching) -> bool:
    """Every pair is a cover relation and no face is used twice.

    A face outside the complex raises :class:`InputError`.
    """
    seen: set[int] = set()
    ok = True
    for small, large in m.pairs:
        for f in (small, large):
            if f not in m.complex:
                raise InputError(f"face {sorted(bits(f))} is not in the complex")
        diff = large ^ small
        if small & ~large or popcount(diff) != 1:
            ok = False
        if small in seen or large in seen or small == large:
            ok = False
        seen.add(small)
        seen.add(large)
    return ok


def is_acyclic(m: MorseMatching) -> bool:
    """No cycle p_1, ..., p_r (r > 1) of distinct pairs with large(p_i) ⊃ small(p_{i+1}).

    Along such a cycle cardinalities cannot increase, so every step is a
    cover; it suffices to put arcs only between covers.
    """
    if not is_valid_matching(m):
        raise PreconditionError("acyclicity is only defined for valid matchings")
    by_small = {s: i for i, (s, _) in enumerate(m.pairs)}
    succ: list[list[int]] = []
    for i, (small, large) in enumerate(m.pairs):
        out = []
        for v in bits(large):
            j = by_small.get(large ^ (1 << v))
            if j is not None and j != i:
                out.append(j)
        succ.append(out)
    state = [0] * len(m.pairs)  # 0 new, 1 on stack, 2 done
    for root in range(len(m.pairs)):
        if state[root]:
            continue
        stack = [(root, 0)]
        state[root] = 1
        while stack:
            node, k = stack[-1]
            if k < len(succ[node]):
                stack[-1] = (node, k + 1)
                nxt = succ[node][k]
                if state[nxt] == 1:
                    return False
                if state[nxt] == 0:
                    state[nxt] = 1
                    stack.append((nxt, 0))
            else:
                state[node] = 2
                stack.pop()
    return True


def morse_inequality_check(g: Graph, m: MorseMatching, field: str = "gf2") -> bool:
    """Total Betti number is at most the number of critical faces, with
    equality when all critical faces have the same cardinality."""
    if m.complex.source.mask != g.mask:
        raise PreconditionError("matching does not live on Ind(g)")
    if not (is_valid_matching(m) and is_acyclic(m)):
        raise PreconditionError("matching must be valid and acyclic")
    b = betti_numbers(m.complex, field).total
    crit = m.critical
    if b > len(crit):
        return False
    if len({popcount(f) for f in crit}) <= 1 and b != len(crit):
        return False
    return True


def match_isolated_vertex(g: Graph, v: int) -> MorseMatching:
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v}")
    if g.adj[v]:
        raise PreconditionError(f"vertex {v} is not isolated")
    rest = induced(g, g.mask & ~(1 << v))
    pairs = tuple((f, f | 1 << v) for f in independent_sets(rest))
    return MorseMatching(build_complex(g), pairs)


# certificates --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MorseCertificate:
    """An upper bound on the minimal number of critical cells of Ind(``graph``).

    ``fibers`` holds ``(sigma, child)`` pairs for fiber nodes (see module
    docstring), ``factors`` the children of a product node. ``nominal`` is
    the closed-form bound the step promises, when it differs from the
    achieved ``bound``.
    """

    lemma: str
    graph: Graph
    bound: int
    args: tuple = ()
    fibers: tuple[tuple[int, MorseCertificate], ...] = ()
    factors: tuple[MorseCertificate, ...] = ()
    nominal: int | None = None
    detail: dict = field(default_factory=dict)

    @cached_property
    def constructive(self) -> bool:
        if self.lemma == ASSUMED:
            return False
        return all(c.constructive for c in self.children())

    def children(self) -> list[MorseCertificate]:
        return [c for _, c in self.fibers] + list(self.factors)

    @property
    def trace(self) -> list[tuple[str, tuple]]:
        return [(node.lemma, node.args) for node, _ in self.walk()]

    def walk(self, depth: int = 0):
        """Preorder traversal yielding ``(node, depth)``."""
        stack = [(self, depth)]
        while stack:
            node, d = stack.pop()
            yield node, d
            stack.extend((c, d + 1) for c in reversed(node.children()))

    @cached_property
    def construction(self) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
        return _construct(self, {})

    @property
    def matching(self) -> MorseMatching:
        pairs, _ = self.construction
        return MorseMatching(build_complex(self.graph), pairs)

    @property
    def critical(self) -> frozenset[int]:
        return frozenset(self.construction[1])

    def to_json(self, emit_matching: bool = False) -> dict:
        g = self.graph
        out = {"bound": self.bound}
        if self.nominal is not None:
            out["nominal"] = self.nominal
        if emit_matching:
            out["critical"] = sorted(
                ([g.label(v) for v in bits(f)] for f in self.critical), key=lambda f: (len(f), f)
            )
            out["pairs"] = [
                [[g.label(v) for v in bits(s)], [g.label(v) for v in bits(t)]]
                for s, t in self.construction[0]
            ]
        out["trace"] = [
            {"lemma": node.lemma, "args": _json_args(node), "depth": d} for node, d in self.walk()
        ]
        return out


def _json_args(node: MorseCertificate) -> list:
    if node.lemma not in _VERTEX_ARGS:
        return list(node.args)
    lab = node.graph.label

    def conv(a):
        if isinstance(a, (tuple, list, frozenset)):
            return [conv(x) for x in a]
        return lab(a)

    return [conv(a) for a in node.args]


def _construct(cert: MorseCertificate, memo: dict):
    """Return ``(pairs, critical)`` for the certificate's matching."""
    key = id(cert)
    if key in memo:
        return memo[key]
    g = cert.graph
    if not cert.constructive:
        raise CapabilityError(f"{cert.lemma} step carries no explicit matching")
    if cert.lemma == EMPTY:
        out = ((), (0,))
    elif cert.lemma == ISO_VERTEX:
        (v,) = cert.args
        rest = induced(g, g.mask & ~(1 << v))
        out = (tuple((f, f | 1 << v) for f in independent_sets(rest)), ())
    elif cert.factors:
        pairs, crit = _construct(cert.factors[0], memo)
        faces = _faces_of(pairs, crit)
        for factor in cert.factors[1:]:
            pairs, crit = _product(pairs, crit, faces, *_construct(factor, memo))
            faces = _faces_of(pairs, crit)
        out = (pairs, crit)
    else:
        pairs, crit = [], []
        for sigma, child in cert.fibers:
            cp, cc = _construct(child, memo)
            pairs.extend((a | sigma, b | sigma) for a, b in cp)
            crit.extend(c | sigma for c in cc)
        out = (tuple(pairs), tuple(crit))
    memo[key] = out
    return out


def _faces_of(pairs, crit) -> list[int]:
    return [f for p in pairs for f in p] + list(crit)


def _product(mp, mc, mfaces, np_, nc):
    """Matching on Ind(G ⊔ H) from matchings (mp, mc) on Ind(G), (np_, nc) on Ind(H).

    Fibers over the quotient of Ind(H) by its matching: a matched pair
    ``J ⊂ J+v`` gives the fiber Ind(G) x {J, J+v}, matched completely along
    ``v``; a critical ``J`` gives a copy of Ind(G) carrying the G-matching.
    """
    pairs = []
    for j, jv in np_:
        pairs.extend((i | j, i | jv) for i in mfaces)
    for j in nc:
        pairs.extend((a | j, b | j) for a, b in mp)
    crit = tuple(c | j for j in nc for c in mc)
    return tuple(pairs), crit


# leaf and combinator constructors -------------------------------------------------


def empty_certificate(g: Graph) -> MorseCertificate:
    if g.mask:
        raise PreconditionError("the empty-graph step needs a graph without vertices")
    return MorseCertificate(EMPTY, g, 1)


def iso_vertex_certificate(g: Graph, v: int) -> MorseCertificate:
    if not g.has_vertex(v):
        raise InputError(f"unknown vertex {v}")
    if g.adj[v]:
        raise PreconditionError(f"vertex {v} is not isolated")
    return MorseCertificate(ISO_VERTEX, g, 0, (v,))


def assumed_certificate(g: Graph, bound: int) -> MorseCertificate:
    """A bound taken on trust (e.g. a hypothesis); carries no matching."""
    return MorseCertificate(ASSUMED, g, bound)


def wrap(lemma: str, child: MorseCertificate, args=(), nominal=None, detail=None) -> MorseCertificate:
    return MorseCertificate(lemma, child.graph, child.bound, tuple(args), ((0, child),),
                            nominal=nominal, detail=detail or {})


def fiber_graph(g: Graph, s: int, sigma: int) -> Graph:
    """G - S - N(sigma), the graph whose complex is the fiber over sigma."""
    drop = s
    for v in bits(sigma):
        drop |= g.adj[v]
    return induced(g, g.mask & ~drop)


Oracle = Callable[[Graph], MorseCertificate]


def link_certificate(g: Graph, u: int, rec: Oracle) -> MorseCertificate:
    """Split Ind(G) over {∅ ⊂ {u}}: c(G) <= c(G - u) + c(G - N[u])."""
    if not g.has_vertex(u):
        raise InputError(f"unknown vertex {u}")
    a = rec(induced(g, g.mask & ~(1 << u)))
    b = rec(induced(g, g.mask & ~closed_nbr(g, u)))
    return MorseCertificate(LINK, g, a.bound + b.bound, (u,), ((0, a), (1 << u, b)))


bound_by_link = link_certificate


def iso_edge_certificate(g: Graph, u: int, v: int, rec: Oracle) -> MorseCertificate:
    if g.adj[u] != 1 << v or g.adj[v] != 1 << u:
        raise PreconditionError(f"{u}-{v} is not an isolated edge")
    zero = iso_vertex_certificate(induced(g, g.mask & ~(1 << u)), v)
    rest = rec(induced(g, g.mask & ~((1 << u) | (1 << v))))
    return MorseCertificate(ISO_EDGE, g, rest.bound, (u, v), ((0, zero), (1 << u, rest)))


def bound_by_fold(g: Graph, u: int, v: int, rec: Oracle) -> MorseCertificate:
    """c(G) <= c(G - u) when N(v) ⊆ N(u): the link of u has v isolated."""
    if not (g.has_vertex(u) and g.has_vertex(v)):
        raise InputError(f"unknown vertex in fold ({u}, {v})")
    if u == v or g.adj[v] & ~g.adj[u]:
        raise PreconditionError(f"N({v}) is not contained in N({u})")
    main = rec(induced(g, g.mask & ~(1 << u)))
    zero = iso_vertex_certificate(induced(g, g.mask & ~closed_nbr(g, u)), v)
    return MorseCertificate(FOLD, g, main.bound, (u, v), ((0, main), (1 << u, zero)))


def product_certificate(parts: list[MorseCertificate]) -> MorseCertificate:
    """Certificate on the union of vertex-disjoint, mutually non-adjacent parts."""
    if len(parts) == 1:
        return parts[0]
    first = parts[0].graph
    union = 0
    for p in parts:
        if p.graph.universe != first.universe:
            raise PreconditionError("product parts must share a vertex universe")
        if union & p.graph.mask:
            raise PreconditionError("product parts must be vertex-disjoint")
        union |= p.graph.mask
    # the parts must be the components-wise restriction of one graph
    g = Graph(tuple(sum(p.graph.adj[v] if p.graph.mask >> v & 1 else 0 for p in parts)
                    for v in range(first.universe)), union, first.labels)
    bound = 1
    for p in parts:
        bound *= p.bound
    return MorseCertificate(PRODUCT, g, bound, (), (), tuple(parts))


def product_matching(gm: MorseCertificate, hm: MorseCertificate) -> MorseCertificate:
    """Certificate for G ⊔ H with bound c_G * c_H and an explicit glued matching."""
    for c in (gm, hm):
        if not c.constructive:
            raise CapabilityError("product matching needs certificates with explicit matchings")
    for v in bits(gm.graph.mask):
        if gm.graph.adj[v] & hm.graph.mask:
            raise PreconditionError("graphs of a product must not be adjacent")
    return product_certificate([gm, hm])


# forests and feedback sets -------------------------------------------------------


def _forest_steps(g: Graph) -> MorseCertificate:
    if not g.mask:
        return empty_certificate(g)
    v = isolated_vertex(g)
    if v is not None:
        return iso_vertex_certificate(g, v)
    e = isolated_edge(g)
    if e is not None:
        return iso_edge_certificate(g, e[0], e[1], _forest_steps)
    # a leaf v whose neighbour w has another neighbour u: N(v) = {w} ⊆ N(u)
    v = next(x for x in bits(g.mask) if popcount(g.adj[x]) == 1)
    w = g.adj[v].bit_length() - 1
    u = next(x for x in bits(g.adj[w]) if x != v)
    return bound_by_fold(g, u, v, _forest_steps)


def bound_forest(g: Graph) -> MorseCertificate:
    """Replay the induction on edges: isolated vertex, isolated edge, leaf fold."""
    if not is_forest(g):
        raise PreconditionError("bound_forest needs an acyclic graph")
    return wrap(FOREST, _forest_steps(g), nominal=1)


def fiber_certificate(lemma: str, g: Graph, s: int, child: Oracle, args=(), nominal=None,
                      detail=None) -> MorseCertificate:
    """Glue ``child(G - S - N(sigma))`` over every independent ``sigma ⊆ S``."""
    sub = induced(g, s)
    fibers = tuple((sigma, child(fiber_graph(g, s, sigma))) for sigma in independent_sets(sub))
    bound = sum(c.bound for _, c in fibers)
    return MorseCertificate(lemma, g, bound, tuple(args), fibers, nominal=nominal,
                            detail=detail or {})


def bound_feedback(g: Graph, u) -> MorseCertificate:
    """c(G) <= 2^|U| when G - U is a forest (iterated link over U)."""
    umask = to_mask(u)
    if umask & ~g.mask:
        raise InputError("feedback set contains unknown vertices")
    if not is_forest(induced(g, g.mask & ~umask)):
        raise PreconditionError(f"deleting {sorted(bits(umask))} does not leave a forest")
    return fiber_certificate(FEEDBACK, g, umask, bound_forest, (tuple(bits(umask)),),
                             nominal=1 << popcount(umask))


# cycle removal -----------------------------------------------------------------------


def _cycle_arcs(cycle: tuple[int, ...], attach: list[int]) -> list[tuple[int, ...]]:
    """Vertices strictly between consecutive attachment vertices, in cycle order."""
    pos = {v: i for i, v in enumerate(cycle)}
    order = sorted(attach, key=pos.get)
    n = len(cycle)
    arcs = []
    for i, a in enumerate(order):
        b = order[(i + 1) % len(order)]
        k = (pos[a] + 1) % n
        arc = []
        while cycle[k] != b:
            arc.append(cycle[k])
            k = (k + 1) % n
        arcs.append(tuple(arc))
    return arcs


def remove_cycle_bound(g: Graph, cyc, attach, rec: Oracle) -> MorseCertificate:
    """Split Ind(G) over Ind(G[N]) for an induced cycle C and N ⊇ attachments.

    Each fiber is Ind of a disjoint union of paths (the arcs of C between
    consecutive vertices of N, minus neighbours of sigma) and of
    ``H_sigma = (G - C) - N(sigma)``; a path on m ≡ 1 (mod 3) vertices
    kills the fiber. The surviving fibers are bounded by a Lucas number.
    """
    cyc = tuple(cyc)
    if not is_induced_cycle(g, cyc):
        raise PreconditionError(f"{cyc} is not an induced cycle")
    amask = to_mask(attach)
    cmask = to_mask(cyc)
    if amask & ~cmask:
        raise PreconditionError("attachment set must lie on the cycle")
    if attachments(g, cyc) & ~amask:
        raise PreconditionError("attachment set misses a cycle vertex with outside neighbours")
    n = popcount(amask)
    if n < 2:
        raise PreconditionError("cycle removal needs at least two attachment vertices")
    pos = {v: i for i, v in enumerate(cyc)}
    order = sorted(bits(amask), key=pos.get)
    arcs = _cycle_arcs(cyc, order)
    rest = g.mask & ~cmask
    table = []
    worst = 0

    def fiber(fg: Graph) -> MorseCertificate:
        nonlocal worst
        # fg = G - N - N(sigma); recover sigma-dependent pieces from what survived
        parts = []
        lengths = []
        for arc in arcs:
            piece = [v for v in arc if fg.mask >> v & 1]
            lengths.append(len(piece))
            if piece:
                parts.append(bound_forest(induced(fg, to_mask(piece))))
        h = rec(induced(fg, rest))
        worst = max(worst, h.bound)
        parts.append(h)
        cert = product_certificate(parts)
        table.append((tuple(lengths), cert.bound))
        return cert

    out = fiber_certificate(REMOVE_CYCLE, g, amask, fiber, (cyc, tuple(order)))
    # Lemma-count side: y in {0,1}^n with y_i + y_{i+1} != (t_i - 1) mod 3
    s = tuple((len(arc) - 1) % 3 for arc in arcs)
    relaxed = analyze_sequence(s).count
    surviving = sum(1 for lengths, _ in table if all(m % 3 != 1 for m in lengths))
    detail = {
        "arc_lengths": [len(a) for a in arcs],
        "fibers": len(table),
        "surviving": surviving,
        "relaxed_count": relaxed,
        "lucas": lucas(n),
        "c": worst,
    }
    return MorseCertificate(REMOVE_CYCLE, g, out.bound, out.args, out.fibers,
                            nominal=worst * lucas(n), detail=detail)


# the bound engine ------------------------------------------------------------------


class MorseEngine:
    """Memoised search for small certificates.

    Forced moves come first (empty graph, isolated vertex, isolated edge,
    fold). A disconnected graph then tries the product of its components;
    a connected one tries cycle removal on an induced cycle with fewest
    attachments and the link at a maximum-degree vertex. The smallest bound
    wins, earlier candidates on ties.
    """

    def __init__(self, try_link: bool = True, try_cycle: bool = True, try_direct_on_disconnected: bool = True,
                 cycle_cap: int = DEFAULT_CYCLE_CAP):
        self.try_link = try_link
        self.cycle_cap = cycle_cap
        self.try_cycle = try_cycle
        self.try_direct = try_direct_on_disconnected
        self.memo: dict[tuple, MorseCertificate] = {}

    def __call__(self, g: Graph) -> MorseCertificate:
        return self.best(g)

    def best(self, g: Graph) -> MorseCertificate:
        key = (g.mask, g.adj)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._solve(g)
            self.memo[key] = hit
        return hit

    def _solve(self, g: Graph) -> MorseCertificate:
        if not g.mask:
            return empty_certificate(g)
        v = isolated_vertex(g)
        if v is not None:
            return iso_vertex_certificate(g, v)
        e = isolated_edge(g)
        if e is not None:
            return iso_edge_certificate(g, e[0], e[1], self.best)
        f = find_fold(g)
        if f is not None:
            return bound_by_fold(g, f.u, f.v, self.best)
        comps = components(g)
        candidates = []
        if len(comps) > 1:
            candidates.append(product_certificate([self.best(induced(g, c)) for c in comps]))
            if not self.try_direct:
                return candidates[0]
        if self.try_cycle:
            low = find_low_attachment_cycle(g, cycle_cap=self.cycle_cap)
            if low is not None:
                candidates.append(self._remove_cycle(g, low.cycle, low.attachments))
        if self.try_link or not candidates:
            u = max(g.vertices(), key=lambda x: (g.degree(x), -x))
            candidates.append(link_certificate(g, u, self.best))
        return min(candidates, key=lambda c: c.bound)

    def _remove_cycle(self, g, cycle, att) -> MorseCertificate:
        att = set(att)
        for v in sorted(cycle):
            if len(att) >= 2:
                break
            att.add(v)
        return remove_cycle_bound(g, cycle, att, self.best)


def main_bound(g: Graph, engine: MorseEngine | None = None) -> MorseCertificate:
    """Certificate whose bound never exceeds the product over the packing number.

    The nominal bound uses the exact disjoint-cycle packing number when the
    graph is small enough, otherwise its certified upper bound.
    """
    engine = engine or MorseEngine()
    k = cycle_packing(g).upper
    nominal = lucas_product_bound(k)
    cert = engine.best(g)
    if cert.bound > nominal:
        raise VerificationError(f"achieved bound {cert.bound} exceeds the product bound {nominal} (k={k})")
    return wrap(MAIN, cert, (k,), nominal=nominal, detail={"k": k})


# graphs without two disjoint cycles --------------------------------------------------


def _leaf_reduce(g: Graph, finish: Oracle) -> MorseCertificate:
    """Fold away leaves, strip isolated vertices and edges, then call ``finish``
    on the remaining graph of minimum degree at least two."""
    if not g.mask:
        return empty_certificate(g)
    v = isolated_vertex(g)
    if v is not None:
        return iso_vertex_certificate(g, v)
    e = isolated_edge(g)
    if e is not None:
        return iso_edge_certificate(g, e[0], e[1], lambda h: _leaf_reduce(h, finish))
    leaf = next((x for x in bits(g.mask) if popcount(g.adj[x]) == 1), None)
    if leaf is not None:
        w = g.adj[leaf].bit_length() - 1
        u = next(x for x in bits(g.adj[w]) if x != leaf)
        return bound_by_fold(g, u, leaf, lambda h: _leaf_reduce(h, finish))
    return finish(g)


def _triangle_cycle(contr, tri) -> tuple[int, ...]:
    a, b, c = tri
    out = []
    for x, y in ((a, b), (b, c), (c, a)):
        chain = contr.paths[frozenset((x, y))][0]
        if chain[0] != x:
            chain = chain[::-1]
        out.extend(chain[:-1])
    return tuple(out)


def _two_cycle_free_core(g: Graph, branch: list) -> MorseCertificate:
    """Minimum degree >= 2 core of a graph without two disjoint cycles."""
    if {g.degree(v) for v in bits(g.mask)} == {2}:
        branch.append("cycle")
        cyc = _cycle_order(g)
        return remove_cycle_bound(g, cyc, cyc[:2], bound_forest)
    try:
        contr = contract_degree_two(g)
    except StructuralError:
        contr = None
    if contr is not None:
        h = contr.graph
        verts = h.vertices()
        tri = next(((a, b, c) for a in verts for b in bits(h.adj[a]) if b > a
                    for c in bits(h.adj[a] & h.adj[b]) if c > b), None)
        if tri is not None:
            # realise each contracted edge by its shortest chain: the cycle is induced
            branch.append("triangle")
            return remove_cycle_bound(g, _triangle_cycle(contr, tri), tri, bound_forest)
        if is_complete_bipartite_3t(h) is not None:
            a = verts[0]
            part = [a] + [x for x in verts if x != a and not h.adj[a] >> x & 1]
            if len(part) != 3:
                part = list(bits(h.adj[a]))
            branch.append("k3t")
            return bound_feedback(g, part[:2])
    fb = min_feedback_set(g)
    if len(fb) > 2:
        raise StructuralError(
            f"no triangle, K_3,t or small feedback set in the contracted core {sorted(bits(g.mask))}"
        )
    branch.append("degenerate")
    return bound_feedback(g, fb)


def _cycle_order(g: Graph) -> tuple[int, ...]:
    start = g.mask & -g.mask
    v = start.bit_length() - 1
    order = [v]
    prev = -1
    while True:
        nxt = next(x for x in bits(g.adj[order[-1]]) if x != prev)
        if nxt == v:
            return tuple(order)
        prev = order[-1]
        order.append(nxt)


def bound_no_two_disjoint_cycles(g: Graph) -> MorseCertificate:
    """Bound at most 4 for graphs without two vertex-disjoint cycles.

    The top step's single argument names the case that fired: ``triangle``
    (contracted core has a triangle), ``k3t`` (core contracts to K_3,t),
    ``cycle`` (core is a bare cycle), ``degenerate`` (contraction hits a loop
    or collapses, handled with a feedback set of size <= 2) or ``reduced``
    (leaf folds and stripping finished the graph).
    """
    packing = cycle_packing(g)
    if packing.lower >= 2:
        raise PreconditionError(f"graph has vertex-disjoint cycles {packing.witness[:2]}")
    if packing.upper >= 2:
        raise PreconditionError("could not certify the absence of two disjoint cycles")
    branch: list[str] = []
    cert = _leaf_reduce(g, lambda h: _two_cycle_free_core(h, branch))
    cert = wrap(TWO_CYCLE_FREE, cert, (branch[0] if branch else "reduced",), nominal=4)
    if cert.bound > 4:
        raise VerificationError(f"bound {cert.bound} exceeds 4 for a graph without two disjoint cycles")
    return cert
