"""Graph ingestion and serialization: edge-list text, graph6, named families."""

from __future__ import annotations

import random
from pathlib import Path

from .errors import InputError
from .graph import Graph, compact, disjoint_union

FAMILY_HELP = """\
family specs (NAME:ARGS):
  path:n                 path on n vertices
  cycle:n                cycle on n >= 3 vertices
  complete:n             complete graph K_n
  complete-bipartite:a:b K_{a,b}
  star:n                 star K_{1,n} (n leaves)
  k5-copies:k            k disjoint copies of K_5
  petersen               the Petersen graph
  random-gnp:n:p:seed    Erdos-Renyi G(n, p) with a seeded RNG
  forest-random:n:seed   random forest on n vertices with a seeded RNG
"""


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    One edge ``a b`` per line; ``v a`` declares a (possibly isolated) vertex;
    blank lines and ``#`` comments are skipped. Labels must be integers and
    are mapped to dense indices in sorted order.
    """
    labels: set[int] = set()
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        try:
            if tok[0] == "v" and len(tok) == 2:
                labels.add(int(tok[1]))
            elif len(tok) == 2:
                a, b = int(tok[0]), int(tok[1])
                if a == b:
                    raise InputError(f"line {lineno}: loop at {a}")
                labels.update((a, b))
                raw_edges.append((a, b))
            else:
                raise InputError(f"line {lineno}: expected 'a b' or 'v a', got {line!r}")
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"line {lineno}: non-integer label in {line!r}") from None
    order = sorted(labels)
    index = {lab: i for i, lab in enumerate(order)}
    edges = {tuple(sorted((index[a], index[b]))) for a, b in raw_edges}
    return Graph.from_edges(len(order), sorted(edges), labels=order)


def format_edge_list(g: Graph) -> str:
    lines = [f"v {g.label(v)}" for v in g.vertices()]
    lines += [f"{g.label(u)} {g.label(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (at most 62 vertices)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise InputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d < 64 for d in data):
        raise InputError(f"invalid graph6 character in {line!r}")
    n = data[0]
    if n == 63:
        raise InputError("graph6 strings for more than 62 vertices are not supported")
    need = n * (n - 1) // 2
    if len(data) - 1 < (need + 5) // 6:
        raise InputError(f"truncated graph6 string {line!r}")
    stream = []
    for d in data[1:]:
        stream.extend((d >> (5 - k)) & 1 for k in range(6))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if stream[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def format_graph6(g: Graph) -> str:
    h, _ = compact(g)
    n = h.universe
    if n > 62:
        raise InputError("graph6 writer supports at most 62 vertices")
    stream = [1 if h.adj[j] >> i & 1 else 0 for j in range(1, n) for i in range(j)]
    stream += [0] * (-len(stream) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(stream), 6):
        val = 0
        for b in stream[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph_file(path: str | Path) -> Graph:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if p.suffix in (".g6", ".graph6"):
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        return parse_graph6(first)
    return parse_edge_list(text)


# families --------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int = 0) -> Graph:
    return Graph.from_edges(n, [])


def disjoint_copies(g: Graph, k: int) -> Graph:
    out = empty_graph(0)
    for _ in range(k):
        out, _, _ = disjoint_union(out, g)
    return out


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_forest(n: int, seed: int, attach: float = 0.8) -> Graph:
    """Each vertex after the first joins a uniformly random earlier vertex
    with probability ``attach``, otherwise starts a new tree."""
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        if rng.random() < attach:
            edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)


def family(spec: str) -> Graph:
    """Build a graph from a family spec such as ``cycle:6`` (see FAMILY_HELP)."""
    name, *args = spec.strip().split(":")
    try:
        if name == "path":
            (n,) = args
            return path_graph(int(n))
        if name == "cycle":
            (n,) = args
            return cycle_graph(int(n))
        if name == "complete":
            (n,) = args
            return complete_graph(int(n))
        if name == "complete-bipartite":
            a, b = args
            return complete_bipartite(int(a), int(b))
        if name == "star":
            (n,) = args
            return star_graph(int(n))
        if name == "k5-copies":
            (k,) = args
            return disjoint_copies(complete_graph(5), int(k))
        if name == "petersen" and not args:
            return petersen_graph()
        if name == "random-gnp":
            n, p, seed = args
            if not 0.0 <= float(p) <= 1.0:
                raise InputError(f"edge probability {p} outside [0, 1]")
            return random_gnp(int(n), float(p), int(seed))
        if name == "forest-random":
            n, seed = args
            return random_forest(int(n), int(seed))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed family spec {spec!r}") from None
    raise InputError(f"unknown family spec {spec!r}\n{FAMILY_HELP}")
