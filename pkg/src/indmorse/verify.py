"""Verification campaigns: the Morse inequality over a graph corpus plus the
combinatorial sweeps, collected into a deterministic pass/fail report."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable

from .canonical import canonical_form
from .complex import DEFAULT_FACE_CAP, betti_numbers, build_complex, total_betti
from .errors import InputError
from .graph import Graph, is_connected
from .io import cycle_graph, format_edge_list, format_graph6, path_graph, random_gnp
from .lucas import lucas, lucas_sweep, lucas_triangle_row
from .morse import MorseCertificate, is_acyclic, is_valid_matching, main_bound

log = logging.getLogger(__name__)

ATLAS_MAX = 7  # the networkx atlas lists every graph on at most 7 vertices
MATCHING_FACE_LIMIT = 1 << 12


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    counterexample: dict | None = None

    def to_json(self) -> dict:
        out = {"check": self.name, "passed": self.passed, "checked": self.checked}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class CorpusReport:
    vertex_cap: int
    seed: int | None
    sample: int | None
    checks: list[CheckResult] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def json_lines(self) -> list[dict]:
        head = {"vertex_cap": self.vertex_cap, "seed": self.seed, "sample": self.sample,
                "passed": self.passed}
        if self.warnings:
            head["warnings"] = list(self.warnings)
        return [head] + [c.to_json() for c in self.checks]

    def table(self) -> str:
        w = max((len(c.name) for c in self.checks), default=5)
        rows = [f"{c.name.ljust(w)}  {'PASS' if c.passed else 'FAIL'}  {c.checked:>7}  {c.detail}"
                for c in self.checks]
        return "\n".join(rows)


def serialize_graph(g: Graph) -> dict:
    return {"graph6": format_graph6(g), "edges": format_edge_list(g)}


# corpora ---------------------------------------------------------------------


def atlas_corpus(vertex_cap: int) -> list[Graph]:
    """Connected graphs on 1..vertex_cap vertices, one per isomorphism class,
    sorted by canonical form."""
    import networkx as nx

    if vertex_cap > ATLAS_MAX:
        raise InputError(f"the exhaustive corpus stops at {ATLAS_MAX} vertices")
    seen: dict[tuple, Graph] = {}
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n > vertex_cap:
            break
        if not nx.is_connected(h):
            continue
        g = Graph.from_edges(n, list(h.edges()))
        seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]


def random_corpus(vertex_cap: int, count: int, seed: int, p: float = 0.5) -> list[Graph]:
    """``count`` seeded connected G(n, p) graphs with 1 <= n <= vertex_cap."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, vertex_cap)
        g = random_gnp(n, p, rng.randrange(1 << 31))
        if is_connected(g):
            out.append(g)
    return out


def build_corpus(vertex_cap: int, sample: int | None = None, seed: int = 0) -> list[Graph]:
    if vertex_cap < 0:
        raise InputError("vertex cap must be non-negative")
    if vertex_cap > ATLAS_MAX:
        return random_corpus(vertex_cap, sample or 200, seed)
    graphs = atlas_corpus(vertex_cap)
    if sample is not None and sample < len(graphs):
        picked = sorted(random.Random(seed).sample(range(len(graphs)), sample))
        graphs = [graphs[i] for i in picked]
    return graphs


# individual checks -------------------------------------------------------------


def graph_failure(g: Graph, bound: Callable[[Graph], MorseCertificate] = main_bound,
                  face_cap: int = DEFAULT_FACE_CAP) -> str | None:
    """Reason ``g`` violates the Morse inequality pipeline, or ``None``."""
    c = build_complex(g, face_cap)
    b = betti_numbers(c).total
    cert = bound(g)
    if b > cert.bound:
        return f"total Betti {b} exceeds bound {cert.bound}"
    if cert.constructive and c.num_faces <= MATCHING_FACE_LIMIT:
        m = cert.matching
        if not is_valid_matching(m):
            return "emitted matching is not valid"
        if not is_acyclic(m):
            return "emitted matching has a cycle"
        if m.num_critical != cert.bound:
            return f"matching has {m.num_critical} critical faces, certificate claims {cert.bound}"
    return None


def check_morse(graphs: list[Graph], bound=main_bound, face_cap: int = DEFAULT_FACE_CAP) -> CheckResult:
    for g in graphs:
        why = graph_failure(g, bound, face_cap)
        if why is not None:
            return CheckResult("morse-inequality", False, len(graphs), why,
                               {**serialize_graph(g), "reason": why})
    detail = "vacuous: empty corpus" if not graphs else "b <= bound, matchings valid and acyclic"
    return CheckResult("morse-inequality", True, len(graphs), detail)


def check_lucas_sweep(n_max: int) -> CheckResult:
    total = 0
    for n in range(2, n_max + 1):
        checked, bad = lucas_sweep(n)
        total += checked
        if bad is not None:
            s, why = bad
            return CheckResult("lucas-sweep", False, total, why, {"sequence": list(s)})
    return CheckResult("lucas-sweep", True, total, f"n = 2..{n_max}")


def check_lucas_rows(n_max: int) -> CheckResult:
    for n in range(2, n_max + 1):
        row = lucas_triangle_row(n)
        if not (row[0] == row[-1] == max(row) == lucas(n)):
            return CheckResult("lucas-triangle", False, n - 1, f"row {n} = {row}", {"row": n})
    return CheckResult("lucas-triangle", True, max(0, n_max - 1), f"rows 2..{n_max}")


def check_cycle_table(n_max: int = 12) -> CheckResult:
    for n in range(3, n_max + 1):
        want = 2 if n % 3 == 0 else 1
        for fld in ("gf2", "rational"):
            got = total_betti(cycle_graph(n), fld)
            if got != want:
                return CheckResult("cycle-table", False, n - 2, f"C_{n} over {fld}: {got} != {want}",
                                   serialize_graph(cycle_graph(n)))
    return CheckResult("cycle-table", True, n_max - 2, f"n = 3..{n_max}")


def check_path_table(n_max: int = 15) -> CheckResult:
    for n in range(1, n_max + 1):
        g = path_graph(n)
        want = 0 if n % 3 == 1 else 1
        got = main_bound(g).bound
        b = total_betti(g)
        if got != want or b != want:
            return CheckResult("path-table", False, n, f"P_{n}: bound {got}, betti {b}, expected {want}",
                               serialize_graph(g))
    return CheckResult("path-table", True, n_max, f"n = 1..{n_max}")


def verify_corpus(vertex_cap: int = 6, sample: int | None = None, seed: int = 0,
                  lucas_max: int = 9, rows_max: int = 30, face_cap: int = DEFAULT_FACE_CAP,
                  bound=main_bound) -> CorpusReport:
    report = CorpusReport(vertex_cap, seed, sample)
    graphs = build_corpus(vertex_cap, sample, seed)
    if not graphs:
        msg = "empty corpus; the Morse check passes vacuously"
        log.warning(msg)
        report.warnings.append(msg)
    report.checks.append(check_morse(graphs, bound, face_cap))
    report.checks.append(check_lucas_sweep(lucas_max))
    report.checks.append(check_lucas_rows(rows_max))
    report.checks.append(check_cycle_table())
    report.checks.append(check_path_table())
    return report
