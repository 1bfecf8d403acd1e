"""Randomised invariants, driven by hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from indmorse.canonical import canonical_form
from indmorse.complex import betti_numbers, build_complex, total_betti
from indmorse.cycles import min_feedback_set
from indmorse.graph import Graph, delete_vertices, disjoint_union, find_fold
from indmorse.io import format_edge_list, format_graph6, parse_edge_list, parse_graph6
from indmorse.lucas import bundling_inequality_check, count_valid_assignments, lucas
from indmorse.morse import bound_feedback, is_acyclic, is_valid_matching, main_bound


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_main_bound_certifies(g):
    cert = main_bound(g)
    m = cert.matching
    assert is_valid_matching(m) and is_acyclic(m)
    assert m.num_critical == cert.bound <= cert.nominal
    assert total_betti(g) <= cert.bound


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_homology_matches_oracle(g):
    for field in ("gf2", "rational"):
        rep = betti_numbers(build_complex(g), field)
        assert rep.betti == oracles.reduced_betti(g.order, list(g.edges()), field)
        assert rep.euler_consistent()


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_fold_preserves_homology(g):
    f = find_fold(g)
    if f is not None:
        assert total_betti(g) == total_betti(delete_vertices(g, {f.u}))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_disjoint_union_multiplies(g, h):
    u, _, _ = disjoint_union(g, h)
    assert total_betti(u) == total_betti(g) * total_betti(h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_feedback_bound(g):
    fb = min_feedback_set(g)
    cert = bound_feedback(g, fb)
    assert total_betti(g) <= cert.bound <= 2 ** len(fb)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_serialisation_round_trips(g):
    assert parse_graph6(format_graph6(g)) == g
    assert parse_edge_list(format_edge_list(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.order, [(perm[a], perm[b]) for a, b in g.edges()])
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from((0, 1, 2)), min_size=2, max_size=14))
def test_sequence_count_below_lucas(s):
    assert count_valid_assignments(s) <= lucas(len(s))


@settings(max_examples=300, deadline=None)
@given(*[st.integers(1, 15)] * 4)
def test_bundling_identity(i, j, k, l):
    assert bundling_inequality_check(i, j, k, l)
