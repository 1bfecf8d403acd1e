import math

import pytest

import oracles
from indmorse.cycles import (
    analyze,
    chordless_cycles,
    cycle_packing,
    effective_girth,
    find_low_attachment_cycle,
    girth,
    greedy_feedback_set,
    is_induced_cycle,
    min_feedback_set,
    shortest_cycle,
    simple_cycles,
    voss_table,
)
from indmorse.errors import InputError, PreconditionError
from indmorse.graph import Graph, delete_vertices, is_forest, subdivide_edge
from indmorse.io import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_copies,
    path_graph,
    petersen_graph,
    random_forest,
    random_gnp,
)


def subdivided_k4():
    g = complete_graph(4)
    for u, v in list(g.edges()):
        g = subdivide_edge(g, u, v)
    return g


def test_girth_examples():
    assert girth(cycle_graph(7)) == 7
    assert girth(random_forest(10, 1)) == math.inf
    assert girth(petersen_graph()) == 5
    assert girth(complete_bipartite(3, 3)) == 4


def test_effective_girth_examples():
    assert effective_girth(cycle_graph(8)) == 0
    assert effective_girth(complete_graph(4)) == 3
    assert effective_girth(subdivided_k4()) == 3
    assert effective_girth(path_graph(5)) == math.inf


def test_cycle_enumeration_counts():
    # K4 has 7 cycles (4 triangles and 3 squares); only the triangles are chordless
    assert len(simple_cycles(complete_graph(4))) == 7
    assert len(chordless_cycles(complete_graph(4))) == 4
    # Petersen: 12 pentagons, 10 hexagons, 15 octagons and 20 nonagons
    assert len(simple_cycles(petersen_graph())) == 57
    for c in chordless_cycles(petersen_graph()):
        assert is_induced_cycle(petersen_graph(), c)


def test_shortest_cycle():
    c = shortest_cycle(petersen_graph())
    assert len(c) == 5 and is_induced_cycle(petersen_graph(), c)
    assert shortest_cycle(path_graph(4)) is None


def test_packing_examples():
    p = cycle_packing(random_forest(9, 2))
    assert (p.lower, p.upper, p.witness) == (0, 0, ())
    p = cycle_packing(complete_graph(5))
    assert (p.lower, p.upper) == (1, 1) and len(p.witness[0]) == 3
    p = cycle_packing(disjoint_copies(complete_graph(5), 2))
    assert (p.lower, p.upper) == (2, 2) and all(len(c) == 3 for c in p.witness)
    assert cycle_packing(petersen_graph()).upper == 2


def test_packing_heuristic_bounds_bracket():
    g = disjoint_copies(cycle_graph(3), 6)
    p = cycle_packing(g)
    assert not p.exact and p.lower <= 6 <= p.upper


def test_feedback_examples():
    assert min_feedback_set(cycle_graph(6)) == {0}
    fb = min_feedback_set(complete_graph(5))
    assert len(fb) == 3 and is_forest(delete_vertices(complete_graph(5), fb))
    assert min_feedback_set(random_forest(8, 0)) == frozenset()
    assert len(min_feedback_set(petersen_graph())) == 3


def test_feedback_exact_vs_brute_force():
    from itertools import combinations

    for seed in range(30):
        g = random_gnp(8, 0.4, seed)
        fb = min_feedback_set(g)
        assert is_forest(delete_vertices(g, fb))
        smaller = any(is_forest(delete_vertices(g, set(s)))
                      for s in combinations(g.vertices(), len(fb) - 1)) if fb else False
        assert not smaller
        assert len(greedy_feedback_set(g)) >= len(fb)


def test_voss_examples():
    t = voss_table(10)
    assert (t[1], t[3], t[4]) == (4, 8, 11)
    assert [t[k] for k in range(1, 11)] == oracles.voss(10)
    # 11 fits, 12 does not: 11 <= 2 + 2 log2(30), 12 > 2 + 2 log2(31)
    assert 11 <= 2 + 2 * math.log2(19 + 11) and 12 > 2 + 2 * math.log2(19 + 12)
    with pytest.raises(InputError):
        voss_table(0)


def test_low_attachment_examples():
    c6 = find_low_attachment_cycle(cycle_graph(6))
    assert sorted(c6.cycle) == list(range(6)) and not c6.attachments
    k4 = find_low_attachment_cycle(complete_graph(4))
    assert len(k4.cycle) == 3 and len(k4.attachments) == 3
    g = Graph.from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)])
    low = find_low_attachment_cycle(g)
    assert len(low.attachments) == 1 and len(low.cycle) == 3
    assert find_low_attachment_cycle(complete_graph(4), limit=2) is None
    with pytest.raises(PreconditionError):
        find_low_attachment_cycle(path_graph(5))


def test_analyze_json():
    js = analyze(petersen_graph()).to_json(petersen_graph())
    assert js["girth"] == 5 and js["packing_upper"] == 2 and len(js["min_feedback"]) == 3
    js = analyze(path_graph(3)).to_json()
    assert js["girth"] is None and js["packing_lower"] == 0
