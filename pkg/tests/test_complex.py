import pytest

import oracles
from indmorse.complex import (
    betti_numbers,
    build_complex,
    gf2_rank,
    independent_sets,
    rational_rank,
    total_betti,
)
from indmorse.errors import InputError, ResourceError
from indmorse.graph import Graph, bits
from indmorse.io import complete_graph, cycle_graph, disjoint_copies, empty_graph, path_graph, petersen_graph


def faces_as_sets(c):
    return {frozenset(bits(f)) for f in c.faces()}


def test_c4_faces():
    c = build_complex(cycle_graph(4))
    want = {frozenset(), *(frozenset([v]) for v in range(4)), frozenset({0, 2}), frozenset({1, 3})}
    assert faces_as_sets(c) == want
    assert c.num_faces == 7


def test_empty_and_complete():
    c = build_complex(empty_graph(0))
    assert list(c.faces()) == [0] and c.num_faces == 1
    c = build_complex(complete_graph(5))
    assert c.num_faces == 6 and c.dimension == 0


def test_face_cap():
    with pytest.raises(ResourceError) as err:
        build_complex(empty_graph(12), cap=100)
    assert err.value.reached > 100


@pytest.mark.parametrize("field", ["gf2", "rational"])
def test_betti_examples(field):
    assert betti_numbers(build_complex(cycle_graph(3)), field).betti == {0: 2}
    assert betti_numbers(build_complex(cycle_graph(4)), field).total == 1
    assert betti_numbers(build_complex(complete_graph(5)), field).betti == {0: 4}
    assert total_betti(cycle_graph(6), field) == 2
    assert total_betti(cycle_graph(7), field) == 1
    assert total_betti(disjoint_copies(complete_graph(5), 2), field) == 16


def test_empty_graph_homology():
    # only the empty face: reduced homology in degree -1
    rep = betti_numbers(build_complex(empty_graph(0)))
    assert rep.betti == {-1: 1} and rep.total == 1


def test_unknown_field():
    with pytest.raises(InputError):
        betti_numbers(build_complex(path_graph(2)), "gf3")


def test_report_json_and_euler():
    rep = betti_numbers(build_complex(cycle_graph(6)))
    assert rep.to_json("c6") == {"graph": "c6", "faces": 18, "betti": {"1": 2}, "total": 2, "field": "gf2"}
    assert rep.euler_consistent()


def test_ranks():
    assert gf2_rank([0b11, 0b11, 0b01]) == 2
    assert gf2_rank([]) == 0
    assert rational_rank([{0: 2, 1: 4}, {0: 1, 1: 2}]) == 1
    assert rational_rank([{0: 1, 1: 1}, {0: 1, 1: -1}]) == 2


def test_against_oracle_small_graphs():
    import networkx as nx

    for h in nx.graph_atlas_g()[1:200]:
        n = h.number_of_nodes()
        edges = list(h.edges())
        g = Graph.from_edges(n, edges)
        assert len(independent_sets(g)) == len(oracles.independent_sets(n, edges))
        for field in ("gf2", "rational"):
            assert betti_numbers(build_complex(g), field).betti == oracles.reduced_betti(n, edges, field)


def test_petersen_matches_oracle():
    g = petersen_graph()
    edges = list(g.edges())
    assert total_betti(g) == oracles.total_betti(10, edges)
