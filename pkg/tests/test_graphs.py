"""Graph layer tests.  Structural predicates are cross-checked against a
brute-force simple-cycle enumeration that is only feasible on small graphs."""

import random

import pytest

from graphk0.errors import InvalidGraph, InvalidParameter
from graphk0.graphs import (
    Graph,
    cayley_graph,
    en_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    incidence_matrix,
    k0_matrix,
    make_graph,
    rose_graph,
    rose_tail_graph,
    structural_report,
)
from graphk0.intlinalg import IntMatrix, determinant


# === brute-force structural oracle ===

def all_simple_cycle_sets(g):
    """Vertex sets of the simple directed cycles, one frozenset per cycle."""
    out = {}
    for s, t in set(g.edges):
        out.setdefault(s, []).append(t)
    cycles = set()

    def extend(path, on_path):
        for w in out.get(path[-1], ()):
            if w == path[0]:
                cycles.add(frozenset(path))
            elif w not in on_path and w > path[0]:
                on_path.add(w)
                path.append(w)
                extend(path, on_path)
                path.pop()
                on_path.remove(w)

    for start in range(g.n_vertices):
        extend([start], {start})
    return cycles


def reachable_sets(g):
    reach = [set([v]) for v in range(g.n_vertices)]
    for s, t in set(g.edges):
        reach[s].add(t)
    changed = True
    while changed:
        changed = False
        for v in range(g.n_vertices):
            new = set()
            for w in reach[v]:
                new |= reach[w]
            if not new <= reach[v]:
                reach[v] |= new
                changed = True
    return reach


def oracle_report(g):
    cycles = all_simple_cycle_sets(g)
    sink_free = all(g.out_degree(v) > 0 for v in range(g.n_vertices))
    # a simple cycle uses exactly one edge per vertex, so an exit exists
    # exactly when some cycle vertex has a second outgoing edge
    condition_l = all(any(g.out_degree(v) >= 2 for v in c) for c in cycles)
    reach = reachable_sets(g)
    cofinal = all(
        reach[v] & c for v in range(g.n_vertices) for c in cycles
    )
    return sink_free, condition_l, cofinal


def assert_matches_oracle(g):
    rep = structural_report(g)
    sink_free, condition_l, cofinal = oracle_report(g)
    assert rep.sink_free == sink_free, g
    assert rep.condition_l == condition_l, g
    assert rep.cofinal == cofinal, g
    assert rep.pis == (sink_free and condition_l and cofinal)


# === construction and canonical form ===

def test_edges_are_sorted_and_equality_is_canonical():
    g1 = make_graph(2, [(1, 1), (0, 1), (1, 1)])
    g2 = make_graph(2, [(0, 1), (1, 1), (1, 1)])
    assert g1 == g2
    assert g1.edges == ((0, 1), (1, 1), (1, 1))
    assert hash(g1) == hash(g2)


def test_from_multiplicities_matches_expanded_form():
    g1 = Graph.from_multiplicities(3, {(0, 1): 2, (2, 2): 1})
    g2 = make_graph(3, [(2, 2), (0, 1), (0, 1)])
    assert g1 == g2
    assert g1.multiplicities == {(0, 1): 2, (2, 2): 1}
    assert Graph.from_multiplicities(2, {(0, 1): 1, (1, 0): 0}).edges == ((0, 1),)


def test_degree_and_successors():
    g = make_graph(3, [(0, 1), (0, 2), (0, 1), (1, 0)])
    assert g.out_degree(0) == 3
    assert g.out_degree(2) == 0
    assert g.successors(0) == [1, 1, 2]
    assert g.successors(2) == []


def test_invalid_graphs_rejected():
    cases = [
        lambda: make_graph(0, []),
        lambda: make_graph(-2, []),
        lambda: make_graph(2, [(0, 2)]),
        lambda: make_graph(2, [(-1, 0)]),
        lambda: make_graph(2, [(0,)]),
        lambda: make_graph(2, [(0, 1, 2)]),
        lambda: Graph(2, ((0, "x"),)),
        lambda: Graph.from_multiplicities(2, {(0, 1): -1}),
        lambda: Graph.from_multiplicities(2, {(0, 1): True}),
        lambda: Graph.from_multiplicities(2, {(0.5, 1): 1}),
        lambda: Graph.from_multiplicities(True, {(0, 0): 1}),
    ]
    for build in cases:
        with pytest.raises(InvalidGraph):
            build()


def test_high_multiplicity_stays_cheap():
    # a quarter million parallel loops must not expand into fresh tuples
    g = en_graph(2, 250_000)
    assert len(g.edges) == 6 + 2 + 4 + 250_002
    assert incidence_matrix(g)[2, 2] == 250_002
    assert g.out_degree(2) == 250_004


# === the named families ===

def test_cayley_graph_shapes():
    g = cayley_graph(4, 2)
    assert g.edges == (
        (0, 1), (0, 2), (1, 2), (1, 3), (2, 0), (2, 3), (3, 0), (3, 1)
    )
    assert cayley_graph(4, 6) == g  # shift normalized mod n
    assert cayley_graph(1, 0) == make_graph(1, [(0, 0), (0, 0)])
    assert cayley_graph(2, 1) == make_graph(2, [(0, 1), (0, 1), (1, 0), (1, 0)])
    with pytest.raises(InvalidParameter):
        cayley_graph(0, 1)
    with pytest.raises(InvalidParameter):
        cayley_graph(3, -1)


def test_rose_graphs():
    assert rose_graph(3).edges == ((0, 0), (0, 0), (0, 0))
    assert rose_tail_graph(5, 3) == make_graph(2, [(0, 1)] * 2 + [(1, 1)] * 5)
    with pytest.raises(InvalidParameter):
        rose_graph(0)
    with pytest.raises(InvalidParameter):
        rose_tail_graph(1, 2)
    with pytest.raises(InvalidParameter):
        rose_tail_graph(5, 1)


def test_en_graph_incidence():
    assert incidence_matrix(en_graph(1, 5)).entries == ((2, 1, 1), (1, 3, 1), (1, 1, 7))
    assert incidence_matrix(en_graph(4, 4)).entries == ((2, 1, 1), (1, 6, 1), (1, 1, 6))
    assert incidence_matrix(en_graph(2, 40)).entries == ((2, 1, 1), (1, 4, 1), (1, 1, 42))
    with pytest.raises(InvalidParameter):
        en_graph(0, 5)


# === matrices ===

def test_incidence_and_presentation_matrix():
    g = cayley_graph(4, 2)
    assert incidence_matrix(g).entries == (
        (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1), (1, 1, 0, 0)
    )
    m = k0_matrix(g)
    assert m == IntMatrix.identity(4) - incidence_matrix(g).transpose()
    assert determinant(m) == -5
    assert determinant(k0_matrix(en_graph(2, 8))) == -16


def test_presentation_matrix_counts_parallel_edges():
    g = make_graph(1, [(0, 0)] * 4)
    assert k0_matrix(g).entries == ((-3,),)


# === structural predicates ===

def test_structural_named_cases():
    rep = structural_report(cayley_graph(7, 2))
    assert (rep.sink_free, rep.condition_l, rep.cofinal, rep.pis) == (True, True, True, True)
    rep = structural_report(make_graph(2, [(0, 1)]))
    assert not rep.sink_free and not rep.pis
    rep = structural_report(make_graph(1, [(0, 0)]))
    assert rep.sink_free and not rep.condition_l
    # two disjoint cycles: neither side reaches the other
    rep = structural_report(make_graph(4, [(0, 1), (1, 0), (0, 0), (2, 3), (3, 2), (2, 2)]))
    assert not rep.cofinal
    assert structural_report(rose_graph(2)).pis
    assert not structural_report(rose_graph(1)).pis


def test_structural_matches_oracle_on_families():
    for n in range(1, 7):
        for j in range(n):
            assert_matches_oracle(cayley_graph(n, j))
    for m in (1, 2, 3):
        assert_matches_oracle(rose_graph(m))
    for m, d in ((2, 2), (5, 3), (6, 5)):
        assert_matches_oracle(rose_tail_graph(m, d))
    for d, q in ((1, 1), (1, 5), (4, 4), (2, 38)):
        assert_matches_oracle(en_graph(d, q))


def test_structural_matches_oracle_on_random_graphs():
    rng = random.Random(624690)
    for case in range(250):
        n = rng.randint(1, 5)
        n_edges = rng.randint(0, 10)
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(n_edges)]
        assert_matches_oracle(make_graph(n, edges))


# === serialization ===

def test_graph_json_round_trip():
    g = make_graph(2, [(0, 1), (1, 1), (1, 1)])
    d = graph_to_json_dict(g)
    assert d == {"n": 2, "edges": [[0, 1], [1, 1], [1, 1]]}
    assert graph_from_json_dict(d) == g
    big = en_graph(3, 9)
    assert graph_from_json_dict(graph_to_json_dict(big)) == big


def test_graph_json_rejects_malformed_objects():
    cases = [
        [],
        {"n": 2},
        {"edges": []},
        {"n": 2, "edges": [], "extra": 1},
        {"n": True, "edges": []},
        {"n": 2, "edges": [[0, 1, 2]]},
        {"n": 2, "edges": [[0, True]]},
        {"n": 2, "edges": [[0, "1"]]},
        {"n": 2, "edges": "nope"},
        {"n": 2, "edges": [[0, 5]]},
    ]
    for obj in cases:
        with pytest.raises(InvalidGraph):
            graph_from_json_dict(obj)
