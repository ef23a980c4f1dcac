import itertools

import pytest

from mtclab import (
    Method,
    SameVertex,
    SimpleGraph,
    UnsupportedBound,
    WitnessKind,
    adjacent_fast,
    adjacent_oracle,
    competes,
    competition_graph,
    enumerate_tournaments,
    fixture,
    generic_ij_graph,
    one_two_competes,
    random_tournament,
    witness,
)
from mtclab.competition import exclusive_out_conditions, witness_is_valid

from oracles import c12_edges

EXHAUSTIVE = [[1, 1, 1], [2, 1, 1], [2, 2, 1], [1, 1, 1, 1]]


def _graph(ids, edges):
    return SimpleGraph(ids, [e.split("-") for e in edges])


@pytest.fixture(scope="module")
def fx():
    return {n: fixture(n) for n in ("T3", "STAR5", "SINK4")}


def test_competes_examples(fx):
    assert competes(fx["SINK4"], "v", "w").target == "s"
    assert competes(fx["T3"], "a", "b") is None
    assert competes(fx["STAR5"], "u1", "u2") is None


def test_one_two_examples(fx):
    wit = one_two_competes(fx["SINK4"], "u", "w")
    assert wit.kind is WitnessKind.ONE_TWO_STEP
    assert wit.target == "s" and wit.path == ("u", "v", "s")
    assert one_two_competes(fx["T3"], "a", "b") is None
    assert one_two_competes(fx["STAR5"], "u1", "u2") is None


def test_adjacency_examples(fx):
    assert adjacent_oracle(fx["SINK4"], "u", "w") is True
    assert adjacent_oracle(fx["T3"], "a", "b") is False
    assert adjacent_oracle(fx["STAR5"], "x", "u1") is True
    assert adjacent_fast(fx["T3"], "a", "b") is False
    assert adjacent_fast(fx["STAR5"], "u1", "u3") is False
    assert adjacent_fast(fx["STAR5"], "x", "u2") is True


def test_same_vertex_errors(fx):
    for fn in (competes, one_two_competes, adjacent_oracle, adjacent_fast):
        with pytest.raises(SameVertex):
            fn(fx["T3"], "a", "a")


@pytest.mark.parametrize("method", list(Method))
def test_fixture_graphs(fx, method):
    assert competition_graph(fx["T3"], method) == SimpleGraph("abc")
    star = _graph(fx["STAR5"].vertex_ids, ["x-u1", "x-u2", "x-u3", "x-u4"])
    assert competition_graph(fx["STAR5"], method) == star
    tri = _graph(fx["SINK4"].vertex_ids, ["u-v", "u-w", "v-w"])
    assert competition_graph(fx["SINK4"], method) == tri


def test_generic_ij_examples(fx):
    star = _graph(fx["STAR5"].vertex_ids, ["x-u1", "x-u2", "x-u3", "x-u4"])
    assert generic_ij_graph(fx["STAR5"], 1, 1) == star
    assert generic_ij_graph(fx["T3"], 1, 1).edge_count() == 0
    assert generic_ij_graph(fx["SINK4"], 1, 1).edges == {frozenset("vw"), frozenset("uv")}
    assert generic_ij_graph(fx["SINK4"], 1, 2) == competition_graph(fx["SINK4"])
    for bad in [(0, 1), (2, 1), (1, 3), (3, 3)]:
        with pytest.raises(UnsupportedBound):
            generic_ij_graph(fx["T3"], *bad)


def _corpus():
    for sizes in EXHAUSTIVE:
        yield from enumerate_tournaments(sizes)
    for s in range(60):
        yield random_tournament([2, 2, 2, 1][: 3 + s % 2], s)


def test_oracle_matches_networkx_definition():
    for t in _corpus():
        assert competition_graph(t, Method.ORACLE).edges == c12_edges(t)


def test_generic_11_matches_networkx_definition():
    for sizes in EXHAUSTIVE[:3]:
        for t in enumerate_tournaments(sizes):
            assert generic_ij_graph(t, 1, 1).edges == c12_edges(t, 1, 1)


def test_properties_on_corpus():
    for t in _corpus():
        g = competition_graph(t)
        c11 = generic_ij_graph(t, 1, 1)
        assert c11.edges <= g.edges
        for i in range(t.n):
            if not t.out_mask(i):
                assert g.adj_mask(i) == 0
        for u, v in itertools.combinations(t.vertex_ids, 2):
            assert adjacent_fast(t, u, v) == adjacent_fast(t, v, u)
            wit = witness(t, u, v)
            # exact-length-2 (1,2)-competition plus competition gives the <= form
            assert (wit is not None) == g.adjacent(u, v)
            if wit is not None:
                assert witness_is_valid(t, u, v, wit)
            two = one_two_competes(t, u, v)
            if two is not None:
                assert witness_is_valid(t, u, v, two)


def test_witness_replay_rejects_forgeries(fx):
    t = fx["SINK4"]
    wit = one_two_competes(t, "u", "w")
    forged = type(wit)(wit.kind, "s", ("u", "w", "s"))
    assert not witness_is_valid(t, "u", "w", forged)
    assert not witness_is_valid(t, "u", "w", type(wit)(WitnessKind.COMMON_OUT_NEIGHBOR, "s"))


def test_literal_three_conditions_are_not_a_characterization():
    """Without the common-out-neighbour escape the three conditions miss edges.

    u -> v, u -> w, v -> w with v, w in different parts: u, v compete through w,
    yet N+(v) = {w} sits in w's part and N+(u) = {v, w} fits in that part plus v.
    """
    t = next(t for t in enumerate_tournaments([1, 1, 1])
             if t.digraph.arcs == {("p1v1", "p2v1"), ("p1v1", "p3v1"), ("p2v1", "p3v1")})
    i, j = t.index("p1v1"), t.index("p2v1")
    assert adjacent_oracle(t, "p1v1", "p2v1")
    assert not exclusive_out_conditions(t, i, j)
    assert adjacent_fast(t, "p1v1", "p2v1")

    mismatches = 0
    for sizes in EXHAUSTIVE:
        for t in enumerate_tournaments(sizes):
            for i, j in itertools.combinations(range(t.n), 2):
                if t.out_mask(i) and t.out_mask(j):
                    oracle = adjacent_oracle(t, t.vertex_ids[i], t.vertex_ids[j])
                    mismatches += exclusive_out_conditions(t, i, j) != oracle
                    competes_ = bool(t.out_mask(i) & t.out_mask(j))
                    assert (competes_ or exclusive_out_conditions(t, i, j)) == oracle
    assert mismatches > 0
