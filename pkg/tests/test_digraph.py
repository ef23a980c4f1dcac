import pytest

from mtclab import Digraph, InvalidExclusion, UnsupportedBound, VertexNotFound, fixture
from mtclab.digraph import iter_bits, lowest_bit


@pytest.fixture
def t3():
    return fixture("T3").digraph


@pytest.fixture
def star5():
    return fixture("STAR5").digraph


@pytest.fixture
def sink4():
    return fixture("SINK4").digraph


def test_out_neighbors_examples(t3, star5, sink4):
    assert t3.out_neighbors("a") == {"b"}
    assert star5.out_neighbors("x") == {"u1", "u2", "u3", "u4"}
    assert sink4.out_neighbors("s") == set()
    assert star5.in_neighbors("u1") == {"u4", "x"}


def test_unknown_vertex(t3):
    with pytest.raises(VertexNotFound):
        t3.out_neighbors("z")
    with pytest.raises(VertexNotFound):
        t3.delete_vertex("z")


def test_distance_examples(t3, star5):
    assert t3.distance_at_most("a", "c", "b", 2) is False
    assert t3.distance_at_most("a", "c", None, 2) is True
    assert star5.distance_at_most("x", "u2", "u3", 1) is True
    assert t3.distance_at_most("a", "a", None, 1) is True


def test_distance_errors(t3):
    with pytest.raises(UnsupportedBound):
        t3.distance_at_most("a", "b", None, 3)
    with pytest.raises(UnsupportedBound):
        t3.distance_at_most("a", "b", None, 0)
    with pytest.raises(InvalidExclusion):
        t3.distance_at_most("a", "b", "a", 1)
    with pytest.raises(InvalidExclusion):
        t3.distance_at_most("a", "b", "b", 2)


def test_delete_vertex_examples(t3, star5, sink4):
    d = t3.delete_vertex("b")
    assert d.vertex_ids == ("a", "c") and d.arcs == {("c", "a")}
    assert star5.delete_vertex("x").arcs == {("u1", "u3"), ("u3", "u2"), ("u2", "u4"), ("u4", "u1")}
    assert sink4.delete_vertex("s").arcs == {("u", "v"), ("u", "w"), ("v", "w")}
    assert ("a", "b") in t3.arcs  # value semantics


@pytest.mark.parametrize("name", ["T3", "STAR5", "SINK4"])
def test_degree_sums_and_deletion(name):
    d = fixture(name).digraph
    assert sum(d.out_degree(v) for v in d.vertex_ids) == d.arc_count() == len(d.arcs)
    for v in d.vertex_ids:
        assert len(d.out_neighbors(v)) == d.out_degree(v)
        assert d.delete_vertex(v).arcs == {a for a in d.arcs if v not in a}


@pytest.mark.parametrize("name", ["T3", "STAR5", "SINK4"])
def test_bound_one_is_arc_membership_and_monotone(name):
    d = fixture(name).digraph
    ids = d.vertex_ids
    for u in ids:
        for w in ids:
            for x in [None] + [z for z in ids if z not in (u, w)]:
                one = d.distance_at_most(u, w, x, 1)
                assert one == (u == w or (u, w) in d.arcs)
                assert not one or d.distance_at_most(u, w, x, 2)


def test_malformed_digraphs():
    with pytest.raises(ValueError):
        Digraph(["a", "b"], [("a", "a")])
    with pytest.raises(VertexNotFound):
        Digraph(["a", "b"], [("a", "c")])
    with pytest.raises(ValueError):
        Digraph(["a", "a"], [])


def test_bit_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert lowest_bit(0b1000) == 3
