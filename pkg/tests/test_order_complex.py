from hypothesis import given, settings

from filtrated_k.order_complex import M_of, m_of, open_simplex_filter, order_complex, relative_S, strict_chains
from filtrated_k.poset import chain_poset, closed_sets, connected_lc_sets, d4_poset, locally_closed_sets, min_open, open_sets

from conftest import posets


def test_d4_order_complex_is_a_tripod():
    K = order_complex(d4_poset())
    assert K.dimension == 1
    assert sorted(K.simplices) == sorted([("1",), ("2",), ("3",), ("4",), ("1", "4"), ("2", "4"), ("3", "4")])


def test_min_and_max_of_an_edge():
    edge = ("1", "4")
    assert m_of(edge) == "1" and M_of(edge) == "4"


def test_open_interval_for_two_point_chain():
    P = chain_poset(2)
    pair = relative_S(P, {"1"}, {"2"})
    assert pair.total.simplices == {("1",), ("2",), ("1", "2")}
    assert pair.sub.simplices == {("1",), ("2",)}
    assert open_simplex_filter(P, {"1"}, {"2"}) == {("1", "2")}


def test_d4_examples():
    P = d4_poset()
    assert set(relative_S(P, {"1", "4"}, {"1"}).relative_cells()) == {("1",)}
    assert open_simplex_filter(P, {"2", "3", "4"}, {"1", "4"}) == {("4",), ("2", "4"), ("3", "4")}
    assert open_simplex_filter(P, set(), {"1"}) == frozenset()


def test_pair_of_whole_space_is_absolute():
    P = d4_poset()
    X = set(P.elements)
    pair = relative_S(P, X, X)
    assert pair.total == order_complex(P)
    assert not pair.sub.simplices


@settings(max_examples=40, deadline=None)
@given(posets())
def test_relative_cells_agree_with_min_max_filter(P):
    for Y in locally_closed_sets(P):
        for Z in locally_closed_sets(P):
            pair = relative_S(P, Y.members, Z.members)
            assert pair.sub.simplices <= pair.total.simplices
            assert set(pair.relative_cells()) == open_simplex_filter(P, Y.members, Z.members)


@settings(max_examples=40, deadline=None)
@given(posets())
def test_min_preimage_of_closed_and_max_preimage_of_closed(P):
    chains = strict_chains(P)
    faces = lambda c: {tuple(x for i, x in enumerate(c) if i != j) for j in range(len(c))} - {()}
    for C in closed_sets(P):
        members = set(C.members)
        # chains with greatest point in a closed set form a subcomplex
        M_sub = {c for c in chains if M_of(c) in members}
        assert all(faces(c) <= M_sub for c in M_sub)
    for U in open_sets(P):
        members = set(U.members)
        # chains with least point in an open set form a subcomplex
        m_sub = {c for c in chains if m_of(c) in members}
        assert all(faces(c) <= m_sub for c in m_sub)


@settings(max_examples=40, deadline=None)
@given(posets())
def test_minimal_open_sets_are_cones(P):
    for x in P.elements:
        Ux = set(min_open(P, x).members)
        K = order_complex(P, Ux).simplices
        for c in K:
            assert tuple(sorted(set(c) | {x}, key=P.linear_key)) in K


@settings(max_examples=40, deadline=None)
@given(posets())
def test_pair_of_connected_set_with_itself(P):
    for Y in connected_lc_sets(P):
        pair = relative_S(P, Y.members, Y.members)
        assert pair.total == order_complex(P, Y.members)
        assert not pair.sub.simplices
