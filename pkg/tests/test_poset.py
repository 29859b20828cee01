import pytest
from hypothesis import given, settings

from filtrated_k.errors import EmptyChain, NotAPartialOrder, ParseError, UnknownElement
from filtrated_k.poset import (chain_poset, closed_sets, closure_ops, components, connected_lc_sets, d4_poset,
                               down_closure, format_poset, is_closed, is_connected, is_locally_closed,
                               is_open, locally_closed_sets, min_open, open_sets, opposite, parse_label,
                               parse_poset, up_closure)

from conftest import posets


def labels(sets):
    return [S.label for S in sets]


def test_d4_minimal_open_sets():
    P = d4_poset()
    assert min_open(P, "4").label == "4"
    assert min_open(P, "1").label == "14"
    assert min_open(P, "2").label == "24"


def test_d4_connected_locally_closed_sets():
    P = d4_poset()
    assert labels(connected_lc_sets(P)) == ["1", "2", "3", "4", "14", "24", "34", "124", "134", "234", "1234"]


def test_d4_has_all_eight_up_sets_containing_4_plus_empty():
    P = d4_poset()
    assert set(labels(open_sets(P))) == {"{}", "4", "14", "24", "34", "124", "134", "234", "1234"}


def test_chain_locally_closed_sets_are_intervals():
    P = chain_poset(3)
    assert labels(connected_lc_sets(P)) == ["1", "2", "3", "12", "23", "123"]
    assert not is_locally_closed(P, {"1", "3"})
    # {1, 3} is not convex but is still a connected subspace
    assert labels(components(P, {"1", "3"})) == ["13"]


def test_chain_needs_a_point():
    with pytest.raises(EmptyChain):
        chain_poset(0)


def test_closure_ops_on_d4():
    P = d4_poset()
    c = closure_ops(P, {"1", "4"})
    assert c.cl.label == "1234"
    assert c.cl_boundary.label == "23"
    assert c.up.label == "14"
    assert c.up_boundary.label == "{}"
    c = closure_ops(P, {"1"})
    assert (c.cl.label, c.up.label, c.up_boundary.label) == ("1", "14", "4")


def test_components_of_disconnected_set():
    P = d4_poset()
    assert labels(components(P, {"1", "2"})) == ["1", "2"]
    assert is_connected(P, {"1", "2", "4"})


def test_parse_poset_formats():
    P = parse_poset("elements 1 2 3 4\ncover 1<4, 2<4, 3<4\n")
    assert P == d4_poset()
    assert parse_poset("elements 1 2 3 4; cover 1<4, 2<4; cover 3<4  # comment") == P
    assert parse_poset(format_poset(P)) == P


def test_parse_poset_errors_report_lines():
    with pytest.raises(ParseError) as e:
        parse_poset("elements a b\ncover a<<b")
    assert e.value.line == 2
    with pytest.raises(UnknownElement):
        parse_poset("elements a b\ncover a<c")
    with pytest.raises(NotAPartialOrder):
        parse_poset("elements a b\ncover a<b, b<a")
    with pytest.raises(ParseError):
        parse_poset("cover a<b")
    with pytest.raises(ParseError):
        parse_poset("elements a a")


def test_multicharacter_labels_use_braces():
    P = parse_poset("elements x10 y\ncover x10<y")
    assert up_closure(P, {"x10"}).label == "{x10,y}"
    assert parse_label(P, "{x10,y}").members == up_closure(P, {"x10"}).members


def test_opposite_swaps_open_and_closed():
    P = d4_poset()
    Q = opposite(P)
    assert sorted(labels(open_sets(Q))) == sorted(labels(closed_sets(P)))


@settings(max_examples=60, deadline=None)
@given(posets())
def test_open_closed_locally_closed_properties(P):
    opens = open_sets(P)
    closeds = closed_sets(P)
    assert len(opens) == len(closeds)
    for U in opens:
        assert is_open(P, U.members)
        assert is_closed(P, set(P.elements) - set(U.members))
    lc = {frozenset(S.members) for S in locally_closed_sets(P)}
    # locally closed sets are exactly intersections of an open and a closed set
    inter = {frozenset(set(U.members) & set(C.members)) for U in opens for C in closeds}
    assert lc == {m for m in inter if m}
    for x in P.elements:
        assert min_open(P, x).members == up_closure(P, {x}).members
        assert set(down_closure(P, {x}).members) == {y for y in P.elements if P.le(y, x)}


@settings(max_examples=60, deadline=None)
@given(posets())
def test_components_partition(P):
    for S in locally_closed_sets(P):
        parts = components(P, S.members)
        union = set()
        for c in parts:
            assert is_connected(P, c.members)
            assert not union & set(c.members)
            union |= set(c.members)
        assert union == set(S.members)
