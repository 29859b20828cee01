import pytest

from filtrated_k.category import compose, nil_index, nil_ss_split, odd_odd_vanishes, validate_ring
from filtrated_k.errors import ParseError, RingValidationError
from filtrated_k.modfile import parse_module
from filtrated_k.poset import d4_poset
from filtrated_k.reference import chain_law, d4_table
from filtrated_k.rings import (NEW, REFINED_SIGNS, _lc_map, chain_category, chain_delta_exists, chain_mu_exists,
                               d4_presentation, d4_triangle_specs, refined_expected_table, ring_by_name)


def test_chain_basis_matches_interval_law(chains):
    for n in range(1, 6):
        R = chains[n]
        for Y, iy in R.intervals.items():
            for Z, iz in R.intervals.items():
                want = chain_law(iy, iz)
                assert R.hom_rank(Y, Z) == want
                assert chain_mu_exists(iy, iz) == (want.even.free_rank == 1)
                assert chain_delta_exists(iy, iz) == (want.odd.free_rank == 1)


def test_chain_rings_validate(chains):
    for n in range(1, 6):
        rep = validate_ring(chains[n])
        assert rep.ok, rep.failures[:3]


def test_chain_products(chains):
    R = chains[3]
    mu = R.element("mu(123,12)")
    mu2 = R.element("mu(12,1)")
    assert compose(R, mu2, mu) == R.element("mu(123,1)")
    # restriction 12 -> 1 followed by the boundary 1 -> 2 is the odd map 12 -> 2 allowed by the law
    prod = R.compose(R.element("delta(1,2)"), mu2)
    assert prod.degree == 1
    assert (chain_law(R.intervals["12"], R.intervals["2"]).odd.free_rank == 1) == (not prod.is_zero())
    assert odd_odd_vanishes(R)


@pytest.mark.parametrize("name", ["d4", "d4op"])
def test_d4_rings_validate(name, d4, d4op):
    R = {"d4": d4, "d4op": d4op}[name]
    rep = validate_ring(R)
    assert rep.ok, rep.failures[:3]
    assert odd_odd_vanishes(R)
    assert nil_index(R) == 5


def test_d4_table_from_ring(d4):
    for (Y, Z), g in d4_table().items():
        assert d4.hom_rank(Y, Z) == g


def test_opposite_ring_transposes_the_table(d4, d4op):
    for Y in d4.objects:
        for Z in d4.objects:
            assert d4op.hom_rank(Z, Y) == d4.hom_rank(Y, Z)


def test_three_path_relation(d4):
    paths = [d4.compose(d4.element(f"d({j},4)"), d4.element(f"r(1234,{j})")) for j in "123"]
    assert all(not p.is_zero() for p in paths)
    assert d4.add(*paths).is_zero()
    # any two of the three are independent
    assert not d4.add(paths[0], paths[1]).is_zero()


def test_cube_squares_commute(d4):
    w = d4.word
    assert w(("i(4,14)", "i(14,124)")) == w(("i(4,24)", "i(24,124)"))
    assert w(("i(14,124)", "i(124,1234)")) == w(("i(14,134)", "i(134,1234)"))


def test_nil_split(d4, chains):
    split = nil_ss_split(d4)
    assert len(split.ss_basis) == len(d4.objects)
    assert len(split.nil_basis) + len(split.ss_basis) == len(d4.basis)
    assert nil_ss_split(chains[4]).nil_index == 4
    # the index is a property of the ring, not of the run
    assert nil_index(chain_category(4)) == nil_index(chains[4])


def test_refined_ring(refined):
    rep = validate_ring(refined, refined_expected_table())
    assert rep.ok, rep.failures[:3]
    assert nil_index(refined) == 5
    assert refined.hom_rank("4", NEW).even.free_rank == 2
    assert len(REFINED_SIGNS) == 6


def test_refined_sum_of_three_maps_from_4_vanishes(refined):
    total = refined.add(*[refined.word(("i(4,%s4)" % j, "e(%s4,%s)" % (j, NEW))) for j in "123"])
    assert total.is_zero()


def test_refined_keeps_old_homs(refined, d4):
    for Y in d4.objects:
        for Z in d4.objects:
            assert refined.hom_rank(Y, Z) == d4.hom_rank(Y, Z)


def test_ring_lookup():
    assert ring_by_name("chain:3").name.startswith("chain")
    with pytest.raises(ParseError):
        ring_by_name("d5")
    with pytest.raises(ParseError):
        ring_by_name("chain:x")


def _faulty_presentation():
    """D4 with one square of the inclusion cube made to anticommute."""
    pres = d4_presentation()
    (c1, p1), (c2, p2) = pres.relations[0]
    pres.relations[0] = [(c1, p1), (-c2, p2)]
    return pres


def test_sign_flip_is_caught_by_the_ring_builder():
    # the topological table does not see the sign at all
    P = d4_poset()
    from filtrated_k.cohomology import hom_group
    lc = _lc_map(P)
    for (Y, Z), g in d4_table().items():
        assert hom_group(P, lc[Y], lc[Z]) == g
    # one anticommuting square leaves 2-torsion among paths 4 -> 1234
    with pytest.raises(RingValidationError, match="hom\\(4,1234\\)"):
        _faulty_presentation().build(poset=P, lc_sets=lc)
