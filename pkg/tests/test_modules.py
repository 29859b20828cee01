import pytest
from hypothesis import given, settings, strategies as st

from filtrated_k.constructions import (counterexample, counterexample_mod, lift_restriction, refined_lift,
                                       simple_module)
from filtrated_k.errors import ModuleValidationError, NotAnExtension, ResolutionTruncated
from filtrated_k.groups import Presented, parse_graded
from filtrated_k.homological import (ext, free_resolution, hom_modules, is_exact, is_free, nil_equals_chain_kernels,
                                     nil_submodule, ss_groups, ss_part, tor1_ss, two_out_of_three_check,
                                     verify_resolution)
from filtrated_k.module import (Module, cokernel, direct_sum, free_module, hom_from_free, is_injective,
                                is_surjective, kernel, quotient_mod_k, shift, validate_module)
from filtrated_k.sampling import make_rng, random_cokernel, random_exact_module, random_free_map, random_module

seeds = st.integers(0, 10_000)


def ring_for(name, d4, d4op, refined, chains):
    return {"d4": d4, "d4op": d4op, "d4refined": refined, "chain:3": chains[3], "chain:4": chains[4]}[name]


RINGS = ["chain:3", "chain:4", "d4", "d4op", "d4refined"]


@pytest.mark.parametrize("name", RINGS)
def test_representables_are_free_and_exact(name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    for Y in R.objects:
        for s in (0, 1):
            P = free_module(R, [(Y, s)])
            validate_module(P)
            for Z in R.objects:
                assert P.structure(Z) == R.hom_rank(Y, Z).shift(s)
            assert is_exact(P).exact, (Y, s)
            fr = is_free(P)
            assert fr.is_free and fr.spec == [(Y, s)]


@pytest.mark.parametrize("name", RINGS)
def test_yoneda(name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    rng = make_rng(3)
    N = random_module(R, rng)
    for Y in R.objects[:4]:
        assert hom_modules(free_module(R, [(Y, 0)]), N).group == N.structure(Y)


def test_counterexample_structure(d4):
    M, j, proj = counterexample(d4)
    assert is_injective(j)
    assert is_surjective(proj)
    assert is_exact(M).exact
    assert M.has_free_slots()
    fr = is_free(M)
    assert not fr.is_free and "Tor_1" in fr.reason
    assert tor1_ss(M) == parse_graded("Z[0]")
    ss = ss_groups(M)
    assert [o for o, g in ss.items() if not g.is_zero()] == ["124", "134", "234"]


def test_counterexample_has_no_splitting(d4):
    # no map P124 + P134 + P234 <- P1234 splits j, matching the failure of freeness
    M, j, _ = counterexample(d4)
    hom = hom_modules(j.target, j.source)
    assert hom.group.even.is_zero()


def test_torsion_quotients_resolve_in_length_two(d4):
    P = free_module(d4, [("1234", 0)])
    for k in (2, 5):
        Mk = counterexample_mod(k, d4)
        res = free_resolution(Mk)
        assert res.complete and res.length == 2 and verify_resolution(res, Mk)
        assert ext(Mk, P, 2, resolution=res) == parse_graded(f"Z/{k}[0]")
        assert ext(Mk, P, 3, resolution=res).is_zero()
        with pytest.raises(ResolutionTruncated):
            ext(Mk, P, 2, resolution=free_resolution(Mk, max_length=1))


def test_lift_restricts_to_counterexample(d4, refined):
    res, phi, P0 = lift_restriction(d4, refined)
    M, j, _ = counterexample(d4)
    assert is_surjective(phi)
    K, _ = kernel(phi)
    assert K.structures() == j.source.structures()
    assert res.structures() == M.structures()
    lift = refined_lift(refined)
    assert is_exact(lift).exact and is_free(lift).is_free


def test_two_out_of_three_on_the_resolution_of_m(d4):
    M, j, proj = counterexample(d4)
    rep = two_out_of_three_check(j, proj)
    assert rep.exact == (True, True, True) and rep.consistent
    with pytest.raises(NotAnExtension):
        two_out_of_three_check(proj, proj)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, name=st.sampled_from(["chain:3", "chain:4", "d4", "d4refined"]))
def test_two_out_of_three_on_random_extensions(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    rng = make_rng(seed)
    A = random_module(R, rng)
    B = random_module(R, rng)
    S, incs, projs = direct_sum(A, B)
    rep = two_out_of_three_check(incs[0], projs[1])
    assert rep.consistent
    assert rep.exact[1] == (rep.exact[0] and rep.exact[2])


@settings(max_examples=25, deadline=None)
@given(seed=seeds, name=st.sampled_from(["chain:3", "d4", "d4op", "d4refined"]))
def test_cokernels_of_injective_free_maps_are_exact(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    M = random_cokernel(R, make_rng(seed), injective=True)
    assert is_exact(M).exact


@settings(max_examples=30, deadline=None)
@given(seed=seeds, name=st.sampled_from(["chain:2", "chain:3", "chain:4"]))
def test_freeness_criterion_on_chains(seed, name, chains):
    R = chains[int(name[6:])]
    M = random_module(R, make_rng(seed))
    fr = is_free(M)
    assert fr.is_free == (is_exact(M).exact and M.has_free_slots())


@settings(max_examples=30, deadline=None)
@given(seed=seeds, name=st.sampled_from(["chain:2", "chain:3", "chain:4"]))
def test_exact_iff_tor_vanishes_on_chains(seed, name, chains):
    M = random_module(chains[int(name[6:])], make_rng(seed))
    assert is_exact(M).exact == tor1_ss(M).is_zero()


@settings(max_examples=30, deadline=None)
@given(seed=seeds, name=st.sampled_from(["chain:2", "chain:3", "chain:4"]))
def test_nil_part_is_kernel_of_longest_map(seed, name, chains):
    M = random_exact_module(chains[int(name[6:])], make_rng(seed))
    assert nil_equals_chain_kernels(M)


@settings(max_examples=25, deadline=None)
@given(seed=seeds, name=st.sampled_from(RINGS))
def test_nakayama(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    M = random_module(R, make_rng(seed))
    ss = ss_groups(M)
    assert all(g.is_zero() for g in ss.values()) == M.is_zero()
    Q, _ = ss_part(M)
    assert Q.structures() == ss
    N, _ = nil_submodule(M)
    validate_module(N)


@settings(max_examples=20, deadline=None)
@given(seed=seeds, name=st.sampled_from(RINGS))
def test_hom_agrees_with_ext_zero(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    rng = make_rng(seed)
    A = random_module(R, rng)
    B = random_module(R, rng)
    assert hom_modules(A, B).group == ext(A, B, 0)


@settings(max_examples=20, deadline=None)
@given(seed=seeds, name=st.sampled_from(RINGS))
def test_resolutions_are_exact(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    M = random_module(R, make_rng(seed))
    res = free_resolution(M, max_length=5)
    if res.complete:
        assert verify_resolution(res, M)
    assert all(is_free(F).is_free for F in res.modules)


@settings(max_examples=20, deadline=None)
@given(seed=seeds, name=st.sampled_from(["d4refined", "chain:3", "chain:4"]))
def test_exact_modules_resolve_in_length_one(seed, name, d4, d4op, refined, chains):
    R = ring_for(name, d4, d4op, refined, chains)
    M = random_exact_module(R, make_rng(seed))
    res = free_resolution(M, max_length=3)
    assert res.complete and res.length <= 1


def test_constructors(d4):
    M, _, _ = counterexample(d4)
    S, incs, projs = direct_sum(M, M)
    assert S.structure("1234") == parse_graded("Z^4[0]")
    assert is_exact(S).exact and not is_free(S).is_free
    T = shift(M)
    assert T.structure("4") == parse_graded("Z[0]")
    assert shift(T).structures() == M.structures()
    Q, _ = quotient_mod_k(M, 4)
    assert Q.structure("1234") == parse_graded("Z/4[0] + Z/4[0]")
    K, _ = kernel(projs[0])
    assert K.structures() == M.structures()


def test_bad_action_is_rejected(d4):
    slots = {("14", 0): Presented.cyclic([2]), ("124", 0): Presented.free(1)}
    k = d4.index_of("i(14,124)")
    M = Module(d4, slots, {(k, 0): [[1]]})
    with pytest.raises(ModuleValidationError):
        validate_module(M)


def test_hom_generators_are_homomorphisms(d4):
    M, j, proj = counterexample(d4)
    P = free_module(d4, [("1234", 0)])
    res = hom_modules(P, M)
    assert res.group == M.structure("1234")
    from filtrated_k.module import validate_hom
    for h in res.generators:
        validate_hom(h)


def test_random_free_map_shapes(chains):
    rng = make_rng(0)
    R = chains[3]
    F1 = free_module(R, [("1", 0), ("23", 1)])
    F0 = free_module(R, [("123", 0)])
    h = random_free_map(F1, F0, rng)
    Q, _ = cokernel(h)
    validate_module(Q)


def test_simple_modules(chains, d4):
    S = simple_module(chains[2], "12")
    assert not is_exact(S).exact
    assert not tor1_ss(S).is_zero()
    assert hom_from_free(free_module(d4, [("4", 0)]), simple_module(d4, "4"), [[1]]).is_zero() is False
