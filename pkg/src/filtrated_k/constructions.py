"""Named modules and maps: the non-free exact module over D4, its torsion quotients and lift."""

from .errors import ObjectMismatch
from .module import Module, cokernel, free_module, hom_from_free, quotient_mod_k, ring_map_restrict
from .groups import Presented
from .rings import NEW, d4_category, d4_refined_category


def element_vector(F, k, e):
    """Coordinates in F of ``e`` applied to the k-th generator (``e`` starts at that generator's object)."""
    Y, s = F.free_spec[k]
    if e.source != Y:
        raise ObjectMismatch(f"morphism starts at {e.source}, generator lives at {Y}")
    key = (e.target, (s + e.degree) % 2)
    pos = F.gen_pos[key]
    v = [0] * len(F.gens[key])
    for b, c in e.terms:
        v[pos[(k, b)]] += c
    return v


def free_map(F1, F0, images, shift=0):
    """Map of free modules: ``images[k1]`` lists pairs ``(k0, element)`` for the k1-th generator."""
    vecs = []
    for k1, (Y1, s1) in enumerate(F1.free_spec):
        key = (Y1, (s1 + shift) % 2)
        v = [0] * len(F0.gens[key])
        for k0, e in images[k1]:
            w = element_vector(F0, k0, e)
            v = [a + b for a, b in zip(v, w)]
        vecs.append(v)
    return hom_from_free(F1, F0, vecs, shift)


TOPS = ("124", "134", "234")


def counterexample(ring=None):
    """The cokernel M of ``j: P_1234 -> P_124 + P_134 + P_234`` over the D4 ring.

    ``j`` sends the generator to the sum of the three inclusions into 1234.
    Returns ``(M, j, projection)``.
    """
    R = ring or d4_category()
    P0 = free_module(R, [(t, 0) for t in TOPS], "P0")
    P1 = free_module(R, [("1234", 0)], "P1234")
    j = free_map(P1, P0, [[(k, R.element(f"i({t},1234)")) for k, t in enumerate(TOPS)]])
    M, proj = cokernel(j, "M")
    return M, j, proj


def counterexample_mod(k, ring=None):
    M, _, _ = counterexample(ring)
    Mk, _ = quotient_mod_k(M, k, f"M/{k}")
    return Mk


def d4_basis_images(d4, refined):
    """Images of the D4 basis in the refined ring, through the factorised inclusions."""
    from .quiver import substitute_combo
    sub = refined.base_substitution
    return [refined.combo(substitute_combo([(1, d4.basis_paths[k])], sub), b.source, b.target, b.degree)
            for k, b in enumerate(d4.basis)]


def refined_lift(refined=None):
    """The representable module of the new object, the lift of M to the refined ring."""
    Rp = refined or d4_refined_category()
    return free_module(Rp, [(NEW, 0)], "M'")


def lift_restriction(d4=None, refined=None):
    """Restriction of the lift to the D4 ring and the map from ``P_124 + P_134 + P_234``.

    The map sends the three generators to the projections of the new object
    onto 124, 134 and 234.
    """
    R = d4 or d4_category()
    Rp = refined or d4_refined_category()
    lift = refined_lift(Rp)
    res = ring_map_restrict(lift, R, d4_basis_images(R, Rp), "M' restricted")
    P0 = free_module(R, [(t, 0) for t in TOPS], "P0")
    vecs = []
    for t in TOPS:
        e = Rp.word((f"p({NEW},{t})",))
        vecs.append(element_vector(lift, 0, e))
    phi = hom_from_free(P0, res, vecs)
    return res, phi, P0


def simple_module(ring, obj, parity=0, group=None, name=None):
    """Module with a single nonzero slot (default Z); every non-identity morphism acts by zero."""
    G = group or Presented.free(1)
    return Module(ring, {(obj, parity % 2): G}, {}, name or f"S[{obj}]")
