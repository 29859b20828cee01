"""Concrete category rings: chains, the four-point space D4, its opposite and its refinement.

Chain rings are written down from closed-form composition rules.  The D4
family is presented by generators and relations and reduced to a path basis.
"""

from itertools import combinations

from .category import BasisMorphism, CategoryRing, Triangle
from .errors import ParseError, RingValidationError
from .poset import (chain_poset, components, connected_lc_sets, d4_poset, locally_closed_sets,
                    open_subsets_of, opposite, set_label)
from .quiver import Arrow, Presentation, TriangleSpec, substitute_combo


# chains ---------------------------------------------------------------------

def interval_label(a, b):
    return set_label([str(x) for x in range(a, b + 1)])


def chain_mu_exists(Y, Z):
    (a1, b1), (a2, b2) = Y, Z
    return a1 >= a2 and b1 >= b2 and a1 <= b2


def chain_delta_exists(Y, Z):
    (a1, b1), (a2, b2) = Y, Z
    return a1 < a2 and b1 < b2 and a2 - 1 <= b1


def chain_category(n):
    """Ring of natural transformations between interval functors on the n-point chain.

    Basis: mu(Y,Z) of degree 0 when Y >= Z entrywise and the intervals overlap,
    delta(Y,Z) of degree 1 when Y lies strictly left of Z without a gap.
    Composites of two even maps, or of an even and an odd one, are the basis
    element between the outer objects if it exists and zero otherwise.
    """
    P = chain_poset(n)
    intervals = [(int(Y.members[0]), int(Y.members[-1])) for Y in connected_lc_sets(P)]
    lab = {iv: interval_label(*iv) for iv in intervals}
    basis, index, identities = [], {}, {}
    for Y in intervals:
        for Z in intervals:
            if Y == Z:
                k = len(basis)
                basis.append(BasisMorphism(lab[Y], lab[Z], 0, f"id({lab[Y]})"))
                identities[lab[Y]] = k
                index[(Y, Z)] = k
            elif chain_mu_exists(Y, Z):
                index[(Y, Z)] = len(basis)
                basis.append(BasisMorphism(lab[Y], lab[Z], 0, f"mu({lab[Y]},{lab[Z]})"))
            elif chain_delta_exists(Y, Z):
                index[(Y, Z)] = len(basis)
                basis.append(BasisMorphism(lab[Y], lab[Z], 1, f"delta({lab[Y]},{lab[Z]})"))
    ends = {k: (Y, Z) for (Y, Z), k in index.items()}
    products = {}
    for f, (B, C) in ends.items():
        for g, (A, B2) in ends.items():
            if B2 != B:
                continue
            if basis[f].degree == 1 and basis[g].degree == 1:
                continue
            h = index.get((A, C))
            if h is not None and basis[h].degree == (basis[f].degree + basis[g].degree) % 2:
                products[(f, g)] = ((h, 1),)
    triangles = []
    el = lambda Y, Z: None if (Y, Z) not in index else _basis_el(basis, index[(Y, Z)])
    for (a, b) in intervals:
        for c in range(a + 1, b + 1):
            Y, U, C = (a, b), (c, b), (a, c - 1)
            triangles.append(Triangle(f"{lab[Y]}>{lab[U]}", (lab[U],), (lab[Y],), (lab[C],),
                                      [[el(U, Y)]], [[el(Y, C)]], [[el(C, U)]]))
    ring = CategoryRing(f"chain:{n}", [lab[iv] for iv in intervals], basis, products, identities,
                        poset=P, lc_sets={lab[iv]: lab_members(iv) for iv in intervals},
                        triangles=triangles)
    ring.intervals = {lab[iv]: iv for iv in intervals}
    return ring


def lab_members(iv):
    return tuple(str(x) for x in range(iv[0], iv[1] + 1))


def _basis_el(basis, k):
    from .category import Element
    b = basis[k]
    return Element(b.source, b.target, b.degree, ((k, 1),))


# D4 ---------------------------------------------------------------------------

PTS = ("1", "2", "3")


def _j4(j):
    return j + "4"


def _ij4(i, j):
    return "".join(sorted(i + j)) + "4"


def _a(kind, s, t, deg=0):
    return Arrow(f"{kind}({s},{t})", s, t, deg)


def d4_presentation():
    """Generators: the inclusion cube from 4 up to 1234, restrictions 1234 -> j and odd maps j -> 4."""
    objects = [Y.label for Y in connected_lc_sets(d4_poset())]
    arrows = [_a("i", "4", _j4(j)) for j in PTS]
    arrows += [_a("i", _j4(k), _ij4(i, j)) for i, j in combinations(PTS, 2) for k in (i, j)]
    arrows += [_a("i", _ij4(i, j), "1234") for i, j in combinations(PTS, 2)]
    arrows += [_a("r", "1234", j) for j in PTS]
    arrows += [_a("d", j, "4", 1) for j in PTS]
    i = lambda s, t: f"i({s},{t})"
    rels = []
    for a, b in combinations(PTS, 2):
        top = _ij4(a, b)
        rels.append([(1, (i("4", _j4(a)), i(_j4(a), top))), (-1, (i("4", _j4(b)), i(_j4(b), top)))])
    for k in PTS:
        tops = [_ij4(k, x) for x in PTS if x != k]
        rels.append([(1, (i(_j4(k), tops[0]), i(tops[0], "1234"))),
                     (-1, (i(_j4(k), tops[1]), i(tops[1], "1234")))])
    for a, b in combinations(PTS, 2):
        (c,) = [x for x in PTS if x not in (a, b)]
        rels.append([(1, (i(_ij4(a, b), "1234"), f"r(1234,{c})"))])
    for j in PTS:
        rels.append([(1, (f"d({j},4)", i("4", _j4(j))))])
    rels.append([(1, (f"r(1234,{j})", f"d({j},4)")) for j in PTS])
    return Presentation("d4", objects, arrows, rels)


def _first_nonzero(ring, paths):
    found = None
    for p in paths:
        e = ring.word(p)
        if not e.is_zero():
            if found is not None and ring.word(found) != e:
                raise RingValidationError(f"even paths {found} and {p} disagree")
            found = found or p
    return found


def _even_word(ring, s, t):
    if s == t:
        return [(1, ())]
    p = _first_nonzero(ring, ring.even_paths(s, t))
    return None if p is None else [(1, p)]


def d4_triangle_specs(ring):
    """Triangles for every locally closed Y and proper nonempty open U of Y.

    Components of the odd map send a point j of Y\\U to the part of U holding 4
    through d(j,4) followed by inclusion.
    """
    P = d4_poset()
    specs = []
    for Y in locally_closed_sets(P):
        for U in open_subsets_of(P, Y):
            if not U.members or len(U) == len(Y):
                continue
            C = [x for x in Y.members if x not in U.members]
            Uc = [c.label for c in components(P, U)]
            Yc = [c.label for c in components(P, Y)]
            Cc = [c.label for c in components(P, C)]

            def inside(a, b):
                return set(a) <= set(b)

            imat = [[_even_word(ring, u, y) if inside(u, y) else None for u in Uc] for y in Yc]
            rmat = [[_even_word(ring, y, c) if inside(c, y) else None for y in Yc] for c in Cc]
            dmat = []
            for u in Uc:
                row = []
                for c in Cc:
                    if "4" in u and "4" not in c:
                        up = _even_word(ring, "4", u)
                        row.append([(1, (f"d({c},4)",) + up[0][1])])
                    else:
                        row.append(None)
                dmat.append(row)
            specs.append(TriangleSpec(f"{Y.label}>{U.label}", tuple(Uc), tuple(Yc), tuple(Cc),
                                      imat, rmat, dmat))
    return specs


def d4_category():
    P = d4_poset()
    ring = d4_presentation().build(poset=P, lc_sets=_lc_map(P))
    specs = d4_triangle_specs(ring)
    ring.triangle_specs = specs
    ring.triangles = [s.realise(ring) for s in specs]
    return ring


def _lc_map(P):
    return {Y.label: Y.members for Y in connected_lc_sets(P)}


def _op_name(a):
    kind = a.name.split("(")[0]
    return f"{kind}'({a.target},{a.source})"


def d4_opposite_category():
    """Ring for the opposite space: the opposite of the D4 ring, with triangles reversed."""
    base = d4_category()
    pres = base.presentation
    rename = {name: _op_name(a) for name, a in pres.arrows.items()}
    P = opposite(d4_poset())
    ring = pres.opposite("d4op", _op_name).build(poset=P, lc_sets=_lc_map(P))
    specs = [s.opposite(rename) for s in base.triangle_specs]
    ring.triangle_specs = specs
    ring.triangles = [s.realise(ring) for s in specs]
    return ring


# refinement -------------------------------------------------------------------

NEW = "12344"

# sign with which the inclusion k4 -> ij4 factors through the new object
REFINED_SIGNS = {("1", "124"): 1, ("2", "124"): -1, ("1", "134"): -1,
                 ("3", "134"): 1, ("2", "234"): 1, ("3", "234"): -1}


def refined_substitution():
    sub = {}
    for (k, top), s in REFINED_SIGNS.items():
        sub[f"i({_j4(k)},{top})"] = [(s, (f"e({_j4(k)},{NEW})", f"p({NEW},{top})"))]
    return sub


def d4_refined_presentation():
    """D4 with an extra object through which every inclusion k4 -> ij4 factors.

    New arrows e(k4,12344) and p(12344,ij4).  Relations: the three composites
    4 -> k4 -> 12344 sum to zero, k4 -> 12344 -> ij4 vanishes when k is not in
    ij, and the three composites 12344 -> ij4 -> 1234 sum to zero.  The old
    relations are rewritten through the factorisation with the signs in
    ``REFINED_SIGNS``.
    """
    base = d4_presentation()
    sub = refined_substitution()
    objects = list(base.objects) + [NEW]
    arrows = [_a("i", "4", _j4(j)) for j in PTS]
    arrows += [_a("e", _j4(j), NEW) for j in PTS]
    arrows += [_a("p", NEW, _ij4(i, j)) for i, j in combinations(PTS, 2)]
    arrows += [a for a in base.arrows.values() if a.name not in sub and not a.name.startswith("i(4,")]
    rels = [substitute_combo(r, sub) for r in base.relations]
    rels.append([(1, (f"i(4,{_j4(j)})", f"e({_j4(j)},{NEW})")) for j in PTS])
    for a, b in combinations(PTS, 2):
        (c,) = [x for x in PTS if x not in (a, b)]
        rels.append([(1, (f"e({_j4(c)},{NEW})", f"p({NEW},{_ij4(a, b)})"))])
    rels.append([(1, (f"p({NEW},{_ij4(a, b)})", f"i({_ij4(a, b)},1234)")) for a, b in combinations(PTS, 2)])
    rels = [_collect(r) for r in rels]
    return Presentation("d4refined", objects, arrows, [r for r in rels if r])


def _collect(terms):
    acc = {}
    for c, p in terms:
        acc[p] = acc.get(p, 0) + c
    return [(c, p) for p, c in acc.items() if c]


def d4_refined_category():
    base = d4_category()
    P = d4_poset()
    ring = d4_refined_presentation().build(poset=P, lc_sets=_lc_map(P))
    sub = refined_substitution()
    specs = [s.substitute(sub) for s in base.triangle_specs]
    for k in PTS:
        a, b = [x for x in PTS if x != k]
        top = _ij4(a, b)
        odd = None
        for x in (a, b):
            cand = (f"i({top},1234)", f"r(1234,{x})", f"d({x},4)", f"i(4,{_j4(k)})")
            if not ring.word(cand).is_zero():
                odd = [(1, cand)]
                break
        specs.append(TriangleSpec(f"{NEW}>{_j4(k)}", (_j4(k),), (NEW,), (top,),
                                  [[[(1, (f"e({_j4(k)},{NEW})",))]]],
                                  [[[(1, (f"p({NEW},{top})",))]]],
                                  [[odd]]))
    ring.triangle_specs = specs
    ring.triangles = [s.realise(ring) for s in specs]
    ring.base_substitution = sub
    return ring


def refined_expected_table():
    """Hom ranks involving the new object; pairs of old objects keep their D4 values."""
    from .groups import graded
    into = {"4": graded(2), "14": graded(1), "24": graded(1), "34": graded(1),
            "124": graded(), "134": graded(), "234": graded(), "1234": graded(odd=1),
            "1": graded(odd=1), "2": graded(odd=1), "3": graded(odd=1), NEW: graded(1)}
    out_of = {"4": graded(odd=1), "14": graded(), "24": graded(), "34": graded(),
              "124": graded(1), "134": graded(1), "234": graded(1), "1234": graded(2),
              "1": graded(1), "2": graded(1), "3": graded(1), NEW: graded(1)}
    table = {}
    for Y, g in into.items():
        table[(Y, NEW)] = g
    for Z, g in out_of.items():
        table[(NEW, Z)] = g
    return table


BUILTIN_RINGS = ("chain:<n>", "d4", "d4op", "d4refined")


def ring_by_name(name):
    name = name.strip()
    if name.startswith("chain:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad chain size in {name!r}")
        return chain_category(n)
    if name == "d4":
        return d4_category()
    if name == "d4op":
        return d4_opposite_category()
    if name == "d4refined":
        return d4_refined_category()
    raise ParseError(f"unknown ring {name!r}; builtins are {', '.join(BUILTIN_RINGS)}")
