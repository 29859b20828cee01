"""Homological algebra for modules over a category ring.

The semisimple part of the ring is spanned by the identities and the nil
ideal by every other basis morphism.  ``M_ss`` is M modulo the image of the
nil ideal, free covers are built on lifts of a Smith basis of ``M_ss``, and
``Tor_1`` of the semisimple quotient is read off from the first syzygy.
"""

from dataclasses import dataclass, field

from . import intmat
from .errors import NotAnExtension, ResolutionTruncated, SpecMismatch
from .groups import (AbelianGroup, GradedAbelianGroup, Presented, columns, direct_sum as group_sum,
                     homology, is_exact_at, kernel_lattice, subquotient)
from .module import (PARITIES, ModuleHom, cokernel, free_module, generator_position, hom_from_free,
                     kernel, quotient, submodule)


# nil and semisimple parts -------------------------------------------------------

def nil_lattice(M, obj, p):
    """Generators of ``nil * M`` inside ``M(obj)_p`` together with the relations."""
    R = M.ring
    vecs = []
    for k in R.nil_basis():
        b = R.basis[k]
        if b.target != obj:
            continue
        A = M.actions.get((k, (p - b.degree) % 2))
        if A:
            vecs.extend(columns(A, M.n(b.source, p - b.degree)))
    G = M.slot(obj, p)
    return intmat.hnf(vecs + list(G.rels), G.ngens)


def nil_lattices(M):
    return {(o, p): nil_lattice(M, o, p) for o in M.ring.objects for p in PARITIES}


def nil_submodule(M):
    """``nil * M`` as a submodule, with its inclusion."""
    return submodule(M, nil_lattices(M), f"nil*{M.name}")


def ss_part(M):
    """``M_ss = M / nil * M`` with the projection."""
    return quotient(M, nil_lattices(M), f"{M.name}_ss")


def ss_groups(M):
    out = {}
    for o in M.ring.objects:
        gs = []
        for p in PARITIES:
            G = M.slot(o, p)
            gs.append(subquotient(intmat.identity(G.ngens), nil_lattice(M, o, p), G.ngens).group)
        out[o] = GradedAbelianGroup(*gs)
    return out


# exactness ----------------------------------------------------------------------

@dataclass
class ExactnessReport:
    failures: list = field(default_factory=list)   # (triangle, position, parity)
    checked: int = 0

    @property
    def exact(self):
        return not self.failures

    def __bool__(self):
        return self.exact


def _block(M, mat, rows, cols, p, deg):
    """Group map on direct sums over components given by a matrix of ring elements of degree ``deg``."""
    blocks = [[None if e is None else M.act_elem(e, p) for e in row] for row in mat]
    return intmat.block_matrix(blocks, [M.n(y, p + deg) for y in rows], [M.n(x, p) for x in cols])


def triangle_maps(M, T, p):
    """Groups and maps ``U_p -> Y_p -> C_p -> U_{p+1} -> Y_{p+1}`` for a triangle."""
    U = [group_sum([M.slot(u, q) for u in T.U]) for q in (p, p + 1)]
    Y = [group_sum([M.slot(y, q) for y in T.Y]) for q in (p, p + 1)]
    C = group_sum([M.slot(c, p) for c in T.C])
    I0 = _block(M, T.i, T.Y, T.U, p, 0)
    R0 = _block(M, T.r, T.C, T.Y, p, 0)
    D0 = _block(M, T.d, T.U, T.C, p, 1)
    I1 = _block(M, T.i, T.Y, T.U, p + 1, 0)
    return U, Y, C, I0, R0, D0, I1


def is_exact(M):
    """Check exactness of every distinguished six-term sequence of the ring on M."""
    rep = ExactnessReport()
    for T in M.ring.triangles:
        for p in PARITIES:
            U, Y, C, I0, R0, D0, I1 = triangle_maps(M, T, p)
            checks = (("Y", I0, U[0], Y[0], R0, C),
                      ("C", R0, Y[0], C, D0, U[1]),
                      ("U", D0, C, U[1], I1, Y[1]))
            for pos, A_in, G_in, G, A_out, G_out in checks:
                rep.checked += 1
                if not is_exact_at(A_in, G_in, G, A_out, G_out):
                    rep.failures.append((T.name, pos, p))
    return rep


# covers, Tor and freeness -------------------------------------------------------

def free_cover(M):
    """Free module on lifts of a Smith basis of ``M_ss`` and its map onto M."""
    spec, elements = [], []
    for o in M.ring.objects:
        for p in PARITIES:
            G = M.slot(o, p)
            sq = subquotient(intmat.identity(G.ngens), nil_lattice(M, o, p), G.ngens)
            for v in sq.lifts:
                spec.append((o, p))
                elements.append(v)
    F = free_module(M.ring, spec)
    return F, hom_from_free(F, M, elements)


def _ss_subquotient_map(K, F, incl, o, p):
    LK = nil_lattice(K, o, p)
    LF = nil_lattice(F, o, p)
    A = incl.at(o, p)
    ker = kernel_lattice(A, Presented(K.n(o, p), tuple(map(tuple, LK))), Presented(F.n(o, p), tuple(map(tuple, LF))))
    return subquotient(ker, LK, K.n(o, p)).group


def tor1_ss_slots(M):
    """``Tor_1(ss, M)`` slot by slot, as kernel of ``K_ss -> F_ss`` for the first syzygy K."""
    F, eps = free_cover(M)
    K, incl = kernel(eps)
    out = {}
    for o in M.ring.objects:
        out[o] = GradedAbelianGroup(*[_ss_subquotient_map(K, F, incl, o, p) for p in PARITIES])
    return out


def tor1_ss(M):
    total = GradedAbelianGroup()
    for g in tor1_ss_slots(M).values():
        total = total + g
    return total


@dataclass
class FreenessResult:
    is_free: bool
    spec: list = None
    iso: ModuleHom = None
    reason: str = ""


def is_free(M):
    """Decide freeness through ``M_ss`` and ``Tor_1``; on success return the isomorphism."""
    ss = ss_groups(M)
    for o, g in ss.items():
        if not g.is_free():
            return FreenessResult(False, reason=f"M_ss({o}) = {g} has torsion")
    tor = tor1_ss(M)
    if not tor.is_zero():
        return FreenessResult(False, reason=f"Tor_1(ss, M) = {tor}")
    F, eps = free_cover(M)
    if not (kernel(eps)[0].is_zero() and cokernel(eps)[0].is_zero()):
        raise SpecMismatch("free cover of a module with free M_ss and vanishing Tor_1 is not an isomorphism")
    return FreenessResult(True, F.free_spec, eps, "")


# resolutions --------------------------------------------------------------------

@dataclass
class FreeResolution:
    modules: list          # F_0, F_1, ...
    maps: list             # d_i: F_i -> F_{i-1} for i >= 1
    augmentation: ModuleHom
    complete: bool

    @property
    def length(self):
        return len(self.modules) - 1

    def specs(self):
        return [F.free_spec for F in self.modules]


def free_resolution(M, max_length=8):
    """Free resolution by iterated covers of kernels, stopping once a kernel vanishes."""
    F0, eps = free_cover(M)
    mods, maps = [F0], []
    K, incl = kernel(eps)
    while not K.is_zero():
        if len(mods) - 1 >= max_length:
            return FreeResolution(mods, maps, eps, False)
        F, cov = free_cover(K)
        maps.append(incl.compose(cov))
        mods.append(F)
        K, incl = kernel(cov)
    return FreeResolution(mods, maps, eps, True)


def verify_resolution(res, M):
    """Exactness of ``... -> F_1 -> F_0 -> M -> 0`` checked slot by slot."""
    if not cokernel(res.augmentation)[0].is_zero():
        return False
    chain = [res.augmentation] + res.maps
    for a, b in zip(chain, chain[1:]):
        for o in M.ring.objects:
            for p in PARITIES:
                if not is_exact_at(b.at(o, p), b.source.slot(o, p), a.source.slot(o, p),
                                   a.at(o, p), a.target.slot(o, p)):
                    return False
    if res.complete and res.maps:
        if not kernel(res.maps[-1])[0].is_zero():
            return False
    if res.complete and not res.maps and not kernel(res.augmentation)[0].is_zero():
        return False
    return True


# Hom and Ext --------------------------------------------------------------------

def yoneda_group(F, N, t):
    """``Hom_t(F, N)`` for free F as the sum of ``N(Y_k)_{s_k + t}``."""
    return group_sum([N.slot(Y, s + t) for Y, s in F.free_spec])


def yoneda_coboundary(d, N, t):
    """Matrix of ``phi -> phi o d`` from ``Hom_t(F, N)`` to ``Hom_t(F', N)`` for ``d: F' -> F``."""
    Fp, F = d.source, d.target
    R = F.ring
    row_sizes = [N.n(Y, s + t) for Y, s in Fp.free_spec]
    col_sizes = [N.n(Y, s + t) for Y, s in F.free_spec]
    blocks = [[None] * len(col_sizes) for _ in row_sizes]
    for kp in range(len(Fp.free_spec)):
        (Yp, sp), j = generator_position(Fp, kp)
        col = [row[j] for row in d.at(Yp, sp)]
        for idx, c in enumerate(col):
            if not c:
                continue
            k, b = F.gens[(Yp, sp)][idx]
            Y, s = F.free_spec[k]
            A = N.act(b, s + t)
            cur = blocks[kp][k]
            if cur is None:
                cur = intmat.zeros(row_sizes[kp], col_sizes[k])
                blocks[kp][k] = cur
            for r in range(row_sizes[kp]):
                for q in range(col_sizes[k]):
                    cur[r][q] += c * A[r][q]
    return intmat.block_matrix(blocks, row_sizes, col_sizes)


def ext(A, B, n, max_length=8, resolution=None):
    """``Ext^n(A, B)`` graded by the degree of the maps, from a free resolution of A."""
    if n < 0:
        return GradedAbelianGroup()
    res = resolution or free_resolution(A, max(max_length, n + 1))
    if res.length < n + 1 and not res.complete:
        raise ResolutionTruncated(f"resolution stops at length {res.length}, need {n + 1}")
    if n > res.length:
        return GradedAbelianGroup()
    parts = []
    for t in PARITIES:
        G = yoneda_group(res.modules[n], B, t)
        if n + 1 <= res.length:
            G_out = yoneda_group(res.modules[n + 1], B, t)
            D_out = yoneda_coboundary(res.maps[n], B, t)
        else:
            G_out, D_out = Presented(0), intmat.zeros(0, G.ngens)
        if n >= 1:
            G_in = yoneda_group(res.modules[n - 1], B, t)
            D_in = yoneda_coboundary(res.maps[n - 1], B, t)
        else:
            G_in, D_in = Presented(0), intmat.zeros(G.ngens, 0)
        parts.append(homology(D_in, G_in, G, D_out, G_out).group)
    return GradedAbelianGroup(*parts)


@dataclass
class HomResult:
    group: GradedAbelianGroup
    generators: list       # ModuleHoms mapping to the Smith generators, both degrees


def hom_modules(A, B):
    """``Hom(A, B)`` by solving the compatibility equations directly over Z."""
    parts, gens = [], []
    for s in PARITIES:
        g, hs = _hom_degree(A, B, s)
        parts.append(g)
        gens.extend(hs)
    return HomResult(GradedAbelianGroup(*parts), gens)


def _hom_degree(A, B, s):
    R = A.ring
    var = {}
    nvar = 0
    for o in R.objects:
        for p in PARITIES:
            na, nb = A.n(o, p), B.n(o, p + s)
            if na and nb:
                var[(o, p)] = nvar
                nvar += na * nb

    def vidx(o, p, i, j):
        return var[(o, p)] + i * A.n(o, p) + j

    eqs = []          # (vector of linear forms, group whose relations it must lie in)

    # relations of A go to relations of B
    for (o, p) in var:
        GA, GB = A.slot(o, p), B.slot(o, p + s)
        for r in GA.rels:
            cols = {}
            for i in range(GB.ngens):
                lin = {}
                for j, x in enumerate(r):
                    if x:
                        lin[vidx(o, p, i, j)] = lin.get(vidx(o, p, i, j), 0) + x
                cols[i] = lin
            eqs.append(([cols[i] for i in range(GB.ngens)], GB))
    # commutation with every basis morphism
    for k, b in enumerate(R.basis):
        if R.identities.get(b.source) == k:
            continue
        for p in PARITIES:
            na = A.n(b.source, p)
            nb_t = B.n(b.target, p + b.degree + s)
            if not na or not nb_t:
                continue
            Ak = A.act(k, p)                      # A(Y)_p -> A(Z)_{p+d}
            Bk = B.act(k, p + s)                  # B(Y)_{p+s} -> B(Z)_{p+d+s}
            src_ok = (b.source, p) in var
            tgt_ok = (b.target, (p + b.degree) % 2) in var
            GB = B.slot(b.target, p + b.degree + s)
            for j in range(na):
                vec = []
                for i in range(nb_t):
                    lin = {}
                    if tgt_ok:
                        for t in range(A.n(b.target, p + b.degree)):
                            if Ak[t][j]:
                                key = vidx(b.target, (p + b.degree) % 2, i, t)
                                lin[key] = lin.get(key, 0) + Ak[t][j]
                    if src_ok:
                        for t in range(B.n(b.source, p + s)):
                            if Bk[i][t]:
                                key = vidx(b.source, p, t, j)
                                lin[key] = lin.get(key, 0) - Bk[i][t]
                    vec.append(lin)
                if any(vec):
                    eqs.append((vec, GB))
    # assemble: each equation block says  vec (a vector of linear forms) lies in rels(GB)
    wit = nvar
    rows = []
    for vec, GB in eqs:
        rel = GB.lattice
        for i, lin in enumerate(vec):
            row = dict(lin)
            for w, rv in enumerate(rel):
                if rv[i]:
                    row[wit + w] = rv[i]
            rows.append(row)
        wit += len(rel)
    ncols = wit
    dense = [[row.get(c, 0) for c in range(ncols)] for row in rows]
    ker = intmat.integer_kernel(dense, ncols) if rows else intmat.identity(ncols)
    Lam = intmat.hnf([v[:nvar] for v in ker], nvar)
    zero_maps = []
    for (o, p) in var:
        GB = B.slot(o, p + s)
        na = A.n(o, p)
        for j in range(na):
            for rv in GB.lattice:
                v = [0] * nvar
                for i in range(GB.ngens):
                    if rv[i]:
                        v[vidx(o, p, i, j)] = rv[i]
                zero_maps.append(v)
    sq = subquotient(Lam, zero_maps, nvar)
    homs = []
    for v in sq.lifts:
        maps = {}
        for (o, p) in var:
            na, nb = A.n(o, p), B.n(o, p + s)
            maps[(o, p)] = [[v[vidx(o, p, i, j)] for j in range(na)] for i in range(nb)]
        homs.append(ModuleHom(A, B, maps, s))
    return sq.group, homs


# extensions ---------------------------------------------------------------------

@dataclass
class TwoOfThree:
    exact: tuple            # exactness of (K, E, Q)
    consistent: bool


def two_out_of_three_check(f, g):
    """For an extension ``K -f-> E -g-> Q`` report which terms are exact.

    Raises :class:`NotAnExtension` unless f is injective, g surjective and
    ``im f = ker g``.
    """
    K, E, Q = f.source, f.target, g.target
    if g.source is not E:
        raise NotAnExtension("maps are not composable")
    if not kernel(f)[0].is_zero():
        raise NotAnExtension("first map is not injective")
    if not cokernel(g)[0].is_zero():
        raise NotAnExtension("second map is not surjective")
    for o in K.ring.objects:
        for p in PARITIES:
            if not is_exact_at(f.at(o, p), K.slot(o, p), E.slot(o, p), g.at(o, p), Q.slot(o, p)):
                raise NotAnExtension(f"sequence is not exact in the middle at {o}, parity {p}")
    flags = tuple(is_exact(X).exact for X in (K, E, Q))
    return TwoOfThree(flags, sum(flags) != 2)


# chain rings --------------------------------------------------------------------

def chain_nil_kernel_lattices(M):
    """For an exact module over a chain ring, nil*M as kernels of the longest maps.

    For Y = [a, b] with b < n this is the kernel of delta([a,b],[a+1,b+1]);
    for b = n it is the kernel of mu([a,n],[1,a]).
    """
    R = M.ring
    iv = R.intervals
    lab = {v: k for k, v in iv.items()}
    n = max(b for _, b in iv.values())
    out = {}
    for o, (a, b) in iv.items():
        if b < n:
            e = R.element(f"delta({o},{lab[(a + 1, b + 1)]})")
        else:
            tgt = lab[(1, a)]
            e = R.identity(o) if tgt == o else R.element(f"mu({o},{tgt})")
        for p in PARITIES:
            out[(o, p)] = kernel_lattice(M.act_elem(e, p), M.slot(o, p), M.slot(e.target, p + e.degree))
    return out


def nil_equals_chain_kernels(M):
    want = chain_nil_kernel_lattices(M)
    have = nil_lattices(M)
    return all(intmat.hnf(want[key], M.n(*key)) == have[key] for key in have)
