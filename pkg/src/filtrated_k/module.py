"""Modules over a category ring, given slot by slot.

Each slot ``M(Y)_e`` (object Y, parity e) is a :class:`Presented` group and
every basis morphism ``f: Y -> Z`` of degree d acts by an integer matrix
``M(Y)_e -> M(Z)_{e+d}``.  Identities act as identity matrices and are never
stored.  A :class:`ModuleHom` of shift s maps ``M(Y)_e`` to ``N(Y)_{e+s}``.
"""

from . import intmat
from .errors import ModuleValidationError, NotWellDefined, ObjectMismatch
from .groups import GradedAbelianGroup, Presented, check_map, direct_sum as group_sum, \
    kernel_lattice, maps_to_zero, reduce_vector, simplify as simplify_group

PARITIES = (0, 1)


class Module:
    def __init__(self, ring, slots, actions, name=None):
        self.ring = ring
        self.slots = {}
        for o in ring.objects:
            for p in PARITIES:
                self.slots[(o, p)] = slots.get((o, p), Presented(0))
        for (o, p) in slots:
            if o not in ring.objects:
                raise ObjectMismatch(f"object {o!r} does not belong to ring {ring.name}")
        self.actions = {}
        for (k, p), A in actions.items():
            b = ring.basis[k]
            rows = self.n(b.target, p + b.degree)
            cols = self.n(b.source, p)
            if len(A) != rows or any(len(r) != cols for r in A):
                raise ModuleValidationError(f"action of {b.label} on parity {p} has the wrong shape")
            if rows and cols and not intmat.is_zero(A) and not ring.identities.get(b.source) == k:
                self.actions[(k, p)] = [list(r) for r in A]
        self.name = name
        self.free_spec = None
        self.gens = None

    def __repr__(self):
        return f"Module({self.name or 'unnamed'} over {self.ring.name})"

    def slot(self, obj, p):
        return self.slots[(obj, p % 2)]

    def n(self, obj, p):
        return self.slots[(obj, p % 2)].ngens

    def act(self, k, p):
        b = self.ring.basis[k]
        p %= 2
        if self.ring.identities.get(b.source) == k:
            return intmat.identity(self.n(b.source, p))
        A = self.actions.get((k, p))
        if A is None:
            return intmat.zeros(self.n(b.target, p + b.degree), self.n(b.source, p))
        return A

    def act_elem(self, e, p):
        out = intmat.zeros(self.n(e.target, p + e.degree), self.n(e.source, p))
        for k, c in e.terms:
            A = self.act(k, p)
            for i, row in enumerate(A):
                for j, x in enumerate(row):
                    if x:
                        out[i][j] += c * x
        return out

    def structure(self, obj):
        return GradedAbelianGroup(self.slot(obj, 0).structure, self.slot(obj, 1).structure)

    def structures(self):
        return {o: self.structure(o) for o in self.ring.objects}

    def is_zero(self):
        return all(g.is_zero() for g in self.slots.values())

    def has_free_slots(self):
        return all(g.structure.is_free() for g in self.slots.values())

    def describe(self):
        return "\n".join(f"{o}: {self.structure(o)}" for o in self.ring.objects)


class ModuleHom:
    def __init__(self, source, target, maps, shift=0):
        if source.ring is not target.ring:
            raise ObjectMismatch("module maps must stay over one ring")
        self.source, self.target, self.shift = source, target, shift % 2
        self.maps = {}
        for o in source.ring.objects:
            for p in PARITIES:
                A = maps.get((o, p))
                rows, cols = target.n(o, p + self.shift), source.n(o, p)
                if A is None:
                    A = intmat.zeros(rows, cols)
                if len(A) != rows or any(len(r) != cols for r in A):
                    raise ModuleValidationError(f"map at {o}, parity {p} has the wrong shape")
                self.maps[(o, p)] = A

    def at(self, obj, p):
        return self.maps[(obj, p % 2)]

    def compose(self, other):
        """``self`` after ``other``."""
        if other.target is not self.source:
            raise ObjectMismatch("modules do not match for composition")
        maps = {}
        for (o, p), A in other.maps.items():
            q = p + other.shift
            maps[(o, p)] = intmat.mul(self.at(o, q), A, self.target.n(o, q + self.shift),
                                      self.source.n(o, q), other.source.n(o, p))
        return ModuleHom(other.source, self.target, maps, self.shift + other.shift)

    def is_zero(self):
        return all(maps_to_zero(A, self.source.slot(o, p), self.target.slot(o, p + self.shift))
                   for (o, p), A in self.maps.items())


# validation -------------------------------------------------------------------

def _mat_diff_zero(A, B, G, H):
    D = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
    return maps_to_zero(D, G, H)


def validate_module(M):
    """Raise :class:`ModuleValidationError` unless M is a well-defined module."""
    R = M.ring
    for (k, p), A in M.actions.items():
        b = R.basis[k]
        try:
            check_map(A, M.slot(b.source, p), M.slot(b.target, p + b.degree))
        except NotWellDefined:
            raise ModuleValidationError(f"action of {b.label} on parity {p} does not respect relations")
    for (f, g), terms in R.products.items():
        bf, bg = R.basis[f], R.basis[g]
        for p in PARITIES:
            G = M.slot(bg.source, p)
            H = M.slot(bf.target, p + bf.degree + bg.degree)
            if not G.ngens or not H.ngens:
                continue
            lhs = intmat.mul(M.act(f, p + bg.degree), M.act(g, p), H.ngens, M.n(bg.target, p + bg.degree), G.ngens)
            rhs = intmat.zeros(H.ngens, G.ngens)
            for h, c in terms:
                A = M.act(h, p)
                for i in range(H.ngens):
                    for j in range(G.ngens):
                        rhs[i][j] += c * A[i][j]
            if not _mat_diff_zero(lhs, rhs, G, H):
                raise ModuleValidationError(
                    f"action is not compatible with the product {bf.label} * {bg.label} on parity {p}")
    for (f, g) in _composable_zero_pairs(R):
        bf, bg = R.basis[f], R.basis[g]
        for p in PARITIES:
            G = M.slot(bg.source, p)
            H = M.slot(bf.target, p + bf.degree + bg.degree)
            if not G.ngens or not H.ngens:
                continue
            lhs = intmat.mul(M.act(f, p + bg.degree), M.act(g, p), H.ngens, M.n(bg.target, p + bg.degree), G.ngens)
            if not maps_to_zero(lhs, G, H):
                raise ModuleValidationError(f"product {bf.label} * {bg.label} vanishes but its action does not")
    return True


def _composable_zero_pairs(R):
    cache = getattr(R, "_zero_pairs", None)
    if cache is None:
        by_source = {}
        for k, b in enumerate(R.basis):
            by_source.setdefault(b.source, []).append(k)
        cache = [(f, g) for g, bg in enumerate(R.basis) for f in by_source.get(bg.target, [])
                 if (f, g) not in R.products]
        R._zero_pairs = cache
    return cache


def validate_hom(h):
    S, T = h.source, h.target
    R = S.ring
    for (o, p), A in h.maps.items():
        try:
            check_map(A, S.slot(o, p), T.slot(o, p + h.shift))
        except NotWellDefined:
            raise ModuleValidationError(f"map at {o}, parity {p} does not respect relations")
    for k, b in enumerate(R.basis):
        for p in PARITIES:
            G = S.slot(b.source, p)
            H = T.slot(b.target, p + b.degree + h.shift)
            if not G.ngens or not H.ngens:
                continue
            lhs = intmat.mul(h.at(b.target, p + b.degree), S.act(k, p), H.ngens, S.n(b.target, p + b.degree), G.ngens)
            rhs = intmat.mul(T.act(k, p + h.shift), h.at(b.source, p), H.ngens, T.n(b.source, p + h.shift), G.ngens)
            if not _mat_diff_zero(lhs, rhs, G, H):
                raise ModuleValidationError(f"map does not commute with {b.label} on parity {p}")
    return True


# constructions ----------------------------------------------------------------

def free_module(ring, spec, name=None):
    """Direct sum of representable modules ``P_Y[s]`` for ``(Y, s)`` in spec.

    ``P_Y[s](Z)_e`` has basis the morphisms ``Y -> Z`` of degree ``e - s``;
    the generator of ``P_Y[s]`` is the identity of Y sitting in parity s.
    """
    spec = [(o, s % 2) for o, s in spec]
    for o, _ in spec:
        if o not in ring.objects:
            raise ObjectMismatch(f"object {o!r} does not belong to ring {ring.name}")
    gens = {}
    for Z in ring.objects:
        for p in PARITIES:
            gens[(Z, p)] = [(k, b) for k, (Y, s) in enumerate(spec)
                            for b in ring.hom(Y, Z, p - s)]
    pos = {key: {g: i for i, g in enumerate(lst)} for key, lst in gens.items()}
    actions = {}
    for h, bh in enumerate(ring.basis):
        for p in PARITIES:
            src = gens[(bh.source, p)]
            if not src:
                continue
            tpos = pos[(bh.target, (p + bh.degree) % 2)]
            A = intmat.zeros(len(tpos), len(src))
            for j, (k, b) in enumerate(src):
                for c_idx, c in ring.products.get((h, b), ()):
                    A[tpos[(k, c_idx)]][j] += c
            actions[(h, p)] = A
    slots = {key: Presented.free(len(lst)) for key, lst in gens.items()}
    M = Module(ring, slots, actions, name or " + ".join(f"P[{o}]" + (f"[{s}]" if s else "") for o, s in spec) or "0")
    M.free_spec = spec
    M.gens = gens
    M.gen_pos = pos
    return M


def generator_position(F, k):
    """Slot and index of the k-th free generator of a free module."""
    Y, s = F.free_spec[k]
    return (Y, s), F.gen_pos[(Y, s)][(k, F.ring.identities[Y])]


def hom_from_free(F, N, elements, shift=0):
    """The map sending the k-th generator of F to ``elements[k]`` in ``N(Y_k)_{s_k + shift}``."""
    R = F.ring
    maps = {}
    for (Z, p), lst in F.gens.items():
        rows = N.n(Z, p + shift)
        A = intmat.zeros(rows, len(lst))
        for j, (k, b) in enumerate(lst):
            Y, s = F.free_spec[k]
            col = intmat.matvec(N.act(b, s + shift), elements[k]) if rows else []
            for i in range(rows):
                A[i][j] = col[i]
        maps[(Z, p)] = A
    return ModuleHom(F, N, maps, shift)


def zero_module(ring):
    return Module(ring, {}, {}, "0")


def shift(M, s=1):
    """``M[s]``, with ``M[s](Y)_e = M(Y)_{e+s}``."""
    s %= 2
    if s == 0:
        return M
    if M.free_spec is not None:
        return free_module(M.ring, [(o, t + 1) for o, t in M.free_spec], f"{M.name}[1]")
    slots = {(o, p): M.slot(o, p + 1) for o in M.ring.objects for p in PARITIES}
    actions = {(k, (p + 1) % 2): A for (k, p), A in M.actions.items()}
    return Module(M.ring, slots, actions, f"{M.name}[1]")


def direct_sum(*mods):
    """Direct sum with its inclusions and projections."""
    R = mods[0].ring
    slots, actions = {}, {}
    offsets = {}
    for o in R.objects:
        for p in PARITIES:
            slots[(o, p)] = group_sum([M.slot(o, p) for M in mods])
            off = 0
            for idx, M in enumerate(mods):
                offsets[(idx, o, p)] = off
                off += M.n(o, p)
    for k, b in enumerate(R.basis):
        if R.identities.get(b.source) == k:
            continue
        for p in PARITIES:
            rows, cols = slots[(b.target, (p + b.degree) % 2)].ngens, slots[(b.source, p)].ngens
            if not rows or not cols:
                continue
            A = intmat.zeros(rows, cols)
            for idx, M in enumerate(mods):
                sub = M.actions.get((k, p))
                if sub is None:
                    continue
                r0, c0 = offsets[(idx, b.target, (p + b.degree) % 2)], offsets[(idx, b.source, p)]
                for i, row in enumerate(sub):
                    for j, x in enumerate(row):
                        A[r0 + i][c0 + j] = x
            actions[(k, p)] = A
    name = " + ".join(M.name or "?" for M in mods)
    if all(M.free_spec is not None for M in mods):
        S = free_module(R, [x for M in mods for x in M.free_spec], name)
    else:
        S = Module(R, slots, actions, name)
    incs, projs = [], []
    for idx, M in enumerate(mods):
        im, pm = {}, {}
        for o in R.objects:
            for p in PARITIES:
                n, tot, off = M.n(o, p), slots[(o, p)].ngens, offsets[(idx, o, p)]
                im[(o, p)] = [[1 if i == off + j else 0 for j in range(n)] for i in range(tot)]
                pm[(o, p)] = [[1 if off + i == j else 0 for j in range(tot)] for i in range(n)]
        incs.append(ModuleHom(M, S, im))
        projs.append(ModuleHom(S, M, pm))
    return S, incs, projs


def submodule(M, lattices, name=None):
    """Submodule whose slots are the given lattices (each containing the relations).

    Returns the submodule and its inclusion.
    """
    R = M.ring
    bases, slots, incl = {}, {}, {}
    for o in R.objects:
        for p in PARITIES:
            G = M.slot(o, p)
            B = intmat.hnf(list(lattices.get((o, p), [])) + list(G.rels), G.ngens)
            bases[(o, p)] = B
            rels = []
            for r in G.lattice:
                c = intmat.lattice_coords(B, r)
                if c is None:
                    raise NotWellDefined("submodule lattice misses a relation")
                rels.append(tuple(c))
            slots[(o, p)] = Presented(len(B), tuple(rels))
            incl[(o, p)] = intmat.transpose(B, G.ngens) if B else intmat.zeros(G.ngens, 0)
    actions = {}
    for (k, p), A in M.actions.items():
        b = R.basis[k]
        src, tgt = bases[(b.source, p)], bases[(b.target, (p + b.degree) % 2)]
        if not src or not tgt:
            continue
        cols = []
        for v in src:
            w = intmat.matvec(A, v)
            c = intmat.lattice_coords(tgt, w)
            if c is None:
                raise NotWellDefined(f"lattices are not stable under {b.label}")
            cols.append(c)
        actions[(k, p)] = intmat.transpose(cols, len(tgt))
    S = Module(R, slots, actions, name)
    return S, ModuleHom(S, M, incl)


def quotient(M, lattices, name=None):
    """Quotient of M by submodule lattices; returns the quotient and the projection."""
    R = M.ring
    slots = {}
    for o in R.objects:
        for p in PARITIES:
            G = M.slot(o, p)
            slots[(o, p)] = Presented(G.ngens, tuple(G.rels) + tuple(tuple(v) for v in lattices.get((o, p), [])))
    Q = Module(R, slots, dict(M.actions), name)
    proj = ModuleHom(M, Q, {(o, p): intmat.identity(M.n(o, p)) for o in R.objects for p in PARITIES})
    return Q, proj


def simplify(M, name=None):
    """Rewrite every slot in invariant-factor form; returns ``(M', iso, inverse)``."""
    R = M.ring
    slots, T, S = {}, {}, {}
    for key, G in M.slots.items():
        slots[key], T[key], S[key] = simplify_group(G)
    actions = {}
    for (k, p), A in M.actions.items():
        b = R.basis[k]
        src, tgt = (b.source, p), (b.target, (p + b.degree) % 2)
        if not slots[src].ngens or not slots[tgt].ngens:
            continue
        B = intmat.mul(intmat.mul(T[tgt], A, slots[tgt].ngens, M.n(*tgt), M.n(*src)), S[src],
                       slots[tgt].ngens, M.n(*src), slots[src].ngens)
        B = intmat.transpose([reduce_vector(slots[tgt], col) for col in intmat.transpose(B)], slots[tgt].ngens)
        actions[(k, p)] = B
    N = Module(R, slots, actions, name or M.name)
    fwd = ModuleHom(M, N, T)
    back = ModuleHom(N, M, S)
    return N, fwd, back


def cokernel(h, name=None):
    """Cokernel of h with the projection from the target; slots are simplified."""
    T = h.target
    lat = {}
    for o in T.ring.objects:
        for p in PARITIES:
            A = h.at(o, (p - h.shift) % 2)
            lat[(o, p)] = [list(c) for c in zip(*A)] if A and A[0] else []
    Q, proj = quotient(T, lat, name)
    Qs, fwd, _ = simplify(Q, name)
    return Qs, fwd.compose(proj)


def kernel(h, name=None):
    """Kernel of h with its inclusion into the source; slots are simplified."""
    S = h.source
    lat = {}
    for o in S.ring.objects:
        for p in PARITIES:
            lat[(o, p)] = kernel_lattice(h.at(o, p), S.slot(o, p), h.target.slot(o, p + h.shift))
    K, incl = submodule(S, lat, name)
    Ks, _, back = simplify(K, name)
    return Ks, incl.compose(back)


def image_lattices(h):
    out = {}
    for o in h.source.ring.objects:
        for p in PARITIES:
            A = h.at(o, (p - h.shift) % 2)
            out[(o, p)] = [list(c) for c in zip(*A)] if A and A[0] else []
    return out


def image(h, name=None):
    S, incl = submodule(h.target, image_lattices(h), name)
    Ss, _, back = simplify(S, name)
    return Ss, incl.compose(back)


def quotient_mod_k(M, k, name=None):
    """``M / kM``."""
    lat = {key: [[k if i == j else 0 for j in range(G.ngens)] for i in range(G.ngens)]
           for key, G in M.slots.items()}
    Q, proj = quotient(M, lat, name or f"{M.name}/{k}")
    Qs, fwd, _ = simplify(Q, Q.name)
    return Qs, fwd.compose(proj)


def is_injective(h):
    return kernel(h)[0].is_zero()


def is_surjective(h):
    return cokernel(h)[0].is_zero()


def is_isomorphism(h):
    return is_injective(h) and is_surjective(h)


def ring_map_restrict(M, small_ring, images, name=None):
    """Restrict M along a ring map given by the images of the small ring's basis."""
    slots = {(o, p): M.slot(o, p) for o in small_ring.objects for p in PARITIES}
    actions = {}
    for k in range(len(small_ring.basis)):
        for p in PARITIES:
            actions[(k, p)] = M.act_elem(images[k], p)
    return Module(small_ring, slots, actions, name or M.name)
