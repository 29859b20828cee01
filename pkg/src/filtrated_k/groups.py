"""Finitely generated abelian groups, graded and presented.

A :class:`Presented` group is ``Z^n`` modulo the span of some relation vectors.
Homomorphisms between presented groups are integer matrices acting on column
vectors of generator coordinates; they are well defined when every relation
is sent into the relation lattice of the target.

>>> str(GradedAbelianGroup(AbelianGroup(0, (3,)), AbelianGroup(2)))
'Z/3[0] + Z^2[1]'
>>> parse_graded('Z^2[1] + Z/3[0]') == GradedAbelianGroup(AbelianGroup(0, (3,)), AbelianGroup(2))
True
"""

import re
from dataclasses import dataclass
from functools import cached_property

from . import intmat
from .errors import NotWellDefined, ParseError


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic groups of the listed orders (each > 1, dividing the next)."""

    free_rank: int = 0
    torsion: tuple = ()

    @classmethod
    def from_factors(cls, factors, ngens):
        """Group ``Z^ngens`` modulo a lattice with the given invariant factors."""
        tors = tuple(sorted(d for d in factors if d > 1))
        return cls(ngens - len(factors), tors)

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def is_free(self):
        return not self.torsion

    def __add__(self, other):
        return AbelianGroup(self.free_rank + other.free_rank,
                            _normalise_torsion(self.torsion + other.torsion))

    def parts(self):
        out = []
        if self.free_rank == 1:
            out.append("Z")
        elif self.free_rank > 1:
            out.append(f"Z^{self.free_rank}")
        for d in sorted(set(self.torsion)):
            c = self.torsion.count(d)
            out.append(f"Z/{d}" if c == 1 else f"(Z/{d})^{c}")
        return out

    def __str__(self):
        return " + ".join(self.parts()) or "0"


def _normalise_torsion(orders):
    """Invariant factor form of a product of cyclic groups."""
    orders = [d for d in orders if d > 1]
    if not orders:
        return ()
    n = len(orders)
    snf = intmat.smith_normal_form([[orders[i] if i == j else 0 for j in range(n)] for i in range(n)])
    return tuple(d for d in snf.factors if d > 1)


@dataclass(frozen=True)
class GradedAbelianGroup:
    even: AbelianGroup = AbelianGroup()
    odd: AbelianGroup = AbelianGroup()

    def __getitem__(self, parity):
        return self.even if parity % 2 == 0 else self.odd

    def is_zero(self):
        return self.even.is_zero() and self.odd.is_zero()

    def is_free(self):
        return self.even.is_free() and self.odd.is_free()

    def __add__(self, other):
        return GradedAbelianGroup(self.even + other.even, self.odd + other.odd)

    def shift(self, s):
        return self if s % 2 == 0 else GradedAbelianGroup(self.odd, self.even)

    def __str__(self):
        parts = [f"{p}[0]" for p in self.even.parts()] + [f"{p}[1]" for p in self.odd.parts()]
        return " + ".join(parts) or "0"


def graded(even=0, odd=0, even_torsion=(), odd_torsion=()):
    return GradedAbelianGroup(AbelianGroup(even, tuple(even_torsion)), AbelianGroup(odd, tuple(odd_torsion)))


_TERM = re.compile(r"^(?:\(Z/(\d+)\)\^(\d+)|Z/(\d+)|Z(?:\^(\d+))?)\[([01])\]$")


def parse_graded(text):
    """Inverse of ``str`` on :class:`GradedAbelianGroup`."""
    text = text.strip()
    if text == "0":
        return GradedAbelianGroup()
    free = [0, 0]
    tors = [[], []]
    for term in text.split("+"):
        m = _TERM.match(term.strip())
        if not m:
            raise ParseError(f"cannot read group term {term.strip()!r}")
        d_pow, cnt, d, zpow, deg = m.groups()
        deg = int(deg)
        if d_pow:
            tors[deg] += [int(d_pow)] * int(cnt)
        elif d:
            tors[deg].append(int(d))
        else:
            free[deg] += int(zpow) if zpow else 1
    return GradedAbelianGroup(AbelianGroup(free[0], _normalise_torsion(tors[0])),
                              AbelianGroup(free[1], _normalise_torsion(tors[1])))


@dataclass(frozen=True)
class Presented:
    """``Z^ngens`` modulo the span of ``rels``."""

    ngens: int
    rels: tuple = ()

    @classmethod
    def free(cls, n):
        return cls(n, ())

    @classmethod
    def cyclic(cls, orders, free_rank=0):
        """Free generators first, then one generator per torsion order."""
        n = free_rank + len(orders)
        rels = []
        for k, d in enumerate(orders):
            v = [0] * n
            v[free_rank + k] = d
            rels.append(tuple(v))
        return cls(n, tuple(rels))

    @cached_property
    def lattice(self):
        return intmat.hnf(self.rels, self.ngens)

    @cached_property
    def structure(self):
        return AbelianGroup.from_factors(
            intmat.invariant_factors(self.lattice, len(self.lattice), self.ngens) if self.lattice else [],
            self.ngens)

    def is_zero(self):
        return len(self.lattice) == self.ngens and all(
            row[intmat.pivot_of(row)] == 1 for row in self.lattice)

    def is_trivial_element(self, v):
        return intmat.lattice_contains(self.lattice, v)

    def __str__(self):
        return str(self.structure)


def direct_sum(groups):
    n = sum(g.ngens for g in groups)
    rels = []
    off = 0
    for g in groups:
        for r in g.rels:
            v = [0] * n
            v[off:off + g.ngens] = r
            rels.append(tuple(v))
        off += g.ngens
    return Presented(n, tuple(rels))


def columns(A, ncols):
    return [[row[j] for row in A] for j in range(ncols)]


def check_map(A, G, H):
    """Raise :class:`NotWellDefined` unless A: G -> H respects relations."""
    for r in G.rels:
        if not H.is_trivial_element(intmat.matvec(A, r) if H.ngens else []):
            raise NotWellDefined("a relation of the source is not sent to a relation of the target")


def maps_to_zero(A, G, H):
    return all(H.is_trivial_element(col) for col in columns(A, G.ngens)) if H.ngens else True


def kernel_lattice(A, G, H):
    """Hermite basis of ``{x in Z^{G.ngens} : A x lies in the relations of H}``."""
    n = G.ngens
    if H.ngens == 0 or n == 0:
        return intmat.identity(n)
    rel = H.lattice
    big = [list(A[i]) + [r[i] for r in rel] for i in range(H.ngens)]
    ker = intmat.integer_kernel(big, n + len(rel))
    return intmat.hnf([v[:n] for v in ker], n)


def image_lattice(A, G, H):
    """Hermite basis of ``A(Z^{G.ngens}) + relations of H`` inside ``Z^{H.ngens}``."""
    return intmat.hnf(columns(A, G.ngens) + list(H.rels), H.ngens)


def same_lattice(B1, B2):
    return B1 == B2


@dataclass
class Subquotient:
    """The quotient K/L of lattices L inside K inside ``Z^n``.

    ``lifts`` are vectors of ``Z^n`` mapping to the standard generators of the
    quotient (free ones first, then torsion in increasing order); ``orders``
    holds 0 for free generators and the order for torsion ones.
    """

    n: int
    K: list
    forward: list       # rows: quotient coordinates as functionals on K-coordinates
    lifts: list
    orders: list

    @property
    def group(self):
        return AbelianGroup(self.orders.count(0), tuple(d for d in self.orders if d))

    def presented(self):
        return Presented.cyclic([d for d in self.orders if d], self.orders.count(0))

    def coords(self, x):
        """Quotient coordinates of a vector of K."""
        kc = intmat.lattice_coords(self.K, x)
        if kc is None:
            raise NotWellDefined("vector does not lie in the subquotient numerator")
        y = intmat.matvec(self.forward, kc) if self.forward else []
        return [v % d if d else v for v, d in zip(y, self.orders)]


def subquotient(K, L, n):
    """Build the :class:`Subquotient` for lattices given by generators (L inside K)."""
    K = intmat.hnf(K, n)
    k = len(K)
    cols = []
    for v in L:
        c = intmat.lattice_coords(K, v)
        if c is None:
            raise NotWellDefined("denominator is not contained in numerator")
        if any(c):
            cols.append(c)
    if cols:
        Lm = [[c[i] for c in cols] for i in range(k)]
        snf = intmat.smith_normal_form(Lm, k, len(cols))
        U, Ui, factors = snf.U, snf.U_inv, snf.factors
    else:
        U = Ui = intmat.identity(k)
        factors = []
    keep = []
    for i in range(k):
        d = factors[i] if i < len(factors) else 0
        if d != 1:
            keep.append((0 if d == 0 else 1, d, i))
    keep.sort()
    forward = [U[i] for _, _, i in keep]
    lifts = []
    for _, _, i in keep:
        kc = [Ui[r][i] for r in range(k)]
        v = [0] * n
        for c, row in zip(kc, K):
            if c:
                for t in range(n):
                    v[t] += c * row[t]
        lifts.append(v)
    return Subquotient(n, K, forward, lifts, [d for _, d, _ in keep])


def simplify(G):
    """Invariant-factor form of G with the transforms ``T`` (G -> G') and ``S`` (G' -> G).

    Groups already written as free generators followed by cyclic ones of order
    at least 2 are kept as they are.
    """
    if _is_normal(G):
        I = intmat.identity(G.ngens)
        return G, I, [row[:] for row in I]
    sq = subquotient(intmat.identity(G.ngens), list(G.rels), G.ngens)
    T = [intmat.matvec(sq.forward, intmat.lattice_coords(sq.K, e)) if sq.forward else []
         for e in intmat.identity(G.ngens)]
    T = [[T[j][i] for j in range(G.ngens)] for i in range(len(sq.orders))]
    S = [[sq.lifts[j][i] for j in range(len(sq.lifts))] for i in range(G.ngens)]
    return sq.presented(), T, S


def _is_normal(G):
    n, t = G.ngens, len(G.rels)
    if t > n:
        return False
    for k, r in enumerate(G.rels):
        c = n - t + k
        if r[c] < 2 or any(x for j, x in enumerate(r) if j != c):
            return False
    return True


def reduce_vector(G, v):
    """Canonical representative of ``v`` when G is in invariant-factor form."""
    out = list(v)
    for r in G.rels:
        c = intmat.pivot_of(r)
        if c is not None:
            out[c] %= r[c]
    return out


def homology(A_in, G_in, G, A_out, G_out):
    """``ker(A_out) / (im(A_in) + rels)`` at the middle group G of a composable pair."""
    K = kernel_lattice(A_out, G, G_out) if A_out is not None else intmat.identity(G.ngens)
    L = columns(A_in, G_in.ngens) if A_in is not None else []
    return subquotient(K, L + list(G.rels), G.ngens)


def is_exact_at(A_in, G_in, G, A_out, G_out):
    """Whether ``im(A_in) == ker(A_out)`` inside G."""
    K = kernel_lattice(A_out, G, G_out)
    Im = image_lattice(A_in, G_in, G)
    return intmat.hnf(K, G.ngens) == Im
