"""Graded additive categories given by a Z-basis of morphisms and structure constants.

A :class:`CategoryRing` has finitely many objects.  Every hom group is free
abelian with a basis of homogeneous morphisms, and composition is recorded
on basis pairs.  The ring also carries its distinguished triangles: for each
locally closed Y and open U inside Y the maps ``U -> Y -> Y\\U -> U[1]``, with
matrix entries indexed by connected components.
"""

from dataclasses import dataclass, field

from . import intmat
from .cohomology import hom_group
from .errors import ObjectMismatch, RingValidationError
from .groups import AbelianGroup, GradedAbelianGroup


@dataclass(frozen=True)
class BasisMorphism:
    source: str
    target: str
    degree: int
    label: str


@dataclass(frozen=True)
class Element:
    """A homogeneous morphism ``source -> target``: integer combination of basis morphisms."""

    source: str
    target: str
    degree: int
    terms: tuple = ()     # sorted pairs (basis index, nonzero coefficient)

    def is_zero(self):
        return not self.terms


@dataclass
class Triangle:
    """Distinguished triangle ``U -> Y -> C -> U[1]`` over connected components.

    ``i[l][k]`` maps ``U[k]`` to ``Y[l]``, ``r[m][l]`` maps ``Y[l]`` to ``C[m]``
    and ``d[k][m]`` (odd) maps ``C[m]`` to ``U[k]``; ``None`` entries are zero.
    """

    name: str
    U: tuple
    Y: tuple
    C: tuple
    i: list
    r: list
    d: list


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)


class CategoryRing:
    def __init__(self, name, objects, basis, products, identities,
                 poset=None, lc_sets=None, triangles=()):
        self.name = name
        self.objects = tuple(objects)
        self.basis = tuple(basis)
        self.products = products          # (f, g) -> tuple of (h, c): basis f after basis g
        self.identities = identities      # object -> basis index
        self.poset = poset
        self.lc_sets = lc_sets or {}      # object -> tuple of poset elements
        self.triangles = list(triangles)
        self._hom = {}
        for k, b in enumerate(self.basis):
            self._hom.setdefault((b.source, b.target), []).append(k)
        self._label = {b.label: k for k, b in enumerate(self.basis)}
        if len(self._label) != len(self.basis):
            raise RingValidationError("basis labels are not unique")

    def __repr__(self):
        return f"CategoryRing({self.name!r}, {len(self.objects)} objects, {len(self.basis)} basis morphisms)"

    def hom(self, source, target, degree=None):
        """Basis indices of morphisms ``source -> target`` (optionally of one degree)."""
        idx = self._hom.get((source, target), [])
        if degree is None:
            return list(idx)
        return [k for k in idx if self.basis[k].degree == degree % 2]

    def hom_rank(self, source, target):
        return GradedAbelianGroup(AbelianGroup(len(self.hom(source, target, 0))),
                                  AbelianGroup(len(self.hom(source, target, 1))))

    def index_of(self, label):
        return self._label[label]

    def basis_element(self, k, coeff=1):
        b = self.basis[k]
        return Element(b.source, b.target, b.degree, ((k, coeff),) if coeff else ())

    def element(self, label, coeff=1):
        return self.basis_element(self._label[label], coeff)

    def zero(self, source, target, degree=0):
        return Element(source, target, degree % 2, ())

    def identity(self, obj):
        return self.basis_element(self.identities[obj])

    def make(self, source, target, degree, coeffs):
        terms = tuple(sorted((k, c) for k, c in coeffs.items() if c))
        return Element(source, target, degree % 2, terms)

    def add(self, *elems):
        first = elems[0]
        acc = {}
        for e in elems:
            if (e.source, e.target, e.degree) != (first.source, first.target, first.degree):
                raise ObjectMismatch("adding morphisms with different ends or degrees")
            for k, c in e.terms:
                acc[k] = acc.get(k, 0) + c
        return self.make(first.source, first.target, first.degree, acc)

    def scale(self, e, c):
        return self.make(e.source, e.target, e.degree, {k: c * v for k, v in e.terms})

    def compose(self, f, g):
        """``f`` after ``g``."""
        if g.target != f.source:
            raise ObjectMismatch(f"cannot compose {g.source}->{g.target} with {f.source}->{f.target}")
        acc = {}
        for kf, cf in f.terms:
            for kg, cg in g.terms:
                for h, c in self.products.get((kf, kg), ()):
                    acc[h] = acc.get(h, 0) + cf * cg * c
        return self.make(g.source, f.target, f.degree + g.degree, acc)

    def coords(self, e):
        """Coordinates of ``e`` over ``hom(e.source, e.target)``."""
        idx = self.hom(e.source, e.target)
        pos = {k: i for i, k in enumerate(idx)}
        v = [0] * len(idx)
        for k, c in e.terms:
            v[pos[k]] = c
        return v

    def format(self, e):
        if e.is_zero():
            return "0"
        parts = []
        for k, c in e.terms:
            lab = self.basis[k].label
            parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ")

    def is_nil(self, k):
        return self.identities.get(self.basis[k].source) != k

    def nil_basis(self):
        return [k for k in range(len(self.basis)) if self.is_nil(k)]

    def ss_basis(self):
        return [self.identities[o] for o in self.objects]


def nil_index(ring):
    """Smallest k with the k-th power of the nil ideal equal to zero."""
    nil = ring.nil_basis()
    power = {}
    for k in nil:
        b = ring.basis[k]
        power.setdefault((b.source, b.target), []).append(ring.coords(ring.basis_element(k)))
    power = {key: intmat.hnf(v, len(ring.hom(*key))) for key, v in power.items()}
    k = 1
    while any(power.values()):
        nxt = {}
        for (a, b), vecs in power.items():
            src_idx = ring.hom(a, b)
            for f in nil:
                bf = ring.basis[f]
                if bf.source != b:
                    continue
                for v in vecs:
                    x = ring.make(a, b, 0, {src_idx[i]: c for i, c in enumerate(v) if c})
                    acc = {}
                    for kk, cc in x.terms:
                        for h, c in ring.products.get((f, kk), ()):
                            acc[h] = acc.get(h, 0) + cc * c
                    y = ring.make(a, bf.target, 0, acc)
                    if not y.is_zero():
                        nxt.setdefault((a, bf.target), []).append(ring.coords(y))
        power = {key: intmat.hnf(v, len(ring.hom(*key))) for key, v in nxt.items()}
        k += 1
    return k


def compose(ring, f, g):
    """``f o g`` in the ring."""
    return ring.compose(f, g)


@dataclass
class NilSplit:
    nil_basis: list
    ss_basis: list
    nil_index: int


def nil_ss_split(ring):
    return NilSplit(ring.nil_basis(), ring.ss_basis(), nil_index(ring))


def _matrix_product(ring, A, B, rows, mids, cols, degree):
    """Product of element matrices; ``A`` is rows x mids and ``B`` is mids x cols."""
    out = []
    for i in range(len(rows)):
        row = []
        for j in range(len(cols)):
            terms = []
            for t in range(len(mids)):
                a, b = A[i][t], B[t][j]
                if a is not None and b is not None:
                    terms.append(ring.compose(a, b))
            row.append(ring.add(*terms) if terms else ring.zero(cols[j], rows[i], degree))
        out.append(row)
    return out


def validate_ring(ring, expected=None, check_ranks=True):
    """Check associativity, units, grading, triangle shapes and hom-group ranks.

    ``expected`` maps ``(source, target)`` to a :class:`GradedAbelianGroup`;
    by default ranks are compared with the cohomological computation on the
    ring's poset whenever both objects are locally closed sets.
    """
    rep = ValidationReport()
    B = ring.basis
    for (f, g), terms in ring.products.items():
        if B[g].target != B[f].source:
            rep.fail(f"product recorded for non-composable pair {B[f].label}, {B[g].label}")
        for h, _ in terms:
            if (B[h].source, B[h].target) != (B[g].source, B[f].target):
                rep.fail(f"product {B[f].label}*{B[g].label} has wrong ends")
            if B[h].degree != (B[f].degree + B[g].degree) % 2:
                rep.fail(f"product {B[f].label}*{B[g].label} breaks the grading")
    for o in ring.objects:
        e = ring.identity(o)
        if e.degree != 0:
            rep.fail(f"identity of {o} is odd")
    for k, b in enumerate(B):
        e = ring.basis_element(k)
        if ring.compose(ring.identity(b.target), e) != e or ring.compose(e, ring.identity(b.source)) != e:
            rep.fail(f"identity law fails for {b.label}")
    by_source = {}
    for k, b in enumerate(B):
        by_source.setdefault(b.source, []).append(k)
    for h in range(len(B)):
        eh = ring.basis_element(h)
        for g in by_source.get(B[h].target, []):
            eg = ring.basis_element(g)
            gh = ring.compose(eg, eh)
            for f in by_source.get(B[g].target, []):
                ef = ring.basis_element(f)
                if ring.compose(ring.compose(ef, eg), eh) != ring.compose(ef, gh):
                    rep.fail(f"associativity fails for {B[f].label}, {B[g].label}, {B[h].label}")
    for T in ring.triangles:
        _check_triangle(ring, T, rep)
    if check_ranks:
        for a in ring.objects:
            for b in ring.objects:
                want = None
                if expected is not None and (a, b) in expected:
                    want = expected[(a, b)]
                elif expected is None and ring.poset is not None and a in ring.lc_sets and b in ring.lc_sets:
                    want = hom_group(ring.poset, ring.lc_sets[a], ring.lc_sets[b])
                if want is not None and want != ring.hom_rank(a, b):
                    rep.fail(f"hom({a},{b}) has rank {ring.hom_rank(a, b)}, expected {want}")
    return rep


def _check_triangle(ring, T, rep):
    def check(mat, rows, cols, degree, what):
        if len(mat) != len(rows) or any(len(r) != len(cols) for r in mat):
            rep.fail(f"{T.name}: {what} has the wrong shape")
            return
        for a, y in enumerate(rows):
            for b, x in enumerate(cols):
                e = mat[a][b]
                if e is not None and (e.source, e.target, e.degree) != (x, y, degree):
                    rep.fail(f"{T.name}: {what}[{a}][{b}] has the wrong type")

    check(T.i, T.Y, T.U, 0, "i")
    check(T.r, T.C, T.Y, 0, "r")
    check(T.d, T.U, T.C, 1, "d")
    if rep.failures:
        return
    for prod, name in ((_matrix_product(ring, T.r, T.i, T.C, T.Y, T.U, 0), "r*i"),
                       (_matrix_product(ring, T.d, T.r, T.U, T.C, T.Y, 1), "d*r"),
                       (_matrix_product(ring, T.i, T.d, T.Y, T.U, T.C, 1), "i*d")):
        if any(not e.is_zero() for row in prod for e in row):
            rep.fail(f"{T.name}: {name} is not zero")


def odd_odd_vanishes(ring):
    """Whether every composite of two odd basis morphisms is zero."""
    for (f, g), terms in ring.products.items():
        if ring.basis[f].degree == 1 and ring.basis[g].degree == 1 and terms:
            return False
    return True
