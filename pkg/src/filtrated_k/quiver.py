"""Category rings presented by a quiver with relations.

Paths are tuples of arrow names listed in the order they are applied.  All
relations must be homogeneous in path length, so the quotient of the path
category is computed one length at a time; once every path of some length
vanishes, all longer paths vanish too.

In each hom group the surviving paths that are smallest in the arrow order
form the basis; every other path is rewritten through the reduced relation
lattice, which must have unit pivots for the quotient to be free on paths.
"""

from dataclasses import dataclass

from . import intmat
from .category import BasisMorphism, CategoryRing, Triangle
from .errors import RingValidationError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


def path_label(path, source):
    return "*".join(reversed(path)) if path else f"id({source})"


class Presentation:
    def __init__(self, name, objects, arrows, relations):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = {a.name: a for a in arrows}
        self.order = {a.name: k for k, a in enumerate(arrows)}
        self.relations = [list(r) for r in relations]

    def ends(self, path, source=None):
        if not path:
            return source, source
        for x, y in zip(path, path[1:]):
            if self.arrows[x].target != self.arrows[y].source:
                raise RingValidationError(f"path {path} is not composable")
        return self.arrows[path[0]].source, self.arrows[path[-1]].target

    def degree(self, path):
        return sum(self.arrows[a].degree for a in path) % 2

    def opposite(self, name, rename):
        """The presentation of the opposite category; arrows are renamed by ``rename``."""
        arrows = [Arrow(rename(a), a.target, a.source, a.degree) for a in self.arrows.values()]
        new = {a.name: rename(a) for a in self.arrows.values()}
        rels = [[(c, tuple(new[x] for x in reversed(p))) for c, p in r] for r in self.relations]
        return Presentation(name, self.objects, arrows, rels)

    def build(self, **ring_kwargs):
        return PresentedRing(self, **ring_kwargs)


class PresentedRing(CategoryRing):
    def __init__(self, pres, **kwargs):
        self.presentation = pres
        by_len = {0: {(o, o): [()] for o in pres.objects}}
        rels = []
        for r in pres.relations:
            ends = {pres.ends(p) for _, p in r}
            lens = {len(p) for _, p in r}
            degs = {pres.degree(p) for _, p in r}
            if len(ends) != 1 or len(lens) != 1 or len(degs) != 1:
                raise RingValidationError(f"relation {r} is not homogeneous")
            rels.append((ends.pop(), lens.pop(), r))
        self._normal = {}
        basis = []
        self.basis_paths = []
        identities = {}
        L = 0
        while True:
            level = by_len[L]
            alive = False
            for (s, t), paths in sorted(level.items(), key=lambda kv: (pres.objects.index(kv[0][0]), pres.objects.index(kv[0][1]))):
                vectors = self._ideal_vectors(by_len, rels, s, t, L, paths)
                keyed = sorted(paths, key=lambda p: tuple(pres.order[a] for a in p), reverse=True)
                col = {p: j for j, p in enumerate(keyed)}
                rows = []
                for vec in vectors:
                    row = [0] * len(keyed)
                    for c, p in vec:
                        row[col[p]] += c
                    rows.append(row)
                H = intmat.hnf(rows, len(keyed))
                pivot_cols = {}
                for row in H:
                    c = intmat.pivot_of(row)
                    if row[c] != 1:
                        raise RingValidationError(
                            f"relations do not leave a path basis in hom({s},{t}) at length {L}")
                    pivot_cols[c] = row
                free_cols = [j for j in range(len(keyed)) if j not in pivot_cols]
                index = {}
                for j in reversed(free_cols):
                    p = keyed[j]
                    index[j] = len(basis)
                    basis.append(BasisMorphism(s, t, pres.degree(p), path_label(p, s)))
                    self.basis_paths.append(p)
                    if L == 0:
                        identities[s] = index[j]
                    alive = True
                for j, p in enumerate(keyed):
                    if j in index:
                        self._normal[(s, p)] = ((index[j], 1),)
                    else:
                        row = pivot_cols[j]
                        self._normal[(s, p)] = tuple((index[jj], -row[jj]) for jj in free_cols if row[jj])
            if not alive and L > 0:
                break
            nxt = {}
            for (s, t), paths in level.items():
                for p in paths:
                    for a in pres.arrows.values():
                        if a.source == t:
                            nxt.setdefault((s, a.target), []).append(p + (a.name,))
            by_len[L + 1] = nxt
            L += 1
            if L > 64:
                raise RingValidationError("path category does not become nilpotent")
        self.max_length = L
        self._paths = by_len
        products = {}
        for f, bf in enumerate(basis):
            pf = self.basis_paths[f]
            for g, bg in enumerate(basis):
                if bg.target != bf.source:
                    continue
                terms = self._reduce(bg.source, self.basis_paths[g] + pf)
                if terms:
                    products[(f, g)] = terms
        super().__init__(pres.name, pres.objects, basis, products, identities, **kwargs)

    def _ideal_vectors(self, by_len, rels, s, t, L, paths):
        out = []
        for (a, b), ell, r in rels:
            if ell > L:
                continue
            for pre_len in range(L - ell + 1):
                post_len = L - ell - pre_len
                for p in by_len[pre_len].get((s, a), []):
                    for q in by_len[post_len].get((b, t), []):
                        out.append([(c, p + path + q) for c, path in r])
        return out

    def _reduce(self, source, path):
        if len(path) >= self.max_length:
            return ()
        return self._normal.get((source, path), ())

    def word(self, path, source=None, coeff=1):
        """The element represented by a path (``source`` is needed for the empty path)."""
        pres = self.presentation
        s, t = pres.ends(path, source)
        acc = {}
        for k, c in self._reduce(s, tuple(path)):
            acc[k] = acc.get(k, 0) + coeff * c
        return self.make(s, t, pres.degree(path), acc)

    def combo(self, terms, source=None, target=None, degree=None):
        """The element given by a list of ``(coefficient, path)`` pairs."""
        if not terms:
            return self.zero(source, target, degree or 0)
        return self.add(*[self.word(p, source, c) for c, p in terms])

    def even_paths(self, source, target, max_len=None):
        """Paths of even arrows from source to target, shortest first."""
        out = []
        for L in range(self.max_length if max_len is None else max_len):
            for p in self._paths.get(L, {}).get((source, target), []):
                if all(self.presentation.arrows[a].degree == 0 for a in p):
                    out.append(p)
        return out


@dataclass
class TriangleSpec:
    """A distinguished triangle written with paths; entries are lists of (coefficient, path) or None."""

    name: str
    U: tuple
    Y: tuple
    C: tuple
    i: list
    r: list
    d: list

    def realise(self, ring):
        def conv(mat, rows, cols, degree):
            return [[None if mat[a][b] is None else ring.combo(mat[a][b], cols[b], rows[a], degree)
                     for b in range(len(cols))] for a in range(len(rows))]
        return Triangle(self.name, self.U, self.Y, self.C,
                        conv(self.i, self.Y, self.U, 0), conv(self.r, self.C, self.Y, 0),
                        conv(self.d, self.U, self.C, 1))

    def substitute(self, subst):
        """Rewrite every path through an arrow substitution (arrow -> list of (coeff, path))."""
        def conv(mat):
            return [[None if e is None else substitute_combo(e, subst) for e in row] for row in mat]
        return TriangleSpec(self.name, self.U, self.Y, self.C, conv(self.i), conv(self.r), conv(self.d))

    def opposite(self, rename):
        def conv(mat):
            rows, cols = len(mat), len(mat[0]) if mat else 0
            return [[None if mat[a][b] is None else
                     [(c, tuple(rename[x] for x in reversed(p))) for c, p in mat[a][b]]
                     for a in range(rows)] for b in range(cols)]
        # U' = C, C' = U;  i' = r^op, r' = i^op, d' = d^op
        return TriangleSpec(self.name + "'", self.C, self.Y, self.U, conv(self.r), conv(self.i), conv(self.d))


def substitute_combo(terms, subst):
    out = []
    for c, path in terms:
        expansions = [(c, ())]
        for a in path:
            repl = subst.get(a, [(1, (a,))])
            expansions = [(c0 * c1, p0 + p1) for c0, p0 in expansions for c1, p1 in repl]
        out.extend(expansions)
    return out
