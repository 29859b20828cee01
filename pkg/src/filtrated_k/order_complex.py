"""Order complexes and the relative pairs that compute natural transformation groups.

A simplex of the order complex is a nonempty strict chain, stored as a tuple
listed from its least to its greatest point.
"""

from dataclasses import dataclass

from .poset import closure_ops


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: frozenset

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def sorted(self):
        return sorted(self.simplices, key=lambda s: (len(s), s))


@dataclass(frozen=True)
class SimplicialPair:
    total: SimplicialComplex
    sub: SimplicialComplex

    @property
    def dimension(self):
        return self.total.dimension

    def relative_cells(self):
        return sorted(self.total.simplices - self.sub.simplices, key=lambda s: (len(s), s))


def strict_chains(P, points=None):
    """All nonempty strict chains inside ``points`` (default: all of P)."""
    pts = sorted(P.elements if points is None else set(points), key=P.linear_key)
    out = []

    def grow(chain, start):
        out.append(tuple(chain))
        for k in range(start, len(pts)):
            if P.lt(chain[-1], pts[k]):
                chain.append(pts[k])
                grow(chain, k + 1)
                chain.pop()

    for i, x in enumerate(pts):
        grow([x], i + 1)
    return out


def order_complex(P, points=None):
    return SimplicialComplex(frozenset(strict_chains(P, points)))


def m_of(chain):
    """Least point of a chain: the image of its open simplex under the minimum map."""
    return chain[0]


def M_of(chain):
    """Greatest point of a chain: the image of its open simplex under the maximum map."""
    return chain[-1]


def relative_S(P, Y, Z):
    """The pair whose K-theory computes transformations from the Y-part to the Z-part.

    total = chains in (up-closure of Y) meet (closure of Z); sub = chains avoiding Y
    or avoiding Z at the relevant end, built from the two boundaries.
    """
    cY, cZ = closure_ops(P, Y), closure_ops(P, Z)
    up_Y, up_bd_Y = set(cY.up), set(cY.up_boundary)
    cl_Z, cl_bd_Z = set(cZ.cl), set(cZ.cl_boundary)
    total = order_complex(P, up_Y & cl_Z)
    sub = set(strict_chains(P, up_Y & cl_bd_Z)) | set(strict_chains(P, up_bd_Y & cl_Z))
    return SimplicialPair(total, SimplicialComplex(frozenset(sub)))


def open_simplex_filter(P, Y, Z):
    """Chains whose least point lies in Y and whose greatest point lies in Z."""
    Y, Z = set(Y), set(Z)
    return frozenset(c for c in strict_chains(P) if m_of(c) in Y and M_of(c) in Z)
