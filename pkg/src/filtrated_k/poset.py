"""Finite T0 spaces viewed as finite posets.

A point x lies below y (``x <= y``) when the closure of x is contained in the
closure of y.  Open sets are then the up-closed subsets, closed sets are the
down-closed ones and locally closed sets are the order-convex subsets.

>>> P = chain_poset(3)
>>> [Y.label for Y in connected_lc_sets(P)]
['1', '2', '3', '12', '23', '123']
>>> min_open(d4_poset(), '1').label
'14'
"""

import re
from dataclasses import dataclass, field
from itertools import combinations

from .errors import EmptyChain, NotAPartialOrder, NotLocallyClosed, ParseError, UnknownElement


class FinitePoset:
    """A finite partial order on string identifiers.

    ``elements`` fixes the canonical element order used for sorting and labels.
    ``covers`` is any set of pairs ``(a, b)`` meaning ``a <= b``; the order is
    their reflexive transitive closure.
    """

    def __init__(self, elements, covers=()):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ParseError("duplicate element identifier")
        self.elements = elements
        self.index = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        le = [[i == j for j in range(n)] for i in range(n)]
        for a, b in covers:
            for x in (a, b):
                if x not in self.index:
                    raise UnknownElement(f"unknown element {x!r}")
            le[self.index[a]][self.index[b]] = True
        for k in range(n):
            for i in range(n):
                if le[i][k]:
                    row_k = le[k]
                    row_i = le[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if le[i][j] and le[j][i]:
                    raise NotAPartialOrder(
                        f"{elements[i]!r} and {elements[j]!r} lie below each other")
        self._le = tuple(tuple(r) for r in le)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.elements == other.elements \
            and self._le == other._le

    def __hash__(self):
        return hash((self.elements, self._le))

    def __repr__(self):
        return f"FinitePoset({' '.join(self.elements)}; {', '.join(f'{a}<{b}' for a, b in self.cover_pairs())})"

    def le(self, x, y):
        return self._le[self.index[x]][self.index[y]]

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def comparable(self, x, y):
        return self.le(x, y) or self.le(y, x)

    def cover_pairs(self):
        """Covering relations of the Hasse diagram, in canonical order."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                    out.append((a, b))
        return out

    def sort(self, members):
        return tuple(sorted(members, key=self.index.__getitem__))

    def check(self, members):
        for x in members:
            if x not in self.index:
                raise UnknownElement(f"unknown element {x!r}")
        return members

    def linear_key(self, x):
        """A key that increases strictly along every strict chain."""
        return (sum(1 for y in self.elements if self.le(y, x)), self.index[x])


@dataclass(frozen=True)
class LCSet:
    """A subset of a poset; constructed through :func:`lc_set` when local closedness matters."""

    members: tuple
    poset: FinitePoset = field(compare=False, repr=False, default=None)

    @property
    def label(self):
        return set_label(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def as_set(self):
        return frozenset(self.members)


def set_label(members):
    members = tuple(members)
    if not members:
        return "{}"
    if all(len(x) == 1 for x in members):
        return "".join(members)
    return "{" + ",".join(members) + "}"


def subset(P, members):
    """An :class:`LCSet` holding ``members`` without any closedness check."""
    return LCSet(P.sort(set(P.check(members))), P)


def lc_set(P, members):
    S = subset(P, members)
    if not is_locally_closed(P, S):
        raise NotLocallyClosed(f"{S.label} is not locally closed")
    return S


def parse_label(P, text):
    """Read a set label such as ``124`` or ``{a,b}`` back into a subset."""
    text = text.strip()
    if text in ("{}", ""):
        return subset(P, ())
    if text.startswith("{") and text.endswith("}"):
        return subset(P, [t.strip() for t in text[1:-1].split(",") if t.strip()])
    if text in P.index:
        return subset(P, [text])
    return subset(P, list(text))


def up_closure(P, S):
    S = set(S)
    return subset(P, [y for y in P.elements if any(P.le(x, y) for x in S)])


def down_closure(P, S):
    S = set(S)
    return subset(P, [y for y in P.elements if any(P.le(y, x) for x in S)])


def is_open(P, S):
    return set(up_closure(P, S)) == set(S)


def is_closed(P, S):
    return set(down_closure(P, S)) == set(S)


def is_locally_closed(P, S):
    S = set(S)
    for x in S:
        for z in S:
            if P.lt(x, z):
                for y in P.elements:
                    if y not in S and P.lt(x, y) and P.lt(y, z):
                        return False
    return True


def is_open_in(P, U, Y):
    """Whether U is open in the subspace Y."""
    U, Y = set(U), set(Y)
    return U <= Y and all(y in U for x in U for y in Y if P.le(x, y))


def _canonical_key(P, S):
    return (len(S), tuple(P.index[x] for x in S))


def _all_subsets(P):
    for k in range(len(P) + 1):
        for combo in combinations(P.elements, k):
            yield combo


def open_sets(P):
    return [subset(P, c) for c in _all_subsets(P) if is_open(P, c)]


def closed_sets(P):
    return [subset(P, c) for c in _all_subsets(P) if is_closed(P, c)]


def locally_closed_sets(P):
    """All nonempty locally closed subsets in canonical order."""
    return [subset(P, c) for c in _all_subsets(P) if c and is_locally_closed(P, c)]


def open_subsets_of(P, Y):
    """Open subsets of the subspace Y, canonical order, including empty and Y."""
    Y = tuple(Y)
    out = []
    for k in range(len(Y) + 1):
        for combo in combinations(Y, k):
            if is_open_in(P, combo, Y):
                out.append(subset(P, combo))
    return out


def components(P, S):
    """Connected components of S for the comparability graph, canonical order."""
    remaining = set(S)
    comps = []
    while remaining:
        start = min(remaining, key=P.index.__getitem__)
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in list(remaining):
                if y not in comp and P.comparable(x, y):
                    comp.add(y)
                    stack.append(y)
        remaining -= comp
        comps.append(subset(P, comp))
    comps.sort(key=lambda C: _canonical_key(P, C.members))
    return comps


def is_connected(P, S):
    return len(components(P, S)) == 1


def connected_lc_sets(P):
    """Nonempty connected locally closed subsets, ordered by size then lexicographically."""
    return [S for S in locally_closed_sets(P) if is_connected(P, S)]


@dataclass(frozen=True)
class ClosureData:
    cl: LCSet
    cl_boundary: LCSet
    up: LCSet
    up_boundary: LCSet


def closure_ops(P, Y):
    """Closure, closure boundary, up-closure and up-closure boundary of Y."""
    Ys = set(Y)
    cl = down_closure(P, Ys)
    up = up_closure(P, Ys)
    return ClosureData(cl, subset(P, set(cl) - Ys), up, subset(P, set(up) - Ys))


def min_open(P, x):
    """The smallest open set containing x."""
    P.check([x])
    return up_closure(P, [x])


def opposite(P):
    return FinitePoset(P.elements, [(b, a) for a, b in P.cover_pairs()])


def chain_poset(n):
    """Totally ordered space 1 < 2 < ... < n; n is the open point."""
    if n < 1:
        raise EmptyChain("a chain needs at least one point")
    names = [str(i) for i in range(1, n + 1)]
    return FinitePoset(names, list(zip(names, names[1:])))


def d4_poset():
    """Four points with 4 lying above 1, 2 and 3; {4} is the minimal open set."""
    return FinitePoset(["1", "2", "3", "4"], [("1", "4"), ("2", "4"), ("3", "4")])


_PAIR = re.compile(r"([^\s<,;]+)\s*<\s*([^\s<,;]+)")


def parse_poset(text):
    """Parse the poset-spec format.

    Statements are separated by newlines or ';'.  ``elements a b c`` declares
    points, ``cover a<b, c<d`` declares order relations (``a <= b``), and ``#``
    starts a comment.
    """
    elements = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            word, _, rest = stmt.partition(" ")
            rest = rest.strip()
            if word == "elements":
                if elements is not None:
                    raise ParseError("elements declared twice", lineno)
                elements = [t for t in re.split(r"[\s,]+", rest) if t]
                if not elements:
                    raise ParseError("no elements declared", lineno)
                if len(set(elements)) != len(elements):
                    raise ParseError("duplicate element identifier", lineno)
            elif word == "cover":
                if elements is None:
                    raise ParseError("cover before elements", lineno)
                pairs = _PAIR.findall(rest)
                leftover = _PAIR.sub("", rest).replace(",", "").strip()
                if not pairs or leftover:
                    raise ParseError(f"malformed cover statement {stmt!r}", lineno)
                for a, b in pairs:
                    for x in (a, b):
                        if x not in elements:
                            raise UnknownElement(f"line {lineno}: unknown element {x!r}")
                covers.extend(pairs)
            else:
                raise ParseError(f"unknown statement {word!r}", lineno)
    if elements is None:
        raise ParseError("no elements declared")
    return FinitePoset(elements, covers)


def format_poset(P):
    lines = ["elements " + " ".join(P.elements)]
    pairs = P.cover_pairs()
    if pairs:
        lines.append("cover " + ", ".join(f"{a}<{b}" for a, b in pairs))
    return "\n".join(lines) + "\n"
