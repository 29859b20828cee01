"""Exact integer matrix algorithms.

Matrices are lists of rows of Python ints.  Vectors are lists of ints.
Everything here is exact; no floating point is used anywhere.

>>> smith_normal_form([[2, 4], [6, 8]]).factors
[2, 4]
>>> integer_kernel([[1, 1]], 2)
[[1, -1]]
"""

from dataclasses import dataclass


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def matmul(A, B, inner=None):
    """Product of an m x k and a k x n matrix.  ``inner`` is k when A has no rows."""
    if not A:
        return []
    k = len(A[0]) if inner is None else inner
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * n
        for t in range(k):
            a = row[t]
            if a:
                brow = B[t]
                for j in range(n):
                    if brow[j]:
                        acc[j] += a * brow[j]
        out.append(acc)
    return out


def mul(A, B, m, k, n):
    """Product of an m x k matrix and a k x n matrix, robust to empty dimensions."""
    if k == 0 or m == 0 or n == 0:
        return zeros(m, n)
    return matmul(A, B)


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v) if a and x) for row in A]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A, c):
    return [[c * a for a in row] for row in A]


def is_zero(A):
    return all(not any(row) for row in A)


def block_matrix(blocks, row_sizes, col_sizes):
    """Assemble a matrix from a grid of blocks; ``None`` blocks are zero."""
    out = []
    for bi, rs in enumerate(row_sizes):
        rows = [[] for _ in range(rs)]
        for bj, cs in enumerate(col_sizes):
            blk = blocks[bi][bj]
            for r in range(rs):
                rows[r].extend(blk[r] if blk is not None else [0] * cs)
        out.extend(rows)
    return out


@dataclass
class SNF:
    """Result of a Smith normal form computation, ``U * A * V == S``."""

    S: list
    U: list
    V: list
    U_inv: list
    V_inv: list
    factors: list   # nonzero diagonal entries, each dividing the next

    @property
    def rank(self):
        return len(self.factors)


def smith_normal_form(A, nrows=None, ncols=None):
    """Smith normal form with both unimodular transforms and their inverses.

    Pivoting takes the entry of least absolute value in the remaining block;
    divisibility is repaired by adding the offending row into the pivot row.
    """
    m = len(A) if nrows is None else nrows
    n = (len(A[0]) if A else 0) if ncols is None else ncols
    D = [list(r) for r in A]
    U, Ui, V, Vi = identity(m), identity(m), identity(n), identity(n)

    def row_add(i, j, q):  # row_i += q * row_j
        Di, Dj = D[i], D[j]
        for c in range(n):
            if Dj[c]:
                Di[c] += q * Dj[c]
        Ur, Uj = U[i], U[j]
        for c in range(m):
            if Uj[c]:
                Ur[c] += q * Uj[c]
        for r in range(m):
            if Ui[r][i]:
                Ui[r][j] -= q * Ui[r][i]

    def col_add(i, j, q):  # col_i += q * col_j
        for r in range(m):
            if D[r][j]:
                D[r][i] += q * D[r][j]
        for r in range(n):
            if V[r][j]:
                V[r][i] += q * V[r][j]
        Vj, Vr = Vi[j], Vi[i]
        for c in range(n):
            if Vr[c]:
                Vj[c] -= q * Vr[c]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def col_swap(i, j):
        for r in range(m):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    factors = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = D[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                break
            _, i, j = best
            if i != t:
                row_swap(t, i)
            if j != t:
                col_swap(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    row_add(i, t, -(D[i][t] // p))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    col_add(j, t, -(D[t][j] // p))
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                if any(x % p for x in D[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if best is None:
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for r in range(m):
                Ui[r][t] = -Ui[r][t]
        factors.append(D[t][t])
    return SNF(D, U, V, Ui, Vi, factors)


def invariant_factors(A, nrows=None, ncols=None):
    return smith_normal_form(A, nrows, ncols).factors


def rank(A, ncols=None):
    n = (len(A[0]) if A else 0) if ncols is None else ncols
    return len(hnf(A, n))


def _echelon(rows, n, reduce_above):
    """In-place integer row echelon form; returns the list of pivot columns."""
    r = 0
    pivots = []
    for c in range(n):
        while True:
            nz = [k for k in range(r, len(rows)) if rows[k][c]]
            if not nz:
                break
            k0 = min(nz, key=lambda k: abs(rows[k][c]))
            rows[r], rows[k0] = rows[k0], rows[r]
            prow = rows[r]
            p = prow[c]
            done = True
            for k in range(r + 1, len(rows)):
                row = rows[k]
                if not row[c]:
                    continue
                q = row[c] // p
                for t in range(c, len(row)):
                    if prow[t]:
                        row[t] -= q * prow[t]
                if row[c]:
                    done = False
            if done:
                break
        if r < len(rows) and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            if reduce_above:
                p = rows[r][c]
                prow = rows[r]
                for k in range(r):
                    q = rows[k][c] // p
                    if q:
                        row = rows[k]
                        for t in range(c, len(row)):
                            if prow[t]:
                                row[t] -= q * prow[t]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
    return pivots


def hnf(vectors, n):
    """Row Hermite normal form: a canonical basis of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    pivots = _echelon(rows, n, True)
    return rows[:len(pivots)]


def pivot_of(row):
    for c, x in enumerate(row):
        if x:
            return c
    return None


def lattice_coords(basis, v):
    """Coordinates of ``v`` in an echelon basis, or ``None`` when ``v`` is outside the lattice."""
    v = list(v)
    out = []
    for row in basis:
        c = pivot_of(row)
        if v[c] % row[c]:
            return None
        q = v[c] // row[c]
        out.append(q)
        if q:
            for t in range(c, len(v)):
                if row[t]:
                    v[t] -= q * row[t]
    if any(v):
        return None
    return out


def lattice_contains(basis, v):
    return lattice_coords(basis, v) is not None


def integer_kernel(A, ncols):
    """A basis (in Hermite form) of ``{x in Z^ncols : A x = 0}``."""
    m = len(A)
    if m == 0:
        return identity(ncols)
    rows = []
    for j in range(ncols):
        rows.append([A[i][j] for i in range(m)] + [1 if t == j else 0 for t in range(ncols)])
    pivots = _echelon(rows, m, False)
    ker = [row[m:] for row in rows[len(pivots):]]
    return hnf(ker, ncols)


def solve_integer(A, b, ncols):
    """Some integer ``x`` with ``A x = b``, or ``None``."""
    m = len(A)
    aug = [list(A[i]) + [-b[i]] for i in range(m)]
    ker = integer_kernel(aug, ncols + 1)
    # the last coordinate of kernel vectors generates an ideal; we need 1 in it
    coeffs = [v[ncols] for v in ker]
    g, combo = _gcd_combination(coeffs)
    if g != 1:
        return None
    x = [0] * ncols
    for c, v in zip(combo, ker):
        if c:
            for t in range(ncols):
                x[t] += c * v[t]
    return x


def _gcd_combination(values):
    g, combo = 0, [0] * len(values)
    for i, a in enumerate(values):
        if a == 0:
            continue
        g2, s, t = xgcd(g, a)
        combo = [s * c for c in combo]
        combo[i] += t
        g = g2
    if g < 0:
        g, combo = -g, [-c for c in combo]
    return g, combo


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def determinant(A):
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
