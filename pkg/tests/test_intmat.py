from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from filtrated_k import intmat


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_transforms_and_divisibility(A):
    m, n = len(A), len(A[0])
    r = intmat.smith_normal_form(A)
    assert intmat.matmul(intmat.matmul(r.U, A), r.V) == r.S
    assert intmat.matmul(r.U, r.U_inv) == intmat.identity(m)
    assert intmat.matmul(r.V, r.V_inv) == intmat.identity(n)
    d = r.factors
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    for i in range(m):
        for j in range(n):
            if i != j:
                assert r.S[i][j] == 0


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_invariant_factors_match_sympy(A):
    from sympy import ZZ
    want = [abs(int(x)) for x in sympy_invariant_factors(Matrix(A), domain=ZZ) if x != 0]
    assert intmat.invariant_factors(A, len(A), len(A[0])) == want


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_matches_sympy(A):
    assert intmat.rank(A, len(A[0])) == Matrix(A).rank()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_integer_kernel_is_saturated_basis(A):
    n = len(A[0])
    K = intmat.integer_kernel(A, n)
    assert len(K) == n - Matrix(A).rank()
    for v in K:
        assert intmat.matvec(A, v) == [0] * len(A)
    if K:
        # a saturated lattice has gcd of maximal minors equal to 1
        assert intmat.invariant_factors(K, len(K), n) == [1] * len(K)


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve_integer_finds_preimages(A, x):
    x = x[:len(A[0])]
    b = intmat.matvec(A, x)
    y = intmat.solve_integer(A, b, len(A[0]))
    assert y is not None and intmat.matvec(A, y) == b


def test_solve_integer_detects_no_integer_solution():
    assert intmat.solve_integer([[2]], [1], 1) is None


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4, -4, 4))
def test_determinant_matches_sympy(A):
    n = min(len(A), len(A[0]))
    sq = [row[:n] for row in A[:n]]
    assert intmat.determinant(sq) == Matrix(sq).det()


@settings(max_examples=100, deadline=None)
@given(matrices(), st.lists(st.integers(-8, 8), min_size=5, max_size=5))
def test_lattice_membership(A, c):
    n = len(A[0])
    v = [sum(c[i] * A[i][j] for i in range(len(A))) for j in range(n)]
    H = intmat.hnf(A, n)
    coords = intmat.lattice_coords(H, v)
    assert coords is not None
    assert [sum(a * row[j] for a, row in zip(coords, H)) for j in range(n)] == v
    # the sublattice 2H misses the odd multiples of its generators
    if H:
        doubled = [[2 * x for x in row] for row in H]
        assert not intmat.lattice_contains(doubled, H[0])


def test_empty_dimensions():
    assert intmat.mul([], [], 0, 0, 3) == []
    assert intmat.mul([[]], [], 1, 0, 2) == [[0, 0]]
    assert intmat.smith_normal_form([[0, 0], [0, 0]]).factors == []
    assert intmat.xgcd(12, 18)[0] == 6
