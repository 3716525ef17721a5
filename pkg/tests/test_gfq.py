import itertools
import random

import pytest

from parabolic_classes.gfq import (
    companion_matrix,
    enumerate_subspaces,
    field_make,
    field_of_order,
    identity,
    in_span,
    irreducible_polys,
    jordan_block_matrix,
    mat_image_in_span,
    mat_inverse,
    mat_mul,
    mat_rank,
    nullspace,
    prime_power,
    prime_powers,
    random_invertible,
    rref,
)
from parabolic_classes.partitions import Partition
from parabolic_classes.poly import phi_poly

P = Partition.from_parts


def test_prime_powers():
    assert prime_powers(10) == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert prime_power(27) == (3, 3)
    assert prime_power(12) is None


def test_field_make_small():
    F2 = field_make(2, 1)
    assert F2.q == 2 and F2.mul[1][1] == 1 and F2.add[1][1] == 0
    F4 = field_make(2, 2)
    assert F4.modulus == (1, 1, 1)
    with pytest.raises(ValueError):
        field_make(4, 1)


def test_f9_modulus_is_least_irreducible_quadratic():
    # lowest-degree-first comparison; a monic quadratic over F_3 is
    # irreducible iff it has no root
    cands = [
        (c0, c1, 1)
        for c0, c1 in itertools.product(range(3), repeat=2)
        if all((x * x + c1 * x + c0) % 3 for x in range(3))
    ]
    assert field_make(3, 2).modulus == min(cands) == (1, 0, 1)


@pytest.mark.parametrize("q", [4, 8, 9])
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    E = range(q)
    add, mul = F.add, F.mul
    for a, b, c in itertools.product(E, repeat=3):
        assert add[add[a][b]][c] == add[a][add[b][c]]
        assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
        assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    for a, b in itertools.product(E, repeat=2):
        assert add[a][b] == add[b][a] and mul[a][b] == mul[b][a]
    for a in E:
        assert add[a][0] == a and mul[a][1] == a and add[a][F.neg[a]] == 0
        if a:
            assert mul[a][F.inv[a]] == 1
    # multiplicative group is cyclic of order q - 1
    def order(a):
        k, x = 1, a
        while x != 1:
            x, k = mul[x][a], k + 1
        return k

    assert max(order(a) for a in range(1, q)) == q - 1


def test_irreducible_examples():
    F2, F3 = field_make(2), field_make(3)
    assert [f.coeffs for f in irreducible_polys(F2, 2)] == [(1, 1, 1)]
    assert {f.coeffs for f in irreducible_polys(F2, 3)} == {(1, 1, 0, 1), (1, 0, 1, 1)}
    assert {f.coeffs for f in irreducible_polys(F3, 1)} == {(2, 1), (1, 1)}  # X - 1, X - 2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("j", [1, 2, 3, 4])
def test_irreducible_count_matches_orbit_polynomial(q, j):
    polys = irreducible_polys(field_of_order(q), j)
    assert len(polys) == phi_poly(j)(q)
    assert [f.coeffs for f in polys] == sorted(f.coeffs for f in polys)


@pytest.mark.parametrize("q", [7, 8, 9])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_irreducible_count_larger_fields(q, j):
    assert len(irreducible_polys(field_of_order(q), j)) == phi_poly(j)(q)


def test_irreducibles_have_no_roots():
    F = field_of_order(9)
    for f in irreducible_polys(F, 2):
        for x in range(9):
            val = (F.add[F.add[F.mul[x][x]][F.mul[f.coeffs[1]][x]]][f.coeffs[0]])
            assert val != 0


def test_jordan_block_examples():
    F5 = field_make(5)
    assert jordan_block_matrix(F5, (F5.neg[3], 1), P([2])) == ((3, 1), (0, 3))
    F2 = field_make(2)
    assert jordan_block_matrix(F2, (1, 1, 1), P([1])) == ((0, 1), (1, 1))
    u = jordan_block_matrix(F2, (1, 1), P([2, 1]))
    assert u == ((1, 1, 0), (0, 1, 0), (0, 0, 1))


def _poly_det(F, M):
    """Determinant of a matrix of polynomials over F by Laplace expansion."""
    def pmul(a, b):
        out = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = F.add[out[i + j]][F.mul[x][y]]
        return out

    def padd(a, b):
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] = F.add[out[i]][x]
        for i, y in enumerate(b):
            out[i] = F.add[out[i]][y]
        return out

    m = len(M)
    if m == 1:
        return M[0][0]
    total = []
    for c in range(m):
        minor = [row[:c] + row[c + 1:] for row in M[1:]]
        term = pmul(M[0][c], _poly_det(F, minor))
        if c % 2:
            term = [F.neg[x] for x in term]
        total = padd(total, term)
    return total


def _poly_pow(F, f, e):
    out = [1]
    for _ in range(e):
        res = [0] * (len(out) + len(f) - 1)
        for i, x in enumerate(out):
            for j, y in enumerate(f):
                res[i + j] = F.add[res[i + j]][F.mul[x][y]]
        out = res
    return out


@pytest.mark.parametrize("q,j,lam", [(2, 2, [2]), (2, 3, [1]), (3, 1, [2, 1]), (3, 2, [1, 1]), (4, 2, [2]), (2, 1, [3, 1])])
def test_jordan_block_char_poly(q, j, lam):
    F = field_of_order(q)
    lam = P(lam)
    for f in irreducible_polys(F, j):
        M = jordan_block_matrix(F, f, lam)
        m = len(M)
        # X I - M as polynomial entries
        XI_M = [[[F.neg[M[r][c]]] + ([1] if r == c else []) for c in range(m)] for r in range(m)]
        det = _poly_det(F, XI_M)
        while det and det[-1] == 0:
            det.pop()
        assert det == _poly_pow(F, list(f.coeffs), lam.size)


def test_jordan_block_is_a_single_cyclic_string():
    F = field_make(2)
    f = (1, 1, 1)
    M = jordan_block_matrix(F, f, P([2]))
    # f(M) has rank 2 and f(M)^2 = 0: one block of nilpotency degree 2
    fM = [[F.add[F.add[x][y]][int(r == c)] for c, (x, y) in enumerate(zip(rM, rM2))]
          for r, (rM, rM2) in enumerate(zip(M, mat_mul(F, M, M)))]
    fM = tuple(tuple(r) for r in fM)
    assert mat_rank(F, fM) == 2
    assert mat_rank(F, mat_mul(F, fM, fM)) == 0


def test_rank_and_stability():
    F2 = field_make(2)
    assert mat_rank(F2, identity(F2, 4)) == 4
    J = ((1, 1), (0, 1))
    assert mat_image_in_span(F2, J, ((1, 0),))
    assert not mat_image_in_span(F2, J, ((0, 1),))


def test_mat_inverse_and_nullspace():
    F = field_of_order(9)
    rng = random.Random(0)
    for _ in range(20):
        A = random_invertible(F, 3, rng)
        assert mat_mul(F, A, mat_inverse(F, A)) == identity(F, 3)
    A = ((1, 2, 0), (2, 4, 0))
    F5 = field_make(5)
    ns = nullspace(F5, A)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) % 5 == 0 for row in A)


def _brute_subspace_count(F, m, k):
    vectors = list(itertools.product(range(F.q), repeat=m))
    spans = set()
    for combo in itertools.combinations(vectors, k):
        rows, piv = rref(F, combo)
        if len(piv) == k:
            spans.add(rows)
    return len(spans)


@pytest.mark.parametrize("q,m,k,expected", [(2, 2, 1, 3), (3, 2, 1, 4), (2, 4, 2, 35)])
def test_subspace_counts(q, m, k, expected):
    F = field_of_order(q)
    subs = list(enumerate_subspaces(F, m, k))
    assert len(subs) == len(set(subs)) == expected
    for rows in subs:
        assert rref(F, rows)[0] == rows


def test_subspace_count_brute():
    F = field_of_order(3)
    assert len(list(enumerate_subspaces(F, 3, 2))) == _brute_subspace_count(F, 3, 2) == 13
    assert _brute_subspace_count(field_of_order(2), 4, 2) == 35


def test_subspaces_containing():
    F = field_of_order(3)
    U = ((1, 1, 0, 0),)
    subs = list(enumerate_subspaces(F, 4, 2, containing=U))
    assert len(subs) == len(set(subs)) == 13
    for rows in subs:
        piv = rref(F, rows)[1]
        assert in_span(F, U[0], rows, piv)


def test_companion_matrix():
    F = field_make(3)
    assert companion_matrix(F, (1, 2, 1)) == ((0, 2), (1, 1))
