"""End-to-end acceptance checks, one test per criterion.

Timed criteria start from cold caches so the measured time covers the
interpolation-node counts as well as the assembly.
"""

import itertools
import time
from fractions import Fraction

import pytest

from parabolic_classes import flags, kcount
from parabolic_classes.classes import enumerate_psi, parse_psi, psi_class_size
from parabolic_classes.flags import (
    all_dimension_vectors,
    enumerate_e_matrices,
    f_value_poly,
    interpolation_nodes,
    stable_flag_count_poly,
)
from parabolic_classes.gfq import field_of_order, irreducible_polys, jordan_block_matrix, prime_powers
from parabolic_classes.kcount import associated_vectors, k_eval, k_poly
from parabolic_classes.oracle import enumerate_gamma, fixed_flag_count, k_burnside, k_oracle
from parabolic_classes.partitions import enumerate_partitions
from parabolic_classes.poly import RationalPoly, phi_poly

Q = RationalPoly((0, 1))
GL9 = "1:((2)); 2:((1^2)); 3:((1))"


@pytest.fixture
def cold():
    flags._stable_poly.cache_clear()
    flags._counter.cache_clear()
    flags.f_value_poly.cache_clear()
    kcount._k_report.cache_clear()
    start = time.perf_counter()
    yield lambda: time.perf_counter() - start


@pytest.mark.criterion(1, "k for GL_2: Borel and the whole group")
def test_criterion_1(cold):
    assert k_poly(2, (1, 2)).k_poly == 2 * Q**2 - 2 * Q
    assert k_poly(2, (2,)).k_poly == Q**2 - 1
    assert cold() < 1


@pytest.mark.criterion(2, "k for the Borel of GL_3 and GL_4")
def test_criterion_2(cold):
    assert k_poly(3, (1, 2, 3)).k_poly == (Q - 1) * (Q**3 + 6 * Q**2 - Q - 3)
    assert k_poly(4, (1, 2, 3, 4)).k_poly == (Q - 1) * (
        Q**6 + 3 * Q**5 + 9 * Q**4 + 19 * Q**3 - 9 * Q**2 - 18 * Q + 5
    )
    assert cold() < 120


@pytest.mark.criterion(3, "GL_9 fixed-flag value and its three e-matrices")
def test_criterion_3(cold):
    psi = parse_psi(GL9)
    assert f_value_poly(psi, (4, 7, 9)) == 2 * Q**2 + 3
    got = sorted(e.to_json() for e in enumerate_e_matrices(psi, (4, 7, 9)))
    expected = sorted([
        [[1, 2, 2], [0, 1, 2], [1, 1, 1]],
        [[0, 0, 2], [2, 2, 2], [0, 1, 1]],
        [[2, 2, 2], [1, 1, 2], [0, 1, 1]],
    ])
    assert got == expected
    assert cold() < 5


@pytest.mark.criterion(4, "GL_2 table of class sizes and Borel fixed-flag values")
def test_criterion_4():
    half = RationalPoly((Fraction(1, 2),))
    table = {
        "1:((1^2))": (Q - 1, Q + 1),
        "1:((2))": (Q - 1, RationalPoly((1,))),
        "1:((1)^2)": ((Q - 1) * (Q - 2) * half, RationalPoly((2,))),
        "2:((1))": ((Q**2 - Q) * half, RationalPoly(())),
    }
    rows = {t.psi: (t.class_size, t.f_value) for t in k_poly(2, (1, 2)).per_psi}
    assert len(rows) == 4
    for label, pair in table.items():
        assert rows[parse_psi(label)] == pair


def _grid():
    for n in (2, 3):
        for d in all_dimension_vectors(n):
            for q0 in (2, 3, 4, 5):
                yield n, tuple(d), q0
    for d in ((1, 2, 3, 4), (2, 4)):
        for q0 in (2, 3):
            yield 4, d, q0


@pytest.mark.criterion(5, "polynomial against brute-force oracle on the verification grid")
def test_criterion_5(cold):
    mismatches = [
        (n, d, q0)
        for n, d, q0 in _grid()
        if k_eval(n, d, q0) != k_oracle(field_of_order(q0), n, d)
    ]
    assert mismatches == []
    assert cold() < 600


@pytest.mark.criterion(6, "Burnside count agrees on GL_2(2), GL_2(3), GL_3(2)")
def test_criterion_6():
    for n, q0 in ((2, 2), (2, 3), (3, 2)):
        F = field_of_order(q0)
        for d in all_dimension_vectors(n):
            assert k_burnside(F, n, d) == k_oracle(F, n, d) == k_eval(n, d, q0), (n, d, q0)


@pytest.mark.criterion(7, "integer coefficients and divisibility by q - 1 for n <= 5")
def test_criterion_7():
    for n in range(1, 6):
        for d in all_dimension_vectors(n):
            p = k_poly(n, d).k_poly
            assert p.is_integral(), (n, d)
            assert p(1) == 0, (n, d)


@pytest.mark.criterion(8, "associated dimension vectors give equal k for n <= 5")
def test_criterion_8():
    for n in range(1, 6):
        for d in all_dimension_vectors(n):
            for other in associated_vectors(d):
                assert k_poly(n, other).k_poly == k_poly(n, d).k_poly, (d, other)


@pytest.mark.criterion(9, "held-out stable counts, irreducible counts, class counts")
def test_criterion_9(cold):
    for m in range(1, 5):
        for lam in enumerate_partitions(m):
            for ft in all_dimension_vectors(m):
                poly = stable_flag_count_poly(lam, ft)
                nodes = interpolation_nodes(ft)
                held_out = [x for x in prime_powers(len(nodes) + 2) if x not in nodes]
                assert len(held_out) == 2
                for q0 in held_out:
                    F = field_of_order(q0)
                    u = jordan_block_matrix(F, (F.neg[1], 1), lam)
                    assert poly(q0) == fixed_flag_count(F, u, ft), (lam, ft, q0)
    for q0, j in itertools.product((2, 3, 4, 5), range(1, 5)):
        assert len(irreducible_polys(field_of_order(q0), j)) == phi_poly(j)(q0)
    for n, q0 in itertools.product(range(1, 5), (2, 3)):
        expected = sum(psi_class_size(psi)(q0) for psi in enumerate_psi(n))
        assert len(list(enumerate_gamma(field_of_order(q0), n))) == expected
    assert cold() < 300
