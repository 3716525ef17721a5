import pytest

from parabolic_classes import k_eval, k_poly
from parabolic_classes.classes import parse_psi
from parabolic_classes.flags import all_dimension_vectors, f_value_poly
from parabolic_classes.kcount import (
    associated_vectors,
    check_association_invariance,
    class_number_poly,
)
from parabolic_classes.poly import RationalPoly

Q = RationalPoly((0, 1))


def test_k_examples():
    assert k_poly(2, (1, 2)).k_poly == 2 * Q**2 - 2 * Q
    assert k_poly(2, (2,)).k_poly == Q**2 - 1
    assert k_poly(3, (1, 2, 3)).k_poly == (Q - 1) * (Q**3 + 6 * Q**2 - Q - 3)
    assert k_poly(4, (1, 2, 3, 4)).k_poly == (Q - 1) * (
        Q**6 + 3 * Q**5 + 9 * Q**4 + 19 * Q**3 - 9 * Q**2 - 18 * Q + 5
    )


def test_k_eval_examples():
    assert k_eval(2, (1, 2), 2) == 4
    assert k_eval(3, (1, 2, 3), 2) == 27
    assert k_eval(2, (2,), 5) == 24


def test_report_contents():
    rep = k_poly(2, (1, 2))
    assert rep.k_coeffs == [0, -2, 2]
    assert rep.factored_hint() == "(q - 1)(2q)"
    total = RationalPoly(())
    for t in rep.per_psi:
        total = total + t.contribution
    assert total == rep.k_poly
    obj = rep.to_json()
    assert list(obj) == ["n", "d", "k_coeffs", "factored_hint", "per_psi"]
    assert len(obj["per_psi"]) == 4


def test_per_psi_terms_need_not_be_integral():
    rep = k_poly(2, (2,))
    assert any(not t.contribution.is_integral() for t in rep.per_psi)


def test_bad_dimension_vector():
    with pytest.raises(ValueError):
        k_poly(3, (1, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_whole_group_gives_class_number(n):
    assert k_poly(n, (n,)).k_poly == class_number_poly(n)


def test_class_numbers():
    assert class_number_poly(2) == Q**2 - 1
    assert class_number_poly(3) == Q**3 - Q
    assert class_number_poly(4) == Q**4 - Q


def test_associated_vectors():
    assert associated_vectors((1, 3)) == [(1, 3), (2, 3)]
    assert associated_vectors((1, 2)) == [(1, 2)]
    assert len(associated_vectors((1, 3, 6))) == 6


def test_association_examples():
    assert check_association_invariance(3, (1, 3)).holds
    assert check_association_invariance(2, (1, 2)).holds
    assert len(check_association_invariance(2, (1, 2)).witness) == 1


@pytest.mark.parametrize("label", [
    "1:((2)); 2:((1^2)); 3:((1))",
    "3:((1)^3)",
    "1:((1)); 2:((1)^2); 4:((1))",
    "1:((1^2)); 7:((1))",
])
def test_association_gl9_three_blocks(label):
    # block sizes {4, 3, 2} against {3, 4, 2}; the full k for n = 9 is out of reach
    psi = parse_psi(label)
    assert f_value_poly(psi, (4, 7, 9)) == f_value_poly(psi, (3, 7, 9))


@pytest.mark.parametrize("n", range(1, 6))
def test_integral_and_divisible(n):
    for d in all_dimension_vectors(n):
        p = k_poly(n, d).k_poly
        assert p.is_integral() and p(1) == 0
        for q0 in (2, 3, 4, 5):
            assert k_eval(n, d, q0) > 0


N6_QUICK = [(1, 6), (1, 2, 6), (1, 3, 6), (1, 4, 6), (1, 5, 6), (1, 2, 3, 6), (1, 2, 4, 6), (2, 3, 4, 5, 6)]


@pytest.mark.slow
@pytest.mark.parametrize("d", N6_QUICK)
def test_n6_integral(d):
    p = k_poly(6, d).k_poly
    assert p.is_integral() and p(1) == 0


@pytest.mark.slow
def test_n6_association_pairs():
    assert k_poly(6, (1, 2, 6)).k_poly == k_poly(6, (1, 5, 6)).k_poly
    assert k_poly(6, (1, 3, 6)).k_poly == k_poly(6, (1, 4, 6)).k_poly


@pytest.mark.slow
def test_n6_complete_flags():
    p = k_poly(6, (1, 2, 3, 4, 5, 6)).k_poly
    assert p.is_integral() and p(1) == 0
