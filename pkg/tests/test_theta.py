"""Theta constructors, product expansions, and the generating-function oracles."""

import pytest

from theta_forge.counting import count_N, count_t_prime
from theta_forge.series import SeriesError, series_equal
from theta_forge.theta import (
    DiagonalForm,
    as_form,
    jacobi_cube_sides,
    n_series,
    phi,
    phi_neg,
    phi_pow,
    product_phi_neg,
    product_psi,
    psi,
    psi_pow,
    t_prime_series,
)


def test_phi_start():
    assert phi(5).coeffs == (1, 2, 0, 0, 2)
    assert phi(0).precision == 0
    assert phi(10).coeff(9) == 2


def test_psi_start():
    assert psi(7).coeffs == (1, 1, 0, 1, 0, 0, 1)
    assert psi(11).coeff(10) == 1
    assert psi(11).coeff(2) == 0


def test_phi_neg_signs():
    assert phi_neg(5).coeffs == (1, -2, 0, 0, 2)
    p, pn = phi(100), phi_neg(100)
    assert all(p.coeff(n) == pn.coeff(n) for n in range(0, 100, 2))


def test_phi_neg_equals_phi_minus_4q_psi_q8():
    P = 500
    rhs = phi(P) - 4 * psi_pow(8, P).shift(1)
    assert series_equal(phi_neg(P), rhs, P).equal


def test_product_psi_matches_psi():
    assert series_equal(product_psi(300), psi(300), 300).equal


def test_product_psi_small():
    assert product_psi(1).coeffs == (1,)
    # hand expansion to order 4: (1-q^2)^2 (1+q+q^2+q^3)(1+q^2)... collapses to psi
    assert product_psi(4).coeffs == (1, 1, 0, 1)


def test_product_phi_neg_matches_phi_neg():
    assert series_equal(product_phi_neg(300), phi_neg(300), 300).equal


def test_product_phi_neg_small():
    assert product_phi_neg(1).coeffs == (1,)
    assert product_phi_neg(3).coeffs == (1, -2, 0)


def test_product_rejects_zero_precision():
    with pytest.raises(SeriesError):
        product_psi(0)
    with pytest.raises(SeriesError):
        product_phi_neg(0)


def test_jacobi_cube_identity():
    left, right = jacobi_cube_sides(1000)
    assert series_equal(left, right, 1000).equal


def test_jacobi_right_side_values():
    _, right = jacobi_cube_sides(12)
    assert right.coeffs[:4] == (1, -3, 0, 5)
    assert right.coeff(6) == -7


def test_n_series_examples():
    assert n_series((1, 1, 1), 4).coeff(1) == 6
    assert n_series((1,), 3).coeff(0) == 1
    s = n_series((1, 1, 8), 20)
    assert s.coeff(18) == count_N((1, 1, 8), 18) == 20


def test_t_prime_series_examples():
    s = t_prime_series((1,), 30)
    for j in range(8):
        assert s.coeff(j * (j + 1) // 2) == 1
    assert t_prime_series((1, 3, 9), 5).coeff(0) == 1


def test_t_prime_series_ach_cross_check():
    # 12 t'(1,1,2;n) = N(1,1,2;8n+4): the multiplicity constant at work
    P = 100
    tp = t_prime_series((1, 1, 2), P)
    big = n_series((1, 1, 2), 8 * P)
    for n in range(P):
        assert 12 * tp.coeff(n) == big.coeff(8 * n + 4)


SAMPLE_FORMS = [(1,), (4,), (1, 2), (3, 5), (1, 1, 2), (1, 3, 9), (2, 3, 7), (1, 1, 8),
                (1, 2, 3, 4), (1, 1, 5, 8)]


@pytest.mark.parametrize("form", SAMPLE_FORMS)
def test_n_series_matches_enumeration(form):
    P = 120
    s = n_series(form, P)
    for n in range(P):
        assert s.coeff(n) == count_N(form, n), (form, n)


@pytest.mark.parametrize("form", SAMPLE_FORMS)
def test_t_prime_series_matches_enumeration(form):
    P = 120
    s = t_prime_series(form, P)
    for n in range(P):
        assert s.coeff(n) == count_t_prime(form, n), (form, n)


def test_splitting_identity_refined_to_500():
    P = 500
    lhs = phi(P)
    rhs = (phi_pow(16, P)
           + 2 * psi_pow(32, P).shift(4)
           + 2 * psi_pow(8, P).shift(1))
    assert series_equal(lhs, rhs, P).equal


def test_psi_psi3_splitting_to_500():
    P = 500
    lhs = psi(P) * psi_pow(3, P)
    rhs = phi_pow(6, P) * psi_pow(4, P) + (phi_pow(2, P) * psi_pow(12, P)).shift(1)
    assert series_equal(lhs, rhs, P).equal


def test_phi_squared_splittings_to_500():
    P = 500
    lhs = phi(P) * phi(P)
    rhs1 = phi_pow(2, P) * phi_pow(2, P) + 4 * (psi_pow(4, P) * psi_pow(4, P)).shift(1)
    rhs2 = (phi_pow(4, P) * phi_pow(4, P)
            + 4 * (psi_pow(8, P) * psi_pow(8, P)).shift(2)
            + 4 * (psi_pow(4, P) * psi_pow(4, P)).shift(1))
    assert series_equal(lhs, rhs1, P).equal
    assert series_equal(lhs, rhs2, P).equal


def test_diagonal_form_validation():
    with pytest.raises(ValueError):
        DiagonalForm(())
    with pytest.raises(ValueError):
        DiagonalForm((0, 1))
    with pytest.raises(ValueError):
        DiagonalForm((1, -3))
    f = as_form([1, 1, 8])
    assert f.coeffs == (1, 1, 8) and len(f) == 3 and str(f) == "(1,1,8)"
