"""Series-core: construction, arithmetic, dissection, and the windowing rules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_forge.series import (
    CapacityError,
    PrecisionError,
    SeriesError,
    TruncatedSeries,
    one_series,
    series_add,
    series_coeff,
    series_equal,
    series_from_coeffs,
    series_mul,
    series_residue_extract,
    series_scale,
    series_shift,
    series_substitute_power,
    series_truncate,
    zero_series,
)
from theta_forge.theta import phi, psi, psi_pow


def brute_mul_coeff(a, b, n):
    """Naive double-loop convolution, the independent oracle for series_mul."""
    return sum(a[i] * b[n - i] for i in range(n + 1) if i < len(a) and n - i < len(b))


series_lists = st.lists(st.integers(min_value=-50, max_value=50), min_size=0, max_size=25)


def mk(coeffs):
    return series_from_coeffs(coeffs, len(coeffs))


# --- construction ----------------------------------------------------------

def test_from_coeffs_basic():
    s = series_from_coeffs([1, 2, 0, 0], 4)
    assert s.coeff(0) == 1 and s.coeff(1) == 2
    assert s.precision == 4


def test_from_coeffs_empty():
    s = series_from_coeffs([], 0)
    assert s.precision == 0 and s.coeffs == ()


def test_from_coeffs_matches_cube_identity_start():
    # the alternating odd coefficients 1, -3, 0, 5 at triangular exponents
    s = series_from_coeffs([1, -3, 0, 5], 4)
    from theta_forge.theta import jacobi_cube_sides

    _, right = jacobi_cube_sides(4)
    assert s.coeffs == right.coeffs


def test_from_coeffs_length_mismatch():
    with pytest.raises(SeriesError):
        series_from_coeffs([1, 2], 3)


def test_rejects_non_integer_coefficients():
    with pytest.raises(SeriesError):
        series_from_coeffs([1.5, 2], 2)


# --- add -------------------------------------------------------------------

def test_add_splitting_identity():
    # phi(q^4) + 2q psi(q^8) agrees with phi(q)
    P = 200
    lhs = phi(P)
    rhs = series_add(
        series_substitute_power(phi(50), 4).truncate(P),
        series_shift(series_scale(psi_pow(8, P), 2), 1),
    )
    assert series_equal(lhs, rhs, P).equal


def test_add_zero_identity():
    a = mk([3, -1, 4])
    out = series_add(a, zero_series(3))
    assert out.coeffs == a.coeffs


def test_add_cancellation():
    out = series_add(mk([1, 1]), mk([0, -1]))
    assert out.coeffs == (1, 0)


def test_add_takes_min_precision():
    out = series_add(mk([1, 2, 3]), mk([1, 1]))
    assert out.precision == 2 and out.coeffs == (2, 3)


# --- mul ---------------------------------------------------------------

def test_mul_phi_squared_counts_two_square_representations():
    # oracle: enumerate x^2 + y^2 = n over |x|, |y| <= 2
    expected = []
    for n in range(3):
        expected.append(sum(1 for x in range(-2, 3) for y in range(-2, 3)
                            if x * x + y * y == n))
    assert expected == [1, 4, 4]
    out = series_mul(phi(3), phi(3))
    assert list(out.coeffs) == expected


def test_mul_one_identity():
    a = mk([5, 0, -2, 7])
    assert series_mul(a, one_series(4)).coeffs == a.coeffs


def test_mul_psi_squared_counts_triangular_pairs():
    tri = [0, 1, 3, 6]
    expected = [sum(1 for u in tri for v in tri if u + v == n) for n in range(4)]
    assert expected == [1, 2, 1, 2]
    out = series_mul(psi(4), psi(4))
    assert list(out.coeffs) == expected


@settings(max_examples=150)
@given(series_lists, series_lists)
def test_mul_matches_naive_convolution(xs, ys):
    out = series_mul(mk(xs), mk(ys))
    assert out.precision == min(len(xs), len(ys))
    for n in range(out.precision):
        assert out.coeffs[n] == brute_mul_coeff(xs, ys, n)


@settings(max_examples=80)
@given(series_lists, series_lists)
def test_add_and_mul_commute(xs, ys):
    a, b = mk(xs), mk(ys)
    assert series_add(a, b).coeffs == series_add(b, a).coeffs
    assert series_mul(a, b).coeffs == series_mul(b, a).coeffs


@settings(max_examples=60)
@given(series_lists, series_lists, series_lists)
def test_mul_associative_up_to_min_precision(xs, ys, zs):
    a, b, c = mk(xs), mk(ys), mk(zs)
    left = series_mul(series_mul(a, b), c)
    right = series_mul(a, series_mul(b, c))
    assert left.coeffs == right.coeffs


# --- scale / shift / substitute -------------------------------------------

def test_scale_examples():
    assert series_scale(mk([1, 2]), 3).coeffs == (3, 6)
    assert series_scale(mk([4, -1, 9]), 0).coeffs == (0, 0, 0)


def test_scale_then_shift_matches_dissection():
    # 12 q^2 psi(q^4)^2 psi(q^8), reindexed q^4 -> q, is the 4n+2 slice of phi^3
    P = 240
    phi3 = phi(P) * phi(P) * phi(P)
    slice42 = series_residue_extract(phi3, 4, 2)
    expected = 12 * (psi(P) * psi(P) * psi_pow(2, P))
    order = min(slice42.precision, expected.precision)
    assert series_equal(slice42, expected, order).equal


def test_shift_examples():
    out = series_shift(mk([1, 1]), 1)
    assert out.coeffs == (0, 1, 1) and out.precision == 3
    a = mk([2, 3, 4])
    assert series_shift(a, 0).coeffs == a.coeffs


def test_shifted_psi_q8_coefficient():
    s = series_scale(series_shift(series_substitute_power(psi(4), 8), 1), 2)
    assert s.coeff(1) == 2


def test_substitute_examples():
    out = series_substitute_power(mk([1, 2, 2]), 2)
    assert out.coeffs == (1, 0, 2, 0, 2, 0) and out.precision == 6
    a = mk([7, 1])
    assert series_substitute_power(a, 1) is a


def test_substitute_rebuilds_phi():
    P = 500
    rebuilt = series_add(
        series_truncate(series_substitute_power(phi(125), 4), P),
        series_shift(series_scale(series_truncate(series_substitute_power(psi(63), 8), P), 2), 1),
    )
    assert series_equal(phi(P), rebuilt, P).equal


def test_substitute_capacity_guard():
    with pytest.raises(CapacityError):
        series_substitute_power(mk([1] * 100), 10 ** 7)


# --- residue extraction ----------------------------------------------------

def test_extract_is_identity_at_m1():
    a = mk([4, 5, 6])
    assert series_residue_extract(a, 1, 0).coeffs == a.coeffs


def test_extract_phi_cubed_4n_plus_2():
    P = 200
    phi3 = phi(P) * phi(P) * phi(P)
    got = series_residue_extract(phi3, 4, 2)
    want = 12 * (psi(P) * psi(P) * psi_pow(2, P))
    order = min(got.precision, want.precision)
    assert order >= 40
    assert series_equal(got, want, order).equal


def test_extract_8n_plus_2_slice():
    from theta_forge.theta import phi_pow

    P = 400
    lhs = series_residue_extract(phi(P) * phi(P) * phi_pow(8, P), 8, 2)
    rhs = 4 * (phi(P) * psi(P) * psi(P))
    order = min(lhs.precision, rhs.precision)
    assert series_equal(lhs, rhs, order).equal


def test_extract_precision_arithmetic():
    a = mk([0, 1, 2, 3, 4, 5, 6])
    out = series_residue_extract(a, 3, 1)
    assert out.coeffs == (1, 4) and out.precision == 2
    assert series_residue_extract(mk([1]), 3, 2).precision == 0


# --- coeff / equality -------------------------------------------------------

def test_coeff_values():
    assert series_coeff(phi(10), 0) == 1
    assert series_coeff(phi(10), 1) == 2
    phi3 = phi(4) * phi(4) * phi(4)
    assert series_coeff(phi3, 1) == 6


def test_coeff_out_of_window_is_an_error_not_zero():
    with pytest.raises(PrecisionError):
        series_coeff(phi(10), 10)


def test_equal_psi_squared_identity_to_500():
    P = 500
    rep = series_equal(psi(P) * psi(P), phi(P) * psi_pow(2, P), P)
    assert rep.equal


def test_equal_reflexive():
    a = mk([1, -2, 3])
    assert series_equal(a, a, 3).equal


def test_equal_reports_first_mismatch():
    rep = series_equal(phi(2), psi(2), 2)
    assert not rep.equal
    assert rep.first_mismatch == 1 and rep.lhs == 2 and rep.rhs == 1


def test_equal_order_beyond_precision_raises():
    with pytest.raises(PrecisionError):
        series_equal(mk([1, 2]), mk([1, 2, 3]), 3)


# --- window bookkeeping -----------------------------------------------------

def test_zero_precision_propagates():
    empty = zero_series(0)
    assert series_add(empty, mk([1, 2])).precision == 0
    assert series_mul(empty, mk([1, 2])).precision == 0
    assert series_substitute_power(empty, 5).precision == 0


def test_truncate_cannot_extend():
    with pytest.raises(PrecisionError):
        series_truncate(mk([1]), 5)


@settings(max_examples=60)
@given(series_lists, st.integers(min_value=1, max_value=6))
def test_dissection_partitions_the_series(xs, m):
    a = mk(xs)
    pieces = [
        series_shift(series_substitute_power(series_residue_extract(a, m, r), m), r)
        for r in range(m)
    ]
    if not pieces:
        return
    total = pieces[0]
    for p in pieces[1:]:
        total = series_add(total, p)
    order = min(total.precision, a.precision)
    if order >= 1:
        assert series_equal(total, a, order).equal


def test_series_values_are_immutable():
    s = mk([1, 2, 3])
    with pytest.raises(AttributeError):
        s.coeffs = (9,)
    with pytest.raises(AttributeError):
        s.precision = 7
