"""Counting oracles, closed-form arithmetic, and backend agreement.

The reference counters here are deliberately dumb nested loops, written
independently of the package, so they can arbitrate between the enumeration
oracles, the batch vectors, and the series route.
"""

from functools import lru_cache
from math import isqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_forge import backends
from theta_forge.backends import (
    _square_count_vec_np,
    _tri_count_vec_np,
    square_count_vec,
    tri_count_vec,
)
from theta_forge.counting import (
    FactoredInteger,
    c_constant,
    class_number,
    count_N,
    count_N_vector,
    count_R,
    count_t,
    count_t_prime,
    count_t_prime_vector,
    count_t_vector,
    divisor_T,
    factorize,
    gauss_r3,
    hurwitz_r3_square,
    is_square,
    is_squarefree,
    kronecker,
    r3,
)
from theta_forge.theta import psi, psi_pow


@lru_cache(maxsize=None)
def ref_N(form, n):
    if not form:
        return 1 if n == 0 else 0
    a = form[0]
    return sum((1 if x == 0 else 2) * ref_N(form[1:], n - a * x * x)
               for x in range(isqrt(n // a) + 1))


@lru_cache(maxsize=None)
def ref_tnat(form, n):
    if not form:
        return 1 if n == 0 else 0
    a = form[0]
    total = 0
    j = 0
    while a * j * (j + 1) // 2 <= n:
        total += ref_tnat(form[1:], n - a * j * (j + 1) // 2)
        j += 1
    return total


small_forms = st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=4)


# --- enumeration oracles -----------------------------------------------------

def test_count_N_examples():
    assert count_N((1, 1, 1), 1) == 6
    assert count_N((5,), 0) == 1
    assert count_N((1, 1, 1), 9) == 30


def test_count_t_examples():
    assert count_t((1, 1, 8), 1) == 16
    assert count_t_prime((1,), 0) == 1
    assert count_t((1,), 0) == 2


def test_odd_restricted_square_count_equals_t():
    # a x^2 + b y^2 + c z^2 = 8n + a + b + c over odd x, y, z
    a, b, c = 1, 2, 3
    for n in range(51):
        m = 8 * n + a + b + c
        odd_count = 0
        for x in range(-isqrt(m), isqrt(m) + 1):
            if x % 2 == 0:
                continue
            for y in range(-isqrt(m), isqrt(m) + 1):
                if y % 2 == 0:
                    continue
                rest = m - a * x * x - b * y * y
                if rest < 0 or rest % c:
                    continue
                z = isqrt(rest // c)
                if c * z * z == rest and z % 2:
                    odd_count += 2  # +-z, both odd
        assert odd_count == count_t((a, b, c), n), n


@settings(max_examples=60, deadline=None)
@given(small_forms, st.integers(min_value=0, max_value=40))
def test_count_N_matches_reference(form, n):
    assert count_N(tuple(form), n) == ref_N(tuple(form), n)


@settings(max_examples=60, deadline=None)
@given(small_forms, st.integers(min_value=0, max_value=40))
def test_count_t_prime_matches_reference(form, n):
    assert count_t_prime(tuple(form), n) == ref_tnat(tuple(form), n)


@settings(max_examples=60, deadline=None)
@given(small_forms, st.integers(min_value=0, max_value=30))
def test_t_is_2k_t_prime(form, n):
    form = tuple(form)
    assert count_t(form, n) == 2 ** len(form) * count_t_prime(form, n)


def test_r3_examples():
    assert r3(1) == 6
    assert r3(7) == 0
    assert r3(5) == 24 == 12 * class_number(-20)


# --- batch vectors -----------------------------------------------------------

@pytest.mark.parametrize("form", [(1,), (1, 2), (1, 1, 8), (2, 3, 7), (1, 2, 3, 4)])
def test_square_vector_matches_enumeration(form, m_max=150):
    vec = count_N_vector(form, m_max)
    for n in range(m_max + 1):
        assert int(vec[n]) == ref_N(form, n), (form, n)


@pytest.mark.parametrize("form", [(1,), (1, 2), (1, 1, 6), (1, 3, 9), (1, 2, 6, 6)])
def test_tri_vectors_match_enumeration(form, m_max=150):
    tp = count_t_prime_vector(form, m_max)
    tz = count_t_vector(form, m_max)
    for n in range(m_max + 1):
        assert int(tp[n]) == ref_tnat(form, n), (form, n)
        assert int(tz[n]) == 2 ** len(form) * ref_tnat(form, n), (form, n)


@pytest.mark.parametrize("form", [(1, 1, 8), (1, 2, 3), (2, 5), (1, 1, 2, 4)])
def test_numpy_fallback_agrees_with_selected_backend(form):
    m_max = 400
    assert np.array_equal(square_count_vec(form, m_max), _square_count_vec_np(form, m_max))
    for weight in (1, 2):
        assert np.array_equal(
            tri_count_vec(form, m_max, over_integers=(weight == 2)),
            _tri_count_vec_np(form, m_max, weight),
        )


def test_vector_overflow_guard():
    with pytest.raises(OverflowError):
        square_count_vec((1,) * 8, 10 ** 7)
    with pytest.raises(OverflowError):
        square_count_vec((1,), 10 ** 9)  # vector length roof


def test_point_kernels_agree_with_python_paths():
    for form in [(1, 2), (1, 1, 8), (1, 2, 3, 4)]:
        for n in (0, 1, 17, 99, 256):
            fast_sq = backends.square_count_point(form, n)
            fast_tri = backends.tri_count_point(form, n)
            if fast_sq is not None:
                assert fast_sq == ref_N(form, n)
            if fast_tri is not None:
                assert fast_tri == ref_tnat(form, n)


# --- constants and symbols ----------------------------------------------------

def test_c_constant_examples():
    assert c_constant((1, 1, 2)) == 12
    assert c_constant((5, 6, 7)) == 8
    assert c_constant((1, 1, 1, 1)) == 24


def test_kronecker_examples():
    assert kronecker(-7, 7) == 0
    assert all(kronecker(a, 1) == 1 for a in range(-9, 10))
    assert kronecker(-7, 3) == -1


def test_kronecker_euler_criterion():
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    for p in primes:
        for a in range(-40, 41):
            euler = pow(a % p, (p - 1) // 2, p)
            expected = 0 if a % p == 0 else (1 if euler == 1 else -1)
            assert kronecker(a, p) == expected, (a, p)


def test_kronecker_multiplicative_in_modulus():
    for a in range(-20, 21):
        for m1 in range(1, 16):
            for m2 in range(1, 16):
                assert kronecker(a, m1 * m2) == kronecker(a, m1) * kronecker(a, m2)


def test_kronecker_rule_at_two():
    for a in range(-30, 31):
        if a % 2 == 0:
            assert kronecker(a, 2) == 0
        elif a % 8 in (1, 7):
            assert kronecker(a, 2) == 1
        else:
            assert kronecker(a, 2) == -1


def test_divisor_T_examples():
    assert divisor_T(1) == 1
    assert divisor_T(7) == 1  # (−7|1) + (−7|7) = 1 + 0
    assert divisor_T(2) == 1  # odd divisors of 2: just 1


def test_divisor_T_is_the_psi_psi7_coefficient():
    P = 300
    s = (psi(P) * psi_pow(7, P)).shift(1)
    for n in range(1, P):
        assert s.coeff(n) == divisor_T(n), n


def test_count_R_examples():
    assert count_R(7) == 2
    assert count_R(8) == 4
    assert count_R(2) == 0


def test_count_R_closed_form():
    def dsum(m):
        return sum(kronecker(-7, k) for k in _divisors(m))

    def _divisors(m):
        return [k for k in range(1, m + 1) if m % k == 0]

    for n in range(1, 2001):
        if n % 2:
            expected = 2 * dsum(n)
        elif n % 4 == 2:
            expected = 0
        else:
            expected = 2 * dsum(n // 4)
        assert count_R(n) == expected, n


# --- class numbers and the two r3 formulas -------------------------------------

def test_class_number_examples():
    assert class_number(-4) == 1
    assert class_number(-3) == 1
    assert class_number(-20) == 2
    assert class_number(-23) == 3


def test_class_number_domain_errors():
    with pytest.raises(ValueError):
        class_number(4)
    with pytest.raises(ValueError):
        class_number(-6)


def test_gauss_r3_examples():
    assert gauss_r3(factorize(5)) == 24 == r3(5)
    assert gauss_r3(factorize(7)) == 0
    assert gauss_r3(factorize(11)) == 24 == r3(11)


def test_gauss_r3_preconditions():
    with pytest.raises(ValueError):
        gauss_r3(factorize(3))
    with pytest.raises(ValueError):
        gauss_r3(factorize(12))


def test_gauss_r3_matches_enumeration_to_300():
    for n in range(5, 301):
        f = factorize(n)
        if is_squarefree(f):
            assert gauss_r3(f) == r3(n), n


def test_hurwitz_examples():
    assert hurwitz_r3_square(factorize(1)) == 6
    assert hurwitz_r3_square(factorize(3)) == 30 == r3(9)
    assert hurwitz_r3_square(factorize(2)) == 6 == r3(4)


def test_hurwitz_matches_enumeration_to_80():
    for n in range(1, 81):
        assert hurwitz_r3_square(factorize(n)) == r3(n * n), n


# --- factorization plumbing -----------------------------------------------------

def test_factorize_examples():
    assert factorize(45).factors == ((3, 2), (5, 1))
    assert factorize(1).factors == ()
    assert is_square(9) == (True, 3)
    assert is_square(8) == (False, 2)
    assert not is_squarefree(factorize(12))
    assert is_squarefree(factorize(30))


def test_factored_integer_validation():
    with pytest.raises(ValueError):
        FactoredInteger(12, ((2, 1), (3, 1)))  # product mismatch
    with pytest.raises(ValueError):
        FactoredInteger(8, ((4, 1), (2, 1)))  # not prime / order
    with pytest.raises(ValueError):
        FactoredInteger(6, ((3, 1), (2, 1)))  # order


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=100000))
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, e in f.factors:
        prod *= p ** e
    assert prod == n == f.value
