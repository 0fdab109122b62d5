"""Brute-force counting oracles and closed-form arithmetic.

count_N / count_t / count_t_prime enumerate lattice solutions directly and
are the independent oracles against which the series route is checked; the
*_vector functions are the batched versions used by the verification
harness.  Everything arithmetic here (square roots, enumeration bounds,
class numbers) is integer-exact: no floating point enters any verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from . import backends
from .theta import as_form


def is_square(n: int) -> tuple[bool, int]:
    """(True, r) when n = r*r with r >= 0, else (False, floor sqrt)."""
    if n < 0:
        return False, 0
    r = isqrt(n)
    return r * r == n, r


def _is_triangular(v: int) -> bool:
    if v < 0:
        return False
    s = isqrt(8 * v + 1)
    return s * s == 8 * v + 1


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be listed in increasing order")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            prod *= p ** e
            last = p
        if prod != self.value:
            raise ValueError(f"factorization {self.factors} does not multiply to {self.value}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> FactoredInteger:
    """Trial-division factorization; adequate at desk scale."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    m = n
    factors = []
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
    d = 5
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        if e:
            factors.append((d, e))
        d += 2
    if m > 1:
        factors.append((m, 1))
    return FactoredInteger(n, tuple(factors))


def is_squarefree(f: FactoredInteger) -> bool:
    return all(e == 1 for _, e in f.factors)


def divisors(f: FactoredInteger) -> list[int]:
    ds = [1]
    for p, e in f.factors:
        ds = [d * p ** i for d in ds for i in range(e + 1)]
    return sorted(ds)


# --- lattice enumeration oracles ----------------------------------------


def count_N(form, n: int) -> int:
    """Number of integer vectors with sum a_i x_i^2 = n, by direct enumeration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = as_form(form).coeffs
    fast = backends.square_count_point(coeffs, n)
    if fast is not None:
        return fast
    return _count_sq(coeffs, n)


def _count_sq(coeffs: tuple, n: int) -> int:
    a = coeffs[0]
    if len(coeffs) == 1:
        if n == 0:
            return 1
        if n % a:
            return 0
        sq, _ = is_square(n // a)
        return 2 if sq else 0
    tot = 0
    x = 0
    while a * x * x <= n:
        w = 1 if x == 0 else 2
        tot += w * _count_sq(coeffs[1:], n - a * x * x)
        x += 1
    return tot


def count_t_prime(form, n: int) -> int:
    """Solutions of sum a_i x_i(x_i-1)/2 = n over x_i >= 1 (triangular parts j(j+1)/2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = as_form(form).coeffs
    fast = backends.tri_count_point(coeffs, n)
    if fast is not None:
        return fast
    return _count_tri_nat(coeffs, n)


def _count_tri_nat(coeffs: tuple, n: int) -> int:
    a = coeffs[0]
    if len(coeffs) == 1:
        return 1 if n % a == 0 and _is_triangular(n // a) else 0
    tot = 0
    j = 0
    while a * (j * (j + 1) // 2) <= n:
        tot += _count_tri_nat(coeffs[1:], n - a * (j * (j + 1) // 2))
        j += 1
    return tot


def count_t(form, n: int) -> int:
    """Solutions of sum a_i x_i(x_i-1)/2 = n over all of Z^k, enumerated literally."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _count_tri_int(as_form(form).coeffs, n)


def _count_tri_int(coeffs: tuple, n: int) -> int:
    a = coeffs[0]
    if len(coeffs) == 1:
        # x and 1-x share the triangular value, and are always distinct
        return 2 if n % a == 0 and _is_triangular(n // a) else 0
    tot = 0
    hi = (1 + isqrt(1 + 8 * (n // a))) // 2
    for x in range(1 - hi, hi + 1):
        tot += _count_tri_int(coeffs[1:], n - a * (x * (x - 1) // 2))
    return tot


def r3(n: int) -> int:
    """Representations of n as a sum of three squares."""
    return count_N((1, 1, 1), n)


# batched versions (the harness's workhorses; exact int64, overflow-guarded)


def count_N_vector(form, m_max: int) -> np.ndarray:
    return backends.square_count_vec(as_form(form).coeffs, m_max)


def count_t_prime_vector(form, m_max: int) -> np.ndarray:
    return backends.tri_count_vec(as_form(form).coeffs, m_max, over_integers=False)


def count_t_vector(form, m_max: int) -> np.ndarray:
    return backends.tri_count_vec(as_form(form).coeffs, m_max, over_integers=True)


# --- closed-form arithmetic ----------------------------------------------


def c_constant(form) -> int:
    """The multiplicity constant attached to a form: with i_j the number of
    coefficients equal to j,
        2^k + 2^(k-1) * ( i1(i1-1)(i1-2)(i1-3)/4! + i1(i1-1)i2/2 + i1*i3 ).
    """
    coeffs = as_form(form).coeffs
    k = len(coeffs)
    i1 = sum(1 for a in coeffs if a == 1)
    i2 = sum(1 for a in coeffs if a == 2)
    i3 = sum(1 for a in coeffs if a == 3)
    inner = (
        i1 * (i1 - 1) * (i1 - 2) * (i1 - 3) // 24
        + i1 * (i1 - 1) // 2 * i2
        + i1 * i3
    )
    return 2 ** k + 2 ** (k - 1) * inner


def kronecker(a: int, m: int) -> int:
    """Kronecker symbol (a|m) for m >= 1, the multiplicative completion of the
    Legendre symbol (with the standard rule at 2)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    result = 1
    while m % 2 == 0:
        m //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # Jacobi on the odd part; (a|m) depends only on a mod m for odd m >= 1
    a %= m
    t = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                t = -t
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            t = -t
        a %= m
    if m != 1:
        return 0
    return result * t


def divisor_T(n: int) -> int:
    """Sum of (−7|k) over the odd divisors k of n."""
    if n < 1:
        raise ValueError("n must be positive")
    odd = n
    while odd % 2 == 0:
        odd //= 2
    return sum(kronecker(-7, k) for k in divisors(factorize(odd)))


def count_R(n: int) -> int:
    """Number of (x, y) in Z^2 with x^2 + 7y^2 = n, by enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    tot = 0
    y = 0
    while 7 * y * y <= n:
        sq, _ = is_square(n - 7 * y * y)
        if sq:
            wx = 1 if n - 7 * y * y == 0 else 2
            tot += wx * (1 if y == 0 else 2)
        y += 1
    return tot


def class_number(d: int) -> int:
    """Number of reduced primitive positive-definite binary quadratic forms
    (a, b, c) of discriminant d < 0: b^2 - 4ac = d, gcd = 1, |b| <= a <= c,
    and b >= 0 whenever |b| = a or a = c."""
    if d >= 0:
        raise ValueError("discriminant must be negative")
    if d % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4")
    count = 0
    b = d % 2  # b must match d's parity for (b*b - d) to be divisible by 4
    while b * b <= -d // 3:
        ac = (b * b - d) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                if gcd(gcd(a, b), c) == 1:
                    count += 1
                    if 0 < b < a and a < c:
                        count += 1  # (a, -b, c) is reduced and distinct
            a += 1
        b += 2
    return count


def gauss_r3(f: FactoredInteger) -> int:
    """Class-number formula for r3 of a squarefree n > 4:
    24h(-n), 12h(-4n) or 0 according to n mod 8."""
    n = f.value
    if n <= 4:
        raise ValueError("needs n > 4")
    if not is_squarefree(f):
        raise ValueError(f"{n} is not squarefree")
    m = n % 8
    if m == 3:
        return 24 * class_number(-n)
    if m in (1, 2, 5, 6):
        return 12 * class_number(-4 * n)
    return 0  # m == 7; m in (0, 4) is impossible for squarefree n


def hurwitz_r3_square(f: FactoredInteger) -> int:
    """Product formula for r3(n^2); the power of 2 in n does not enter."""
    value = 6
    for p, e in f.factors:
        if p == 2:
            continue
        sign = -1 if (p - 1) // 2 % 2 else 1
        value *= (p ** (e + 1) - 1) // (p - 1) - sign * (p ** e - 1) // (p - 1)
    return value
