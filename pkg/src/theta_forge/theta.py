"""The classical theta series and the generating functions built from them.

phi(q)  = sum_{x in Z} q^(x^2)          (coefficient n counts x with x^2 = n)
psi(q)  = sum_{j>=0} q^(j(j+1)/2)       (indicator of triangular numbers)

Products of substituted copies of these generate the representation counts
this package verifies: prod_i phi(q^(a_i)) generates N(a_1,...,a_k;n) and
prod_i psi(q^(a_i)) generates t'(a_1,...,a_k;n).  Infinite products are
truncated at factor index P-1, which is exact below order P because the
dropped factors differ from 1 only at order >= P.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .series import (
    MAX_PRECISION,
    CapacityError,
    SeriesError,
    TruncatedSeries,
    one_series,
    series_mul,
    series_substitute_power,
    series_truncate,
)


def _check_precision(precision: int) -> int:
    if precision > MAX_PRECISION:
        raise CapacityError(f"precision {precision} exceeds {MAX_PRECISION}")
    return precision


@dataclass(frozen=True)
class DiagonalForm:
    """A diagonal form named by its positive coefficient tuple (a_1, ..., a_k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a diagonal form needs at least one coefficient")
        if any((not isinstance(a, int)) or isinstance(a, bool) or a < 1 for a in self.coeffs):
            raise ValueError(f"form coefficients must be integers >= 1, got {self.coeffs}")

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.coeffs) + ")"


def as_form(form) -> DiagonalForm:
    """Accept a DiagonalForm, tuple, or any coefficient iterable."""
    if isinstance(form, DiagonalForm):
        return form
    return DiagonalForm(tuple(form))


def phi(precision: int) -> TruncatedSeries:
    """Square-counting theta: coefficient 1 at 0, 2 at positive squares."""
    c = [0] * _check_precision(precision)
    if precision > 0:
        c[0] = 1
    x = 1
    while x * x < precision:
        c[x * x] = 2
        x += 1
    return TruncatedSeries(tuple(c), precision)


def psi(precision: int) -> TruncatedSeries:
    """Triangular-number indicator: coefficient 1 at j(j+1)/2."""
    c = [0] * _check_precision(precision)
    j = 0
    while j * (j + 1) // 2 < precision:
        c[j * (j + 1) // 2] = 1
        j += 1
    return TruncatedSeries(tuple(c), precision)


def phi_neg(precision: int) -> TruncatedSeries:
    """phi at -q: the phi coefficients with alternating signs."""
    c = list(phi(precision).coeffs)
    for n in range(1, precision, 2):
        c[n] = -c[n]
    return TruncatedSeries(tuple(c), precision)


def phi_pow(k: int, precision: int) -> TruncatedSeries:
    """phi(q^k) to the given window."""
    if k == 1:
        return phi(precision)
    base = phi(-(-precision // k))
    return series_truncate(series_substitute_power(base, k), precision)


def psi_pow(k: int, precision: int) -> TruncatedSeries:
    """psi(q^k) to the given window."""
    if k == 1:
        return psi(precision)
    base = psi(-(-precision // k))
    return series_truncate(series_substitute_power(base, k), precision)


# in-place helpers on coefficient lists, used by the truncated products;
# multiplying by 1/(1-q^k) is the ascending prefix recurrence, exact below P

def _times_one_minus_power(c: list, k: int) -> None:
    for m in range(len(c) - 1, k - 1, -1):
        c[m] -= c[m - k]


def _times_geometric(c: list, k: int) -> None:
    for m in range(k, len(c)):
        c[m] += c[m - k]


def product_psi(precision: int) -> TruncatedSeries:
    """Truncated product  prod_{n=1}^{P-1} (1-q^(2n))^2 / (1-q^n)."""
    if precision < 1:
        raise SeriesError("product expansion needs precision >= 1")
    c = [0] * precision
    c[0] = 1
    for n in range(1, precision):
        if 2 * n < precision:
            _times_one_minus_power(c, 2 * n)
            _times_one_minus_power(c, 2 * n)
        _times_geometric(c, n)
    return TruncatedSeries(tuple(c), precision)


def product_phi_neg(precision: int) -> TruncatedSeries:
    """Truncated product  prod_{n=1}^{P-1} (1-q^n)^2 / (1-q^(2n))."""
    if precision < 1:
        raise SeriesError("product expansion needs precision >= 1")
    c = [0] * precision
    c[0] = 1
    for n in range(1, precision):
        _times_one_minus_power(c, n)
        _times_one_minus_power(c, n)
        if 2 * n < precision:
            _times_geometric(c, 2 * n)
    return TruncatedSeries(tuple(c), precision)


def jacobi_cube_sides(precision: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the cube identity.

    Left: the truncated product prod_{n=1}^{P-1} (1-q^n)^3.
    Right: coefficient (-1)^j (2j+1) at exponent j(j+1)/2, zero elsewhere.
    """
    if precision < 1:
        raise SeriesError("cube identity needs precision >= 1")
    e = [0] * precision
    e[0] = 1
    for n in range(1, precision):
        _times_one_minus_power(e, n)
    euler = TruncatedSeries(tuple(e), precision)
    left = series_mul(series_mul(euler, euler), euler)

    r = [0] * precision
    j = 0
    while j * (j + 1) // 2 < precision:
        r[j * (j + 1) // 2] = (2 * j + 1) * (-1 if j % 2 else 1)
        j += 1
    right = TruncatedSeries(tuple(r), precision)
    return left, right


def n_series(form, precision: int) -> TruncatedSeries:
    """Generating function of N(form; n): product of substituted phi factors."""
    f = as_form(form)
    return reduce(series_mul, (phi_pow(a, precision) for a in f), one_series(precision))


def t_prime_series(form, precision: int) -> TruncatedSeries:
    """Generating function of t'(form; n): product of substituted psi factors."""
    f = as_form(form)
    return reduce(series_mul, (psi_pow(a, precision) for a in f), one_series(precision))
