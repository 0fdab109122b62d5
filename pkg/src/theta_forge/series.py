"""Exact truncated power series in one variable q over the integers.

A series stores coefficients for exponents 0..precision-1; everything at or
beyond `precision` is *unknown*, never assumed zero.  Binary operations
propagate the smaller exactness window, so a coefficient you can read is
always exact.  Coefficients are Python integers: arbitrary precision, at
least 64 bits wide by construction, and incapable of silent wraparound.

Multiplication is the naive Cauchy convolution (skipping zero coefficients
of the sparser operand); at the desk scales this package targets that is
both fast enough and trivially exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

# Hard roof on series length, so constructors/substitutions/shifts cannot
# silently allocate absurd amounts of memory.
MAX_PRECISION = 10_000_000


class SeriesError(Exception):
    """Base class for series failures."""


class PrecisionError(SeriesError):
    """A coefficient (or comparison order) outside the exact window was requested."""


class CapacityError(SeriesError):
    """The result would exceed the supported series length."""


@dataclass(frozen=True)
class MatchReport:
    """Outcome of comparing two series coefficientwise up to `order`."""

    equal: bool
    order: int
    first_mismatch: int | None = None
    lhs: int | None = None
    rhs: int | None = None


@dataclass(frozen=True)
class TruncatedSeries:
    """Immutable integer series with exponents 0..precision-1 exact."""

    coeffs: tuple[int, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 0:
            raise SeriesError("precision must be nonnegative")
        if len(self.coeffs) != self.precision:
            raise SeriesError(
                f"coefficient count {len(self.coeffs)} does not match precision {self.precision}"
            )

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.precision > 8 else ""
        return f"TruncatedSeries([{head}{tail}], precision={self.precision})"

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def coeff(self, n: int) -> int:
        """Exact coefficient of q^n; raises PrecisionError outside the window."""
        if n < 0 or n >= self.precision:
            raise PrecisionError(
                f"coefficient {n} is outside the exact window [0, {self.precision})"
            )
        return self.coeffs[n]

    # arithmetic -------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, int):
            return series_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c: int) -> "TruncatedSeries":
        return series_scale(self, c)

    def shift(self, s: int) -> "TruncatedSeries":
        return series_shift(self, s)

    def substitute_power(self, k: int) -> "TruncatedSeries":
        return series_substitute_power(self, k)

    def residue_extract(self, m: int, r: int) -> "TruncatedSeries":
        return series_residue_extract(self, m, r)

    def truncate(self, precision: int) -> "TruncatedSeries":
        return series_truncate(self, precision)


def _as_int(value, what: str = "coefficient") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            import operator

            return operator.index(value)
        except TypeError:
            raise SeriesError(f"{what} must be an integer, got {type(value).__name__}")
    return value


def series_from_coeffs(coeffs: Sequence[int], precision: int) -> TruncatedSeries:
    """Build a series from explicit coefficients; length must equal precision."""
    vals = tuple(_as_int(c) for c in coeffs)
    if len(vals) != precision:
        raise SeriesError(
            f"coefficient count {len(vals)} does not match precision {precision}"
        )
    return TruncatedSeries(vals, precision)


def zero_series(precision: int) -> TruncatedSeries:
    return TruncatedSeries((0,) * precision, precision)


def one_series(precision: int) -> TruncatedSeries:
    """The constant series 1 (empty product identity), to the given window."""
    if precision == 0:
        return TruncatedSeries((), 0)
    return TruncatedSeries((1,) + (0,) * (precision - 1), precision)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    p = min(a.precision, b.precision)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), p)


def series_scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    c = _as_int(c, "scale factor")
    return TruncatedSeries(tuple(c * x for x in a.coeffs), a.precision)


def series_shift(a: TruncatedSeries, s: int) -> TruncatedSeries:
    """Multiply by q^s.  The window grows: the new low coefficients are known zeros."""
    if s < 0:
        raise SeriesError("shift must be nonnegative")
    if a.precision + s > MAX_PRECISION:
        raise CapacityError(f"shifted precision {a.precision + s} exceeds {MAX_PRECISION}")
    return TruncatedSeries((0,) * s + a.coeffs, a.precision + s)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, exact for exponents below min(P_a, P_b)."""
    p = min(a.precision, b.precision)
    if p == 0:
        return TruncatedSeries((), 0)
    ca, cb = a.coeffs, b.coeffs
    nza = [i for i in range(p) if ca[i]]
    nzb = [i for i in range(p) if cb[i]]
    if len(nzb) < len(nza):
        ca, cb = cb, ca
        nza = nzb
    res = [0] * p
    for i in nza:
        ai = ca[i]
        res[i:] = [x + ai * y for x, y in zip(res[i:], cb)]
    return TruncatedSeries(tuple(res), p)


def series_substitute_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """q -> q^k.  Result has precision k * P_a."""
    if k < 1:
        raise SeriesError("substitution power must be >= 1")
    if k == 1:
        return a
    newp = k * a.precision
    if newp > MAX_PRECISION:
        raise CapacityError(f"substituted precision {newp} exceeds {MAX_PRECISION}")
    res = [0] * newp
    for j, c in enumerate(a.coeffs):
        res[k * j] = c
    return TruncatedSeries(tuple(res), newp)


def series_residue_extract(a: TruncatedSeries, m: int, r: int) -> TruncatedSeries:
    """Coefficients on exponents = r (mod m), reindexed: result[n] = a[m*n + r]."""
    if m < 1:
        raise SeriesError("modulus must be >= 1")
    if r < 0 or r >= m:
        raise SeriesError(f"residue {r} not in [0, {m})")
    if a.precision <= r:
        return TruncatedSeries((), 0)
    newp = -(-(a.precision - r) // m)  # ceil((P - r) / m)
    return TruncatedSeries(tuple(a.coeffs[m * n + r] for n in range(newp)), newp)


def series_truncate(a: TruncatedSeries, precision: int) -> TruncatedSeries:
    """Shrink the exact window.  Growing it would invent unknown coefficients."""
    if precision < 0:
        raise SeriesError("precision must be nonnegative")
    if precision > a.precision:
        raise PrecisionError(
            f"cannot extend window from {a.precision} to {precision}"
        )
    return TruncatedSeries(a.coeffs[:precision], precision)


def series_coeff(a: TruncatedSeries, n: int) -> int:
    return a.coeff(n)


def series_equal(a: TruncatedSeries, b: TruncatedSeries, order: int) -> MatchReport:
    """Compare coefficients for exponents 0..order-1; report the first mismatch."""
    if order < 1:
        raise SeriesError("comparison order must be >= 1")
    if order > a.precision or order > b.precision:
        raise PrecisionError(
            f"order {order} exceeds precision ({a.precision}, {b.precision})"
        )
    for n in range(order):
        if a.coeffs[n] != b.coeffs[n]:
            return MatchReport(False, order, n, a.coeffs[n], b.coeffs[n])
    return MatchReport(True, order)
