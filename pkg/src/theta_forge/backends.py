"""Backend selection for the counting kernels.

THETA_FORGE_BACKEND=numba   jitted kernels (default when numba imports)
THETA_FORGE_BACKEND=numpy   pure numpy/Python fallback, no jit anywhere

Batch count vectors are the hot path: they accumulate, one form coefficient
at a time, the number of lattice representations of every value 0..m_max.
Both backends run the identical recurrence; numba as explicit loops, numpy
as slice adds.  Results are int64 and guarded: before running we bound the
total lattice-point count and refuse (OverflowError) if int64 headroom
cannot be proven, so a wrapped count can never be returned.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

_ENV_VAR = "THETA_FORGE_BACKEND"
_INT64_HEADROOM = 2 ** 62
_MAX_VEC_LEN = 50_000_000

_kernels = None


def _pick_backend() -> str:
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice in ("numba", "numpy"):
        return choice
    if choice:
        raise ValueError(f"{_ENV_VAR} must be 'numba' or 'numpy', got {choice!r}")
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


_BACKEND = _pick_backend()


def backend_name() -> str:
    return _BACKEND


def _get_kernels():
    global _kernels
    if _kernels is None:
        from . import _numba_kernels

        _kernels = _numba_kernels
    return _kernels


def _require_int64_headroom(coeffs, m_max: int, triangular: bool) -> None:
    # Conservative bound on any partial count: the number of lattice points
    # of the full box, computed in Python ints.  Far below 2^62 at desk scale.
    bound = 1
    for a in coeffs:
        if triangular:
            per = (1 + isqrt(1 + 8 * (m_max // a))) // 2 + 2
            per *= 2
        else:
            per = 2 * isqrt(m_max // a) + 1
        bound *= per
    if bound >= _INT64_HEADROOM:
        raise OverflowError(
            f"count vector for form {tuple(coeffs)} up to {m_max} cannot be "
            "proven to fit int64; reduce the range"
        )


def _square_count_vec_np(coeffs, m_max: int) -> np.ndarray:
    vec = np.zeros(m_max + 1, np.int64)
    vec[0] = 1
    for a in coeffs:
        new = np.zeros(m_max + 1, np.int64)
        x = 0
        while a * x * x <= m_max:
            s = a * x * x
            w = 1 if x == 0 else 2
            new[s:] += w * vec[: m_max + 1 - s]
            x += 1
        vec = new
    return vec


def _tri_count_vec_np(coeffs, m_max: int, weight: int) -> np.ndarray:
    vec = np.zeros(m_max + 1, np.int64)
    vec[0] = 1
    for a in coeffs:
        new = np.zeros(m_max + 1, np.int64)
        j = 0
        while a * (j * (j + 1) // 2) <= m_max:
            s = a * (j * (j + 1) // 2)
            new[s:] += weight * vec[: m_max + 1 - s]
            j += 1
        vec = new
    return vec


def square_count_vec(coeffs: tuple, m_max: int) -> np.ndarray:
    """counts[m] = number of integer vectors with sum a_i x_i^2 = m, 0 <= m <= m_max."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    if m_max + 1 > _MAX_VEC_LEN:
        raise OverflowError(f"count vector of length {m_max + 1} exceeds the supported size")
    _require_int64_headroom(coeffs, m_max, triangular=False)
    if _BACKEND == "numba":
        return _get_kernels().square_count_vec(np.asarray(coeffs, np.int64), m_max)
    return _square_count_vec_np(coeffs, m_max)


def tri_count_vec(coeffs: tuple, m_max: int, over_integers: bool) -> np.ndarray:
    """counts[m] for sum a_i * x_i(x_i-1)/2 = m; over Z^k (weight 2 per variable,
    every triangular value has exactly two integer preimages) or over j >= 0 (t')."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    if m_max + 1 > _MAX_VEC_LEN:
        raise OverflowError(f"count vector of length {m_max + 1} exceeds the supported size")
    _require_int64_headroom(coeffs, m_max, triangular=True)
    weight = 2 if over_integers else 1
    if _BACKEND == "numba":
        return _get_kernels().tri_count_vec(np.asarray(coeffs, np.int64), m_max, weight)
    return _tri_count_vec_np(coeffs, m_max, weight)


# Single-point enumeration fast paths.  Return None when there is no kernel
# for the shape (the caller falls back to exact Python enumeration).

_POINT_LIMIT = 2 ** 40  # keeps a*x*x etc. far inside int64


def square_count_point(coeffs: tuple, n: int):
    if _BACKEND != "numba" or not (2 <= len(coeffs) <= 4) or n > _POINT_LIMIT:
        return None
    k = _get_kernels()
    if len(coeffs) == 2:
        return int(k.square_count_point2(coeffs[0], coeffs[1], n))
    if len(coeffs) == 3:
        return int(k.square_count_point3(coeffs[0], coeffs[1], coeffs[2], n))
    return int(k.square_count_point4(coeffs[0], coeffs[1], coeffs[2], coeffs[3], n))


def tri_count_point(coeffs: tuple, n: int):
    if _BACKEND != "numba" or not (2 <= len(coeffs) <= 4) or n > _POINT_LIMIT:
        return None
    k = _get_kernels()
    if len(coeffs) == 2:
        return int(k.tri_count_point2(coeffs[0], coeffs[1], n))
    if len(coeffs) == 3:
        return int(k.tri_count_point3(coeffs[0], coeffs[1], coeffs[2], n))
    return int(k.tri_count_point4(coeffs[0], coeffs[1], coeffs[2], coeffs[3], n))
