"""Numba-jitted counting kernels.  Imported only when the numba backend is active.

All kernels work in int64.  Callers are responsible for the headroom check
(backends._require_int64_headroom) that guarantees no intermediate count can
reach the int64 range, so the arithmetic here cannot wrap.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _isqrt(v):
    if v < 0:
        return -1
    s = np.int64(np.sqrt(v))
    while s * s > v:
        s -= 1
    while (s + 1) * (s + 1) <= v:
        s += 1
    return s


@njit(cache=True, nogil=True)
def square_count_vec(coeffs, m_max):
    vec = np.zeros(m_max + 1, np.int64)
    vec[0] = 1
    for idx in range(coeffs.shape[0]):
        a = coeffs[idx]
        new = np.zeros(m_max + 1, np.int64)
        x = np.int64(0)
        while a * x * x <= m_max:
            s = a * x * x
            w = 1 if x == 0 else 2
            for i in range(m_max + 1 - s):
                v = vec[i]
                if v != 0:
                    new[i + s] += w * v
            x += 1
        vec = new
    return vec


@njit(cache=True, nogil=True)
def tri_count_vec(coeffs, m_max, weight):
    # weight 1 counts solutions over j >= 0 (t'); weight 2 counts over Z (t),
    # since every triangular value is hit by exactly two integers.
    vec = np.zeros(m_max + 1, np.int64)
    vec[0] = 1
    for idx in range(coeffs.shape[0]):
        a = coeffs[idx]
        new = np.zeros(m_max + 1, np.int64)
        j = np.int64(0)
        while a * (j * (j + 1) // 2) <= m_max:
            s = a * (j * (j + 1) // 2)
            for i in range(m_max + 1 - s):
                v = vec[i]
                if v != 0:
                    new[i + s] += weight * v
            j += 1
        vec = new
    return vec


@njit(cache=True, nogil=True)
def _square_tail2(a, b, rem):
    # solutions of a x^2 + b y^2 = rem over Z^2, x looped, y solved exactly
    tot = np.int64(0)
    x = np.int64(0)
    while a * x * x <= rem:
        r = rem - a * x * x
        wx = 1 if x == 0 else 2
        if r % b == 0:
            y = _isqrt(r // b)
            if b * y * y == r:
                tot += wx * (1 if y == 0 else 2)
        x += 1
    return tot


@njit(cache=True, nogil=True)
def square_count_point2(a, b, n):
    return _square_tail2(a, b, n)


@njit(cache=True, nogil=True)
def square_count_point3(a, b, c, n):
    tot = np.int64(0)
    x = np.int64(0)
    while a * x * x <= n:
        wx = 1 if x == 0 else 2
        tot += wx * _square_tail2(b, c, n - a * x * x)
        x += 1
    return tot


@njit(cache=True, nogil=True)
def square_count_point4(a, b, c, d, n):
    tot = np.int64(0)
    x = np.int64(0)
    while a * x * x <= n:
        wx = 1 if x == 0 else 2
        r = n - a * x * x
        y = np.int64(0)
        while b * y * y <= r:
            wy = 1 if y == 0 else 2
            tot += wx * wy * _square_tail2(c, d, r - b * y * y)
            y += 1
        x += 1
    return tot


@njit(cache=True, nogil=True)
def _tri_of(j):
    return j * (j + 1) // 2


@njit(cache=True, nogil=True)
def _is_triangular(v):
    s = _isqrt(8 * v + 1)
    return s * s == 8 * v + 1


@njit(cache=True, nogil=True)
def _tri_tail2(a, b, rem):
    # solutions of a T(x) + b T(y) = rem over j >= 0 pairs
    tot = np.int64(0)
    j = np.int64(0)
    while a * _tri_of(j) <= rem:
        r = rem - a * _tri_of(j)
        if r % b == 0 and _is_triangular(r // b):
            tot += 1
        j += 1
    return tot


@njit(cache=True, nogil=True)
def tri_count_point2(a, b, n):
    return _tri_tail2(a, b, n)


@njit(cache=True, nogil=True)
def tri_count_point3(a, b, c, n):
    tot = np.int64(0)
    j = np.int64(0)
    while a * _tri_of(j) <= n:
        tot += _tri_tail2(b, c, n - a * _tri_of(j))
        j += 1
    return tot


@njit(cache=True, nogil=True)
def tri_count_point4(a, b, c, d, n):
    tot = np.int64(0)
    j = np.int64(0)
    while a * _tri_of(j) <= n:
        r = n - a * _tri_of(j)
        k = np.int64(0)
        while b * _tri_of(k) <= r:
            tot += _tri_tail2(c, d, r - b * _tri_of(k))
            k += 1
        j += 1
    return tot
