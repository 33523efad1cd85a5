"""Hot loops over exponent arrays.

Two kernels are provided, each in a numba-compiled and a plain numpy
flavour.  Set HIGHER_SPECHT_NUMBA=0 to force the numpy path.

Polynomials are passed as an int64 exponent matrix (one row per term,
x-exponents then y-exponents) and an int64 coefficient vector.  Callers
check the overflow bounds below and fall back to Python integers when a
computation might leave int64.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - import guard
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

INT64_SAFE = 2 ** 62


def numba_enabled() -> bool:
    return _HAVE_NUMBA and os.environ.get("HIGHER_SPECHT_NUMBA", "1") != "0"


def key_base(max_exp: int, width: int) -> int | None:
    """Radix for packing an exponent row into one int64, or None if it won't fit."""
    base = max_exp + 1
    if base ** width >= INT64_SAFE:
        return None
    return base


def _powers(base: int, width: int) -> np.ndarray:
    return base ** np.arange(width, dtype=np.int64)


def _decode(keys: np.ndarray, base: int, width: int) -> np.ndarray:
    return (keys[:, None] // _powers(base, width)[None, :]) % base


# ---------------------------------------------------------------- orbit sum
def _reduce(keys, vals):
    """Sum values sharing a key; drop zeros.  Keys come back sorted."""
    uniq, inverse = np.unique(keys, return_inverse=True)
    sums = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(sums, inverse, vals)
    keep = sums != 0
    return uniq[keep], sums[keep]


def _orbit_sum_numpy(exps, coeffs, inv_perms, weights, base):
    t, width = exps.shape
    cols = np.concatenate([inv_perms, inv_perms + width // 2], axis=1)  # (G, 2n)
    moved = exps[:, cols]  # (t, G, 2n)
    keys = (moved @ _powers(base, width)).ravel()
    vals = (coeffs[:, None] * weights[None, :]).ravel()
    return _reduce(keys, vals)


def _orbit_keys_loops(exps, coeffs, inv_perms, weights, base):
    t, width = exps.shape
    n = width // 2
    g_count = inv_perms.shape[0]
    keys = np.empty(t * g_count, dtype=np.int64)
    vals = np.empty(t * g_count, dtype=np.int64)
    pos = 0
    for g in range(g_count):
        w = weights[g]
        for i in range(t):
            key = 0
            mult = 1
            for j in range(n):
                key += exps[i, inv_perms[g, j]] * mult
                mult *= base
            for j in range(n):
                key += exps[i, n + inv_perms[g, j]] * mult
                mult *= base
            keys[pos] = key
            vals[pos] = w * coeffs[i]
            pos += 1
    return keys, vals


# ---------------------------------------------------------- differentiation
def _differentiate_numpy(fe, fc, ge, gc, base):
    # every (f-term, g-term) pair; falling factorials vanish when f exceeds g
    diff = ge[None, :, :] - fe[:, None, :]
    ok = np.all(diff >= 0, axis=2)
    fi, gi = np.nonzero(ok)
    if len(fi) == 0:
        return np.zeros(0, np.int64), np.zeros(0, np.int64)
    width = fe.shape[1]
    vals = fc[fi] * gc[gi]
    gsel = ge[gi]
    fsel = fe[fi]
    top = int(fe.max()) if fe.size else 0
    for s in range(top):
        factor = np.where(fsel > s, gsel - s, 1)
        vals = vals * np.prod(factor, axis=1)
    keys = (gsel - fsel) @ _powers(base, width)
    return _reduce(keys, vals)


def _differentiate_keys_loops(fe, fc, ge, gc, base):
    tf, width = fe.shape
    tg = ge.shape[0]
    keys = np.empty(tf * tg, dtype=np.int64)
    vals = np.empty(tf * tg, dtype=np.int64)
    m = 0
    for i in range(tf):
        for j in range(tg):
            c = fc[i] * gc[j]
            key = 0
            mult = 1
            alive = True
            for v in range(width):
                a = fe[i, v]
                b = ge[j, v]
                if a > b:
                    alive = False
                    break
                for s in range(a):
                    c *= b - s
                key += (b - a) * mult
                mult *= base
            if alive:
                keys[m] = key
                vals[m] = c
                m += 1
    return keys[:m], vals[:m]


if _HAVE_NUMBA:
    _orbit_keys_numba = njit(cache=True)(_orbit_keys_loops)
    _differentiate_keys_numba = njit(cache=True)(_differentiate_keys_loops)
else:  # pragma: no cover
    _orbit_keys_numba = _orbit_keys_loops
    _differentiate_keys_numba = _differentiate_keys_loops


def _orbit_sum_numba(exps, coeffs, inv_perms, weights, base):
    return _reduce(*_orbit_keys_numba(exps, coeffs, inv_perms, weights, base))


def _differentiate_numba(fe, fc, ge, gc, base):
    return _reduce(*_differentiate_keys_numba(fe, fc, ge, gc, base))


def orbit_sum(exps: np.ndarray, coeffs: np.ndarray, inv_perms: np.ndarray,
              weights: np.ndarray, base: int, backend: str | None = None):
    """Sum_g weights[g] * (g . f), returned as (packed keys, coefficients).

    ``inv_perms[g]`` holds the 0-based inverse of the g-th permutation, so
    the new exponent at slot j is the old exponent at slot inv[j].
    """
    backend = backend or ("numba" if numba_enabled() else "numpy")
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    inv_perms = np.ascontiguousarray(inv_perms, dtype=np.int64)
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    if backend == "numba":
        keys, vals = _orbit_sum_numba(exps, coeffs, inv_perms, weights, base)
    else:
        keys, vals = _orbit_sum_numpy(exps, coeffs, inv_perms, weights, base)
    return _decode(keys, base, exps.shape[1]), vals


def differentiate(fe: np.ndarray, fc: np.ndarray, ge: np.ndarray, gc: np.ndarray,
                  base: int, backend: str | None = None):
    """Apply the differential operator of f to g, as (exponents, coefficients)."""
    backend = backend or ("numba" if numba_enabled() else "numpy")
    args = [np.ascontiguousarray(a, dtype=np.int64) for a in (fe, fc, ge, gc)]
    if backend == "numba":
        keys, vals = _differentiate_numba(*args, base)
    else:
        keys, vals = _differentiate_numpy(*args, base)
    return _decode(keys, base, fe.shape[1]), vals
