"""Float64 kernels for dense sampling.

These only drive estimates and search (where to look for the worst error);
no verdict ever depends on them.  Each kernel has a numba version and a
plain numpy version with the same signature.  Set ``POLYCERT_DISABLE_NUMBA=1``
to force the numpy path.
"""

import os

import numpy as np

_DISABLED = os.environ.get("POLYCERT_DISABLE_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:
    njit = None

USE_NUMBA = njit is not None


def horner_grid_numpy(coeffs, xs):
    """Evaluate sum coeffs[i] * x^i at every x in xs."""
    out = np.zeros_like(xs)
    for c in coeffs[::-1]:
        out = out * xs + c
    return out


def local_maxima_numpy(ys, k):
    """Indices of the ``k`` largest interior local maxima of ``ys`` plus both ends."""
    n = ys.shape[0]
    if n < 3:
        return np.arange(n)
    inner = np.nonzero((ys[1:-1] >= ys[:-2]) & (ys[1:-1] >= ys[2:]))[0] + 1
    cand = np.concatenate((inner, np.array([0, n - 1])))
    order = np.argsort(-ys[cand], kind="stable")
    return cand[order[:k]]


if USE_NUMBA:

    @njit(cache=True, nogil=True)
    def horner_grid_numba(coeffs, xs):
        n = xs.shape[0]
        d = coeffs.shape[0]
        out = np.empty(n)
        for j in range(n):
            x = xs[j]
            acc = 0.0
            for i in range(d - 1, -1, -1):
                acc = acc * x + coeffs[i]
            out[j] = acc
        return out

    @njit(cache=True, nogil=True)
    def _local_max_mask(ys):
        n = ys.shape[0]
        mask = np.zeros(n, dtype=np.bool_)
        mask[0] = True
        mask[n - 1] = True
        for i in range(1, n - 1):
            if ys[i] >= ys[i - 1] and ys[i] >= ys[i + 1]:
                mask[i] = True
        return mask

    def local_maxima_numba(ys, k):
        n = ys.shape[0]
        if n < 3:
            return np.arange(n)
        mask = _local_max_mask(ys)
        # same candidate order as the numpy path: interior first, then ends
        inner = np.nonzero(mask[1:-1])[0] + 1
        cand = np.concatenate((inner, np.array([0, n - 1])))
        order = np.argsort(-ys[cand], kind="stable")
        return cand[order[:k]]

    horner_grid = horner_grid_numba
    local_maxima = local_maxima_numba
else:
    horner_grid = horner_grid_numpy
    local_maxima = local_maxima_numpy
