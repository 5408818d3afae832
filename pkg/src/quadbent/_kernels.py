"""Hot inner loops: in-place Walsh-Hadamard butterfly, binary Moebius transform,
and batched parity of masked indices.

Each kernel has a numba ``@njit`` version and a pure-numpy version. The
dispatching names (``fwht``, ``mobius``, ``masked_parity``) pick numba unless
the environment variable ``QUADBENT_DISABLE_NUMBA`` is set to a non-empty value
other than ``0``, or numba cannot be imported.
"""

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _numba_disabled():
    flag = os.environ.get("QUADBENT_DISABLE_NUMBA", "")
    return flag not in ("", "0")


USE_NUMBA = HAVE_NUMBA and not _numba_disabled()


# --- pure numpy -------------------------------------------------------------


def fwht_numpy(a):
    """Unnormalized WHT of ``a`` (length 2^m), in place. Returns ``a``."""
    n = a.shape[0]
    h = 1
    while h < n:
        v = a.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] += hi
        lo -= hi
        v[:, 1, :] = lo
        h <<= 1
    return a


def mobius_numpy(a):
    """Binary Moebius (zeta mod 2) transform of a 0/1 uint8 vector, in place."""
    n = a.shape[0]
    h = 1
    while h < n:
        v = a.reshape(-1, 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h <<= 1
    return a


def masked_parity_numpy(xs, mask):
    """Parity of popcount(x & mask) for every x in ``xs`` (uint64 array)."""
    return (np.bitwise_count(xs & np.uint64(mask)) & 1).astype(np.uint8)


# --- numba ------------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def fwht_numba(a):
        n = a.shape[0]
        h = 1
        while h < n:
            for i in range(0, n, h << 1):
                for j in range(i, i + h):
                    x = a[j]
                    y = a[j + h]
                    a[j] = x + y
                    a[j + h] = x - y
            h <<= 1
        return a

    @numba.njit(cache=True)
    def mobius_numba(a):
        n = a.shape[0]
        h = 1
        while h < n:
            for i in range(0, n, h << 1):
                for j in range(i, i + h):
                    a[j + h] ^= a[j]
            h <<= 1
        return a

    @numba.njit(cache=True)
    def _masked_parity_numba(xs, mask, out):
        for k in range(xs.shape[0]):
            v = xs[k] & mask
            v ^= v >> np.uint64(32)
            v ^= v >> np.uint64(16)
            v ^= v >> np.uint64(8)
            v ^= v >> np.uint64(4)
            v ^= v >> np.uint64(2)
            v ^= v >> np.uint64(1)
            out[k] = v & np.uint64(1)
        return out

    def masked_parity_numba(xs, mask):
        out = np.empty(xs.shape[0], dtype=np.uint8)
        return _masked_parity_numba(xs, np.uint64(mask), out)

else:  # pragma: no cover
    fwht_numba = fwht_numpy
    mobius_numba = mobius_numpy
    masked_parity_numba = masked_parity_numpy


if USE_NUMBA:
    fwht = fwht_numba
    mobius = mobius_numba
    masked_parity = masked_parity_numba
else:
    fwht = fwht_numpy
    mobius = mobius_numpy
    masked_parity = masked_parity_numpy


def backend():
    return "numba" if USE_NUMBA else "numpy"
