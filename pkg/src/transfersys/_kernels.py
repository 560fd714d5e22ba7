"""Batch kernels over bitmask-encoded transfer systems.

These back the brute-force oracles (subset filtering, exhaustive pair
checks), which are the only hot loops in the package.  Each kernel has a
numba implementation and a pure-numpy one with identical results.  The
numba path is used when numba imports and ``TRANSFERSYS_DISABLE_NUMBA`` is
unset or ``0``.

Masks use the column-major pair layout of :mod:`transfersys.core` and are
held in ``int64``, so ``n <= MAX_N``.
"""

import os

import numpy as np

MAX_N = 11


def _numba_requested():
    return os.environ.get("TRANSFERSYS_DISABLE_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("disabled by TRANSFERSYS_DISABLE_NUMBA")
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False


def _bit(i, j):
    return (j - 1) * (j - 2) // 2 + i - 1


def _check_n(n):
    if not 0 <= n <= MAX_N:
        raise ValueError(f"kernels support 0 <= n <= {MAX_N}, got {n}")


# --- numpy implementations -------------------------------------------------


def _has(masks, i, j):
    return (masks >> np.int64(_bit(i, j))) & np.int64(1)


def valid_masks_numpy(n, masks):
    """Boolean array: which masks are transfer systems on ``[n]``."""
    _check_n(n)
    masks = np.asarray(masks, dtype=np.int64)
    ok = np.ones(masks.shape, dtype=bool)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            hij = _has(masks, i, j).astype(bool)
            for k in range(j + 1, n + 1):
                # transitivity i->j->k and restriction i->k forces i->j
                hjk = _has(masks, j, k).astype(bool)
                hik = _has(masks, i, k).astype(bool)
                ok &= ~(hij & hjk) | hik
                ok &= ~hik | hij
    return ok


def required_masks_numpy(n, masks):
    """For each multiplicative mask, the additive arrows it forces.

    An arrow ``i -> j`` forces ``k -> j`` for every ``i <= k < j``.
    """
    _check_n(n)
    masks = np.asarray(masks, dtype=np.int64)
    req = np.zeros(masks.shape, dtype=np.int64)
    for j in range(2, n + 1):
        for i in range(1, j):
            forced = 0
            for k in range(i, j):
                forced |= 1 << _bit(k, j)
            sel = _has(masks, i, j).astype(bool)
            req[sel] |= np.int64(forced)
    return req


def partner_counts_numpy(required, additive, chunk=512):
    """``out[a] = #{m : required[m] & ~additive[a] == 0}``."""
    required = np.asarray(required, dtype=np.int64)
    additive = np.asarray(additive, dtype=np.int64)
    out = np.empty(additive.shape[0], dtype=np.int64)
    for start in range(0, additive.shape[0], chunk):
        block = ~additive[start : start + chunk]
        hits = (required[None, :] & block[:, None]) == 0
        out[start : start + chunk] = hits.sum(axis=1)
    return out


def count_compatible_numpy(required, additive):
    return int(partner_counts_numpy(required, additive).sum())


# --- numba implementations -------------------------------------------------

if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _valid_masks_nb(n, masks):
        out = np.ones(masks.shape[0], dtype=np.bool_)
        for t in range(masks.shape[0]):
            m = masks[t]
            good = True
            for i in range(1, n + 1):
                if not good:
                    break
                for j in range(i + 1, n + 1):
                    hij = (m >> ((j - 1) * (j - 2) // 2 + i - 1)) & 1
                    for k in range(j + 1, n + 1):
                        hik = (m >> ((k - 1) * (k - 2) // 2 + i - 1)) & 1
                        if hik and not hij:
                            good = False
                            break
                        if hij and not hik and (m >> ((k - 1) * (k - 2) // 2 + j - 1)) & 1:
                            good = False
                            break
                    if not good:
                        break
            out[t] = good
        return out

    @njit(cache=True)
    def _required_masks_nb(n, masks):
        out = np.zeros(masks.shape[0], dtype=np.int64)
        for t in range(masks.shape[0]):
            m = masks[t]
            r = np.int64(0)
            for j in range(2, n + 1):
                base = (j - 1) * (j - 2) // 2
                for i in range(1, j):
                    if (m >> (base + i - 1)) & 1:
                        for k in range(i, j):
                            r |= np.int64(1) << (base + k - 1)
            out[t] = r
        return out

    @njit(cache=True)
    def _partner_counts_nb(required, additive):
        out = np.zeros(additive.shape[0], dtype=np.int64)
        for a in range(additive.shape[0]):
            missing = ~additive[a]
            c = 0
            for m in range(required.shape[0]):
                if required[m] & missing == 0:
                    c += 1
            out[a] = c
        return out

    def valid_masks_numba(n, masks):
        _check_n(n)
        return _valid_masks_nb(n, np.asarray(masks, dtype=np.int64))

    def required_masks_numba(n, masks):
        _check_n(n)
        return _required_masks_nb(n, np.asarray(masks, dtype=np.int64))

    def partner_counts_numba(required, additive):
        return _partner_counts_nb(
            np.asarray(required, dtype=np.int64), np.asarray(additive, dtype=np.int64)
        )

    def count_compatible_numba(required, additive):
        return int(partner_counts_numba(required, additive).sum())

    valid_masks = valid_masks_numba
    required_masks = required_masks_numba
    partner_counts = partner_counts_numba
    count_compatible = count_compatible_numba
    BACKEND = "numba"
else:
    valid_masks = valid_masks_numpy
    required_masks = required_masks_numpy
    partner_counts = partner_counts_numpy
    count_compatible = count_compatible_numpy
    BACKEND = "numpy"
