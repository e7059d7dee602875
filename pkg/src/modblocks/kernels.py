"""Hot numeric kernels with numba-jitted and pure-numpy implementations.

Everything downstream (echelon bases, group-algebra products, relative
traces) funnels into the four kernel families below.  Each family has two
interchangeable implementations:

* a nopython numba version built from the plain-loop reference code, and
* a vectorized numpy fallback with identical semantics.

The active backend is chosen at import time.  Set ``MODBLOCKS_NUMBA=0``
(or ``off``/``numpy``) to force the numpy fallback; anything else uses
numba when it is importable.  Both implementations stay importable under
explicit names (``*_numba`` / ``*_numpy``) so the benchmark and the
equivalence tests can compare them directly.

Conventions: coefficient matrices are C-contiguous ``int64`` arrays.  For
prime fields entries are residues in ``[0, p)``.  For extension fields
entries are integer element codes and arithmetic goes through the lookup
tables built in :mod:`modblocks.fields` (``add_t``, ``mul_t``, ``neg_t``,
``inv_t``).  All kernels mutate their first argument in place where
documented; the public wrappers in :mod:`modblocks.linalg` copy first.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("MODBLOCKS_NUMBA", "auto").strip().lower()
_WANT_NUMBA = _FLAG not in ("0", "off", "false", "no", "numpy")

try:
    if _WANT_NUMBA:
        from numba import njit
    else:  # pragma: no cover - exercised via env flag in tests
        njit = None
except ImportError:  # pragma: no cover - numba is a hard dependency here
    njit = None


def _inv_mod_impl(a, p):
    # Modular inverse by extended Euclid; a must be nonzero mod p.
    t = 0
    newt = 1
    r = p
    newr = a % p
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    if t < 0:
        t += p
    return t


def _rref_prime_impl(a, p, pivots):
    # In-place reduced row echelon form over GF(p).  Returns the rank and
    # writes the pivot column of row r into pivots[r].
    m, n = a.shape
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod_impl(a[rank, col], p)
        if inv != 1:
            for j in range(col, n):
                a[rank, j] = (a[rank, j] * inv) % p
        for i in range(m):
            f = a[i, col]
            if i != rank and f != 0:
                for j in range(col, n):
                    a[i, j] = (a[i, j] - f * a[rank, j]) % p
        pivots[rank] = col
        rank += 1
        if rank == m:
            break
    return rank


def _rref_table_impl(a, add_t, mul_t, neg_t, inv_t, pivots):
    # Table-driven variant of _rref_prime_impl for GF(p^m) element codes.
    m, n = a.shape
    rank = 0
    for col in range(n):
        piv = -1
        for i in range(rank, m):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                tmp = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = tmp
        inv = inv_t[a[rank, col]]
        if inv != 1:
            for j in range(col, n):
                a[rank, j] = mul_t[inv, a[rank, j]]
        for i in range(m):
            f = a[i, col]
            if i != rank and f != 0:
                nf = neg_t[f]
                for j in range(col, n):
                    a[i, j] = add_t[a[i, j], mul_t[nf, a[rank, j]]]
        pivots[rank] = col
        rank += 1
        if rank == m:
            break
    return rank


def _reduce_rows_prime_impl(rows, basis, pivots, p):
    # In-place reduction of each row of `rows` against an RREF basis.
    m = rows.shape[0]
    n = rows.shape[1]
    k = basis.shape[0]
    for i in range(m):
        for t in range(k):
            f = rows[i, pivots[t]]
            if f != 0:
                for j in range(n):
                    rows[i, j] = (rows[i, j] - f * basis[t, j]) % p


def _reduce_rows_table_impl(rows, basis, pivots, add_t, mul_t, neg_t):
    m = rows.shape[0]
    n = rows.shape[1]
    k = basis.shape[0]
    for i in range(m):
        for t in range(k):
            f = rows[i, pivots[t]]
            if f != 0:
                nf = neg_t[f]
                for j in range(n):
                    rows[i, j] = add_t[rows[i, j], mul_t[nf, basis[t, j]]]


def _convolve_prime_impl(a, b, table, p, out):
    # Group-algebra product: out[table[i, j]] += a[i] * b[j] over GF(p).
    # Rows of `table` are permutations, so scatter indices never collide.
    n = a.shape[0]
    for i in range(n):
        ai = a[i]
        if ai != 0:
            for j in range(n):
                bj = b[j]
                if bj != 0:
                    k = table[i, j]
                    out[k] = (out[k] + ai * bj) % p


def _convolve_table_impl(a, b, table, add_t, mul_t, out):
    n = a.shape[0]
    for i in range(n):
        ai = a[i]
        if ai != 0:
            for j in range(n):
                bj = b[j]
                if bj != 0:
                    k = table[i, j]
                    out[k] = add_t[out[k], mul_t[ai, bj]]


def _sum_permuted_prime_impl(vec, perms, p, out):
    # out[perms[r, x]] += vec[x] for every permutation row r, over GF(p).
    n = vec.shape[0]
    for r in range(perms.shape[0]):
        for x in range(n):
            v = vec[x]
            if v != 0:
                k = perms[r, x]
                out[k] = (out[k] + v) % p


def _sum_permuted_table_impl(vec, perms, add_t, out):
    n = vec.shape[0]
    for r in range(perms.shape[0]):
        for x in range(n):
            v = vec[x]
            if v != 0:
                k = perms[r, x]
                out[k] = add_t[out[k], v]


# ---------------------------------------------------------------------------
# numpy fallbacks (vectorized, same contracts as the loop reference code)


def rref_prime_numpy(a, p, pivots):
    m, n = a.shape
    rank = 0
    for col in range(n):
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = _inv_mod_impl(int(a[rank, col]), p)
        if inv != 1:
            a[rank] = (a[rank] * inv) % p
        f = a[:, col].copy()
        f[rank] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = (a[hit] - f[hit, None] * a[rank]) % p
        pivots[rank] = col
        rank += 1
        if rank == m:
            break
    return rank


def rref_table_numpy(a, add_t, mul_t, neg_t, inv_t, pivots):
    m, n = a.shape
    rank = 0
    for col in range(n):
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = int(inv_t[a[rank, col]])
        if inv != 1:
            a[rank] = mul_t[inv, a[rank]]
        f = a[:, col].copy()
        f[rank] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = add_t[a[hit], mul_t[neg_t[f[hit, None]], a[rank]]]
        pivots[rank] = col
        rank += 1
        if rank == m:
            break
    return rank


def reduce_rows_prime_numpy(rows, basis, pivots, p):
    for t in range(basis.shape[0]):
        f = rows[:, pivots[t]].copy()
        hit = np.flatnonzero(f)
        if hit.size:
            rows[hit] = (rows[hit] - f[hit, None] * basis[t]) % p


def reduce_rows_table_numpy(rows, basis, pivots, add_t, mul_t, neg_t):
    for t in range(basis.shape[0]):
        f = rows[:, pivots[t]].copy()
        hit = np.flatnonzero(f)
        if hit.size:
            rows[hit] = add_t[rows[hit], mul_t[neg_t[f[hit, None]], basis[t]]]


def convolve_prime_numpy(a, b, table, p, out):
    for i in np.flatnonzero(a):
        row = table[i]
        out[row] = (out[row] + int(a[i]) * b) % p


def convolve_table_numpy(a, b, table, add_t, mul_t, out):
    for i in np.flatnonzero(a):
        row = table[i]
        out[row] = add_t[out[row], mul_t[int(a[i]), b]]


def sum_permuted_prime_numpy(vec, perms, p, out):
    for r in range(perms.shape[0]):
        row = perms[r]
        out[row] = (out[row] + vec) % p


def sum_permuted_table_numpy(vec, perms, add_t, out):
    for r in range(perms.shape[0]):
        row = perms[r]
        out[row] = add_t[out[row], vec]


# ---------------------------------------------------------------------------
# backend selection

if njit is not None:
    BACKEND = "numba"
    inv_mod = njit(cache=True)(_inv_mod_impl)
    rref_prime_numba = njit(cache=True)(_rref_prime_impl)
    rref_table_numba = njit(cache=True)(_rref_table_impl)
    reduce_rows_prime_numba = njit(cache=True)(_reduce_rows_prime_impl)
    reduce_rows_table_numba = njit(cache=True)(_reduce_rows_table_impl)
    convolve_prime_numba = njit(cache=True)(_convolve_prime_impl)
    convolve_table_numba = njit(cache=True)(_convolve_table_impl)
    sum_permuted_prime_numba = njit(cache=True)(_sum_permuted_prime_impl)
    sum_permuted_table_numba = njit(cache=True)(_sum_permuted_table_impl)

    rref_prime = rref_prime_numba
    rref_table = rref_table_numba
    reduce_rows_prime = reduce_rows_prime_numba
    reduce_rows_table = reduce_rows_table_numba
    convolve_prime = convolve_prime_numba
    convolve_table = convolve_table_numba
    sum_permuted_prime = sum_permuted_prime_numba
    sum_permuted_table = sum_permuted_table_numba
else:
    BACKEND = "numpy"
    inv_mod = _inv_mod_impl
    rref_prime_numba = None
    rref_table_numba = None
    reduce_rows_prime_numba = None
    reduce_rows_table_numba = None
    convolve_prime_numba = None
    convolve_table_numba = None
    sum_permuted_prime_numba = None
    sum_permuted_table_numba = None

    rref_prime = rref_prime_numpy
    rref_table = rref_table_numpy
    reduce_rows_prime = reduce_rows_prime_numpy
    reduce_rows_table = reduce_rows_table_numpy
    convolve_prime = convolve_prime_numpy
    convolve_table = convolve_table_numpy
    sum_permuted_prime = sum_permuted_prime_numpy
    sum_permuted_table = sum_permuted_table_numpy
