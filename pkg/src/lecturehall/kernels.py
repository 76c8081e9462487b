"""Enumeration kernels behind the polynomial and fiber computations.

Each kernel walks a mixed-radix box ``[0, s_1) x ... x [0, s_n)`` in
lexicographic order (last coordinate fastest) and accumulates a histogram or
a fiber table.  Two interchangeable backends exist:

* ``numba``: odometer loops compiled with ``@njit``.
* ``numpy``: chunked vectorised decoding of the box index.

The default is numba when it imports; set ``LECTUREHALL_DISABLE_NUMBA=1`` to
force the numpy path.  All arithmetic is int64 and inputs are screened by
:func:`check_int64` so no intermediate product can wrap.
"""
from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]

        def decorator(func):
            return func
        return decorator

BACKENDS = ("numba", "numpy")
NUMBA_DISABLED = os.environ.get("LECTUREHALL_DISABLE_NUMBA", "").lower() in {"1", "true", "yes"}
DEFAULT_BACKEND = "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"

# rows per vectorised block in the numpy backend
CHUNK = 1 << 18

_INT64_LIMIT = 1 << 62


def resolve_backend(backend: str | None) -> str:
    backend = DEFAULT_BACKEND if backend is None else backend
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def check_int64(entries, extra: int = 1) -> np.ndarray:
    """Return ``entries`` as an int64 array, refusing inputs whose kernel
    intermediates (at most ``max(s)**2 * n * extra``) could leave int64."""
    entries = [int(v) for v in entries]
    top = max(entries)
    if top * top * len(entries) * max(extra, 1) >= _INT64_LIMIT:
        raise OverflowError(f"signature {tuple(entries)} too large for int64 kernels")
    if math.prod(entries) >= _INT64_LIMIT:
        raise OverflowError("box size does not fit in int64")
    return np.asarray(entries, dtype=np.int64)


def decode_index(index: int, radices) -> tuple[int, ...]:
    """Box coordinates of the ``index``-th element in lexicographic order."""
    out = []
    for r in reversed(list(radices)):
        index, d = divmod(index, int(r))
        out.append(d)
    return tuple(reversed(out))


# --- numba kernels ----------------------------------------------------------

@njit(cache=True)
def _asc_nb(e, s):
    n = e.shape[0]
    a = 1 if e[0] > 0 else 0
    for i in range(n - 1):
        if e[i] * s[i + 1] < e[i + 1] * s[i]:
            a += 1
    return a


@njit(cache=True)
def _advance_nb(e, s):
    i = e.shape[0] - 1
    while i >= 0:
        e[i] += 1
        if e[i] < s[i]:
            return i
        e[i] = 0
        i -= 1
    return -1


@njit(cache=True)
def _stat_hist_nb(s):
    n = s.shape[0]
    last = s[n - 1]
    out = np.zeros(last * n + 1, dtype=np.int64)
    e = np.zeros(n, dtype=np.int64)
    while True:
        out[last * _asc_nb(e, s) - e[n - 1]] += 1
        if _advance_nb(e, s) < 0:
            break
    return out


@njit(cache=True)
def _qstat_hist_nb(s, s_next):
    n = s.shape[0]
    out = np.zeros(s_next * n + 1, dtype=np.int64)
    e = np.zeros(n, dtype=np.int64)
    while True:
        out[s_next * _asc_nb(e, s) - (s_next * e[n - 1]) // s[n - 1]] += 1
        if _advance_nb(e, s) < 0:
            break
    return out


@njit(cache=True)
def _fiber_scan_nb(s, s_next):
    n = s.shape[0]
    last = s[n - 1]
    size = s_next * n + 1
    first_idx = np.full(size, -1, dtype=np.int64)
    first_stat = np.zeros(size, dtype=np.int64)
    best_a = -1
    best_b = -1
    e = np.zeros(n, dtype=np.int64)
    idx = 0
    while True:
        a = _asc_nb(e, s)
        q = s_next * a - (s_next * e[n - 1]) // last
        st = last * a - e[n - 1]
        if first_idx[q] < 0:
            first_idx[q] = idx
            first_stat[q] = st
        elif st != first_stat[q]:
            # idx only grows, so the first mismatch seen for a fiber is its smallest
            if best_a < 0 or first_idx[q] < best_a:
                best_a = first_idx[q]
                best_b = idx
        idx += 1
        if _advance_nb(e, s) < 0:
            break
    return best_a, best_b


@njit(cache=True)
def _pp_hist_nb(s):
    n = s.shape[0]
    out = np.zeros(s[n - 1] * n, dtype=np.int64)
    d = np.zeros(n, dtype=np.int64)
    lam = np.zeros(n, dtype=np.int64)
    while True:
        out[lam[n - 1]] += 1
        i = _advance_nb(d, s)
        if i < 0:
            break
        for j in range(i, n):
            if j == 0:
                lam[0] = d[0]
            else:
                # smallest integer >= s_j * lam_{j-1} / s_{j-1}
                lam[j] = -((-s[j] * lam[j - 1]) // s[j - 1]) + d[j]
    return out


# --- numpy kernels ----------------------------------------------------------

def _digit_blocks(s: np.ndarray):
    total = int(np.prod(s))
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        digits = np.empty((idx.size, s.size), dtype=np.int64)
        rest = idx.copy()
        for j in range(s.size - 1, -1, -1):
            rest, digits[:, j] = np.divmod(rest, s[j])
        yield idx, digits


def _asc_np(e: np.ndarray, s: np.ndarray) -> np.ndarray:
    a = (e[:, 0] > 0).astype(np.int64)
    if s.size > 1:
        a += (e[:, :-1] * s[1:] < e[:, 1:] * s[:-1]).sum(axis=1)
    return a


def _stat_hist_np(s):
    last = s[-1]
    out = np.zeros(last * s.size + 1, dtype=np.int64)
    for _, e in _digit_blocks(s):
        vals = last * _asc_np(e, s) - e[:, -1]
        out += np.bincount(vals, minlength=out.size)
    return out


def _qstat_hist_np(s, s_next):
    out = np.zeros(s_next * s.size + 1, dtype=np.int64)
    for _, e in _digit_blocks(s):
        vals = s_next * _asc_np(e, s) - (s_next * e[:, -1]) // s[-1]
        out += np.bincount(vals, minlength=out.size)
    return out


def _fiber_scan_np(s, s_next):
    last = s[-1]
    size = s_next * s.size + 1
    first_idx = np.full(size, -1, dtype=np.int64)
    first_stat = np.zeros(size, dtype=np.int64)
    best = None
    for idx, e in _digit_blocks(s):
        a = _asc_np(e, s)
        q = s_next * a - (s_next * e[:, -1]) // last
        st = last * a - e[:, -1]
        keys, pos = np.unique(q, return_index=True)
        new = first_idx[keys] < 0
        first_idx[keys[new]] = idx[pos[new]]
        first_stat[keys[new]] = st[pos[new]]
        bad = st != first_stat[q]
        if bad.any():
            fa = first_idx[q[bad]]
            fb = idx[bad]
            k = np.lexsort((fb, fa))[0]
            cand = (int(fa[k]), int(fb[k]))
            if best is None or cand < best:
                best = cand
    return best if best is not None else (-1, -1)


def _pp_hist_np(s):
    out = np.zeros(s[-1] * s.size, dtype=np.int64)
    for _, d in _digit_blocks(s):
        lam = d[:, 0]
        for j in range(1, s.size):
            lam = -((-s[j] * lam) // s[j - 1]) + d[:, j]
        out += np.bincount(lam, minlength=out.size)
    return out


# --- dispatch ---------------------------------------------------------------

def stat_histogram(entries, backend: str | None = None) -> np.ndarray:
    """``out[d] = #{e in I_n^(s) : s_n*asc(e) - e_n = d}``."""
    s = check_int64(entries)
    if resolve_backend(backend) == "numba":
        return _stat_hist_nb(s)
    return _stat_hist_np(s)


def qstat_histogram(entries, s_next: int, backend: str | None = None) -> np.ndarray:
    """``out[d] = #{e in I_{n-1}^(s) : s_next*asc(e) - floor(s_next*e_{n-1}/s_{n-1}) = d}``
    where ``entries`` is ``(s_1, ..., s_{n-1})``."""
    s = check_int64(list(entries) + [s_next])[:-1]
    if resolve_backend(backend) == "numba":
        return _qstat_hist_nb(s, np.int64(s_next))
    return _qstat_hist_np(s, np.int64(s_next))


def fiber_scan(entries, s_next: int, backend: str | None = None):
    """Look for two sequences with equal quotient exponent but different
    ``s_{n-1}*asc - e_{n-1}``.

    Returns ``None`` when every quotient fiber is stat-constant, otherwise the
    box indices ``(i, j)``, ``i < j``, of the lexicographically smallest such
    pair.
    """
    s = check_int64(list(entries) + [s_next])[:-1]
    if resolve_backend(backend) == "numba":
        a, b = _fiber_scan_nb(s, np.int64(s_next))
    else:
        a, b = _fiber_scan_np(s, np.int64(s_next))
    if a < 0:
        return None
    return int(a), int(b)


def parallelepiped_histogram(entries, backend: str | None = None) -> np.ndarray:
    """``out[d] = #{lambda in the fundamental parallelepiped : lambda_n = d}``."""
    s = check_int64(entries, extra=2)
    if resolve_backend(backend) == "numba":
        return _pp_hist_nb(s)
    return _pp_hist_np(s)
