"""Lattice points of the fundamental parallelepiped of the s-lecture hall cone.

The cone has generators ``v_i = (0, ..., 0, s_i, ..., s_n)``.  Writing a
point as ``sum alpha_i v_i`` gives ``lambda_j / s_j = alpha_1 + ... + alpha_j``,
so ``lambda`` lies in the half-open parallelepiped exactly when

    0 <= lambda_j / s_j - lambda_{j-1} / s_{j-1} < 1      (lambda_0 / s_0 := 0)

for every ``j``.  For fixed ``lambda_{j-1}`` the admissible ``lambda_j`` are the
``s_j`` consecutive integers starting at ``ceil(s_j * lambda_{j-1} / s_{j-1})``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import kernels
from .errors import CapExceeded
from .polynomial import IntPolynomial
from .seqcore import as_signature, check_cap

MAX_LH_TOTAL = 200
MAX_LH_PARTS = 6


@dataclass(frozen=True)
class LatticePoint:
    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def in_parallelepiped(coords, s) -> bool:
    """Exact membership test, by cross-multiplication."""
    sig = as_signature(s)
    if len(coords) != sig.n:
        return False
    prev, prev_s = 0, 1
    for lam, sj in zip(coords, sig.entries):
        # 0 <= lam/sj - prev/prev_s < 1, scaled by sj*prev_s > 0
        diff = lam * prev_s - prev * sj
        if not 0 <= diff < sj * prev_s:
            return False
        prev, prev_s = lam, sj
    return True


def enumerate_parallelepiped(s, cap: int | None = None) -> Iterator[LatticePoint]:
    """Yield every integer point of the fundamental parallelepiped.

    Exactly ``s_1 * ... * s_n`` points come out; the cap is checked up front.
    """
    sig = as_signature(s)
    check_cap(sig.product, cap)
    entries = sig.entries

    def walk(j, prefix):
        if j == len(entries):
            yield LatticePoint(tuple(prefix))
            return
        lo = 0 if j == 0 else _ceil_div(entries[j] * prefix[-1], entries[j - 1])
        for lam in range(lo, lo + entries[j]):
            prefix.append(lam)
            yield from walk(j + 1, prefix)
            prefix.pop()

    return walk(0, [])


def box_scan(s) -> list[LatticePoint]:
    """Brute-force membership scan of the box ``0 <= lambda_j < n * s_j``.

    Only meant for tiny signatures, as an independent check of the enumeration.
    """
    sig = as_signature(s)
    ranges = [range(sig.n * v) for v in sig.entries]
    return [LatticePoint(c) for c in itertools.product(*ranges) if in_parallelepiped(c, sig)]


def oracle_inflated_eulerian(s, cap: int | None = None, backend: str | None = None) -> IntPolynomial:
    """Q_n^(s)(x) as ``sum of x^lambda_n`` over the parallelepiped points."""
    sig = as_signature(s)
    check_cap(sig.product, cap)
    hist = kernels.parallelepiped_histogram(sig.entries, backend)
    q = IntPolynomial(tuple(int(c) for c in hist))
    assert q(1) == sig.product
    return q


def oracle_by_streaming(s, cap: int | None = None) -> IntPolynomial:
    """Pure-Python counterpart of :func:`oracle_inflated_eulerian`."""
    counts: dict[int, int] = {}
    total = 0
    for pt in enumerate_parallelepiped(s, cap):
        counts[pt[-1]] = counts.get(pt[-1], 0) + 1
        total += 1
    assert total == as_signature(s).product
    return IntPolynomial(tuple(counts.get(d, 0) for d in range(max(counts) + 1)))


def _check_lh_args(N: int, n: int) -> None:
    if N < 0 or n < 1:
        raise ValueError("need N >= 0 and n >= 1")
    if N > MAX_LH_TOTAL:
        raise CapExceeded("N", N, MAX_LH_TOTAL)
    if n > MAX_LH_PARTS:
        raise CapExceeded("n", n, MAX_LH_PARTS)


def count_lecture_hall(N: int, n: int) -> int:
    """LH(N, n): sequences ``0 <= lambda_1/1 <= ... <= lambda_n/n`` summing to ``N``."""
    _check_lh_args(N, n)

    @lru_cache(maxsize=None)
    def count(j, prev, remaining):
        # j is the 1-based index of the part being chosen; prev = lambda_{j-1}
        if j > n:
            return 1 if remaining == 0 else 0
        parts_left = n - j + 1
        lo = 0 if j == 1 else _ceil_div(j * prev, j - 1)
        total = 0
        lam = lo
        # parts never decrease, so lam * parts_left <= remaining
        while lam * parts_left <= remaining:
            if j == 1 or (j - 1) * lam >= j * prev:
                total += count(j + 1, lam, remaining - lam)
            lam += 1
        return total

    return count(1, 0, N)


def count_odd_parts(N: int, n: int) -> int:
    """Partitions of ``N`` into parts from ``{1, 3, ..., 2n - 1}``."""
    _check_lh_args(N, n)
    ways = [1] + [0] * N
    for part in range(1, 2 * n, 2):
        for total in range(part, N + 1):
            ways[total] += ways[total - part]
    return ways[N]
