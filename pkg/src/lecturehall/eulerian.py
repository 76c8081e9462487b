"""Inflated s-Eulerian polynomials, their quotients, and the permutation case."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import kernels
from .errors import CapExceeded
from .polynomial import IntPolynomial, divide_exact_ones, from_exponent_multiset
from .seqcore import (InversionSeq, SignatureSeq, as_signature, ascent_set,
                      check_cap)

MAX_PERMUTATION_N = 8


def _to_poly(hist) -> IntPolynomial:
    return IntPolynomial(tuple(int(c) for c in hist))


def inflated_eulerian(s, cap: int | None = None, backend: str | None = None) -> IntPolynomial:
    """Q_n^(s)(x), the generating polynomial of ``s_n*asc(e) - e_n`` over I_n^(s)."""
    sig = as_signature(s)
    check_cap(sig.product, cap)
    q = _to_poly(kernels.stat_histogram(sig.entries, backend))
    assert q(1) == sig.product
    return q


def quotient_polynomial(s, cap: int | None = None, backend: str | None = None) -> IntPolynomial:
    """Q_n^(s)(x) / (1 + ... + x^(s_n - 1)) via the floor statistic over I_{n-1}^(s)."""
    sig = as_signature(s)
    if sig.n < 2:
        raise ValueError("the quotient needs a signature of length >= 2")
    head = sig.entries[:-1]
    check_cap(math.prod(head), cap, "s_1*...*s_{n-1}")
    q = _to_poly(kernels.qstat_histogram(head, sig[-1], backend))
    assert q(1) == math.prod(head)
    return q


def quotient_by_division(s, cap: int | None = None, backend: str | None = None) -> IntPolynomial:
    """Same polynomial as :func:`quotient_polynomial`, obtained by dividing Q_n^(s).

    Raises :class:`~lecturehall.errors.NotDivisible` if the division is not exact.
    """
    sig = as_signature(s)
    if sig.n < 2:
        raise ValueError("the quotient needs a signature of length >= 2")
    return divide_exact_ones(inflated_eulerian(sig, cap, backend), sig[-1])


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def descent_set(p: Permutation) -> tuple[int, ...]:
    """1-based positions ``i`` with ``p_i > p_{i+1}``."""
    v = p.values
    return tuple(i + 1 for i in range(len(v) - 1) if v[i] > v[i + 1])


def des(p: Permutation) -> int:
    return len(descent_set(p))


def natural_signature(n: int) -> SignatureSeq:
    return SignatureSeq(tuple(range(1, n + 1)))


def perm_to_inversion(p: Permutation) -> InversionSeq:
    """``e_i`` = number of earlier entries larger than ``p_i``; lives in I_n^(1,...,n)."""
    v = p.values
    e = InversionSeq(tuple(sum(1 for j in range(i) if v[j] > v[i]) for i in range(len(v))),
                     natural_signature(len(v)))
    assert ascent_set(e) == descent_set(p), (p, e)
    assert e[-1] == len(v) - v[-1]
    return e


def permutations(n: int):
    """All of S_n in lexicographic order, guarded at n <= 8."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_PERMUTATION_N:
        raise CapExceeded("n", n, MAX_PERMUTATION_N)
    return (Permutation(t) for t in itertools.permutations(range(1, n + 1)))


def chung_graham_P(n: int) -> IntPolynomial:
    """``sum over S_n of x^(n*des(p) + p_n)``."""
    return from_exponent_multiset(n * des(p) + p[-1] for p in permutations(n))


def chung_graham_rhs(n: int) -> IntPolynomial:
    """``sum over S_{n-1} of x^(n*des(p) + p_{n-1})``; the weight stays ``n``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return from_exponent_multiset(n * des(p) + p[-1] for p in permutations(n - 1))


def chung_graham_identities(n: int) -> dict:
    """Compare P_n with x^n Q_n^(1..n) and with the S_{n-1} sum after division."""
    P = chung_graham_P(n)
    Q = inflated_eulerian(natural_signature(n))
    out = {"coeffs": list(P.coeffs), "specialization": P == Q.shift(n)}
    if n >= 2:
        quotient = divide_exact_ones(P, n)
        rhs = chung_graham_rhs(n)
        # the division lands exactly one degree above the S_{n-1} sum
        out["quotient_identity"] = quotient == rhs.shift(1)
        out["unshifted_identity"] = quotient == rhs
    return out
