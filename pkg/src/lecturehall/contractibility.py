"""n-contractibility of signature sequences, decided three independent ways.

``s`` is n-contractible when Q_{n-1}^(s) and Q_n^(s) / (1 + ... + x^(s_n - 1))
have the same sequence of nonzero coefficients; a finite prefix is called
contractible when this holds at every ``3 <= n <= len(s)``.

* :func:`is_n_contractible_bruteforce` compares the two polynomials.
* :func:`is_n_contractible_fiber` checks that every level set of the quotient
  exponent carries a single value of ``s_{n-1}*asc(e) - e_{n-1}``.
* :func:`is_n_contractible_fast` is the closed-form rule
  ``s_n >= s_{n-1}``, or ``s_n = s_{n-1} - 1`` with ``s_1 = ... = s_{n-2} = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .eulerian import inflated_eulerian, quotient_polynomial
from .polynomial import nonzero_coeff_sequence
from .seqcore import (InversionSeq, SignatureSeq, as_signature, check_cap,
                      qstat, stat)

Witness = tuple[InversionSeq, InversionSeq]


def _check_n(sig: SignatureSeq, n: int) -> None:
    if n < 3:
        raise ValueError("n-contractibility is defined for n >= 3")
    if n > sig.n:
        raise ValueError(f"n = {n} exceeds signature length {sig.n}")


def is_n_contractible_bruteforce(s, n: int, cap: int | None = None,
                                 backend: str | None = None) -> bool:
    sig = as_signature(s)
    _check_n(sig, n)
    lower = inflated_eulerian(sig.prefix(n - 1), cap, backend)
    quotient = quotient_polynomial(sig.prefix(n), cap, backend)
    return nonzero_coeff_sequence(lower) == nonzero_coeff_sequence(quotient)


def is_n_contractible_fiber(s, n: int, cap: int | None = None,
                            backend: str | None = None) -> tuple[bool, Witness | None]:
    """Fiber check over I_{n-1}^(s).

    On failure the witness ``(e, e_bar)`` is the lexicographically smallest pair
    (``e < e_bar``) with equal quotient exponent and unequal
    ``s_{n-1}*asc - e_{n-1}``.
    """
    sig = as_signature(s)
    _check_n(sig, n)
    head = sig.prefix(n - 1)
    check_cap(head.product, cap, "s_1*...*s_{n-1}")
    found = kernels.fiber_scan(head.entries, sig[n - 1], backend)
    if found is None:
        return True, None
    e, e_bar = (InversionSeq(kernels.decode_index(i, head.entries), head) for i in found)
    assert verify_witness(sig, n, (e, e_bar)), (sig, n, e, e_bar)
    return False, (e, e_bar)


def verify_witness(s, n: int, witness: Witness) -> bool:
    """Re-check a failing pair directly with the scalar statistics."""
    sig = as_signature(s)
    e, e_bar = witness
    s_n = sig[n - 1]
    return (qstat(e, s_n) == qstat(e_bar, s_n)
            and stat(e) != stat(e_bar))


def is_n_contractible_fast(s, n: int) -> bool:
    sig = as_signature(s)
    _check_n(sig, n)
    s_n, s_prev = sig[n - 1], sig[n - 2]
    if s_n >= s_prev:
        return True
    return s_n == s_prev - 1 and all(v == 1 for v in sig.entries[:n - 2])


@dataclass(frozen=True)
class NVerdict:
    contractible: bool
    method_agreement: bool
    bruteforce: bool
    fiber: bool
    fast: bool
    witness: Witness | None = None


@dataclass
class ContractReport:
    s: SignatureSeq
    verdicts: dict[int, NVerdict] = field(default_factory=dict)
    witness: Witness | None = None
    shape: str | None = None          # "nondecreasing", "drop" or None
    drop_index: int | None = None     # N for the "drop" shape

    @property
    def contractible(self) -> bool:
        return all(v.contractible for v in self.verdicts.values())

    @property
    def method_agreement(self) -> bool:
        return all(v.method_agreement for v in self.verdicts.values())

    @property
    def shape_ok(self) -> bool:
        return self.shape is not None

    @property
    def shape_agreement(self) -> bool:
        return self.shape_ok == self.contractible

    def failing_indices(self) -> list[int]:
        return [n for n, v in self.verdicts.items() if not v.contractible]


def check_n(s, n: int, cap: int | None = None, backend: str | None = None) -> NVerdict:
    """Run all three methods at one index."""
    brute = is_n_contractible_bruteforce(s, n, cap, backend)
    fiber, witness = is_n_contractible_fiber(s, n, cap, backend)
    fast = is_n_contractible_fast(s, n)
    return NVerdict(contractible=fiber, method_agreement=brute == fiber == fast,
                    bruteforce=brute, fiber=fiber, fast=fast, witness=witness)


def _nondecreasing(values) -> bool:
    return all(a <= b for a, b in zip(values, values[1:]))


def prefix_shape(s) -> tuple[str | None, int | None]:
    """Match a finite prefix against the two contractible shapes.

    Returns ``("nondecreasing", None)`` when ``s_2, s_3, ...`` never decrease,
    ``("drop", N)`` when there is an ``N >= 3`` with ``s_N = s_{N-1} - 1``,
    ``s_1 = ... = s_{N-2} = 1`` and ``s_N, s_{N+1}, ...`` nondecreasing, and
    ``(None, None)`` otherwise.  Indices are 1-based.

    The nondecreasing run has to start at ``s_2``: index 3 compares ``s_3``
    with ``s_2``, so ``(1, 7, 2, 2)`` fails there even though ``s_3, s_4``
    never decrease.
    """
    v = as_signature(s).entries
    if _nondecreasing(v[1:]):
        return "nondecreasing", None
    for N in range(3, len(v) + 1):
        if (v[N - 1] == v[N - 2] - 1 and all(x == 1 for x in v[:N - 2])
                and _nondecreasing(v[N - 1:])):
            return "drop", N
    return None, None


def classify_prefix(s, cap: int | None = None, backend: str | None = None) -> ContractReport:
    """Per-index verdicts for ``3 <= n <= len(s)`` plus the global shape match."""
    sig = as_signature(s)
    if sig.n < 3:
        raise ValueError("classification needs a signature of length >= 3")
    # the largest enumeration is I_{L-1} for both the quotient and the fiber scan
    check_cap(math.prod(sig.entries[:-1]), cap, "s_1*...*s_{n-1}")
    report = ContractReport(sig)
    for n in range(3, sig.n + 1):
        v = check_n(sig, n, cap, backend)
        report.verdicts[n] = v
        if report.witness is None and v.witness is not None:
            report.witness = v.witness
    report.shape, report.drop_index = prefix_shape(sig)
    return report
