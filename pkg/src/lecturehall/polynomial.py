"""Dense univariate polynomials with nonnegative integer coefficients."""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceeded, NotDivisible

DEFAULT_DEGREE_CAP = 10**7


@dataclass(frozen=True)
class IntPolynomial:
    """``coeffs[d]`` is the coefficient of ``x**d``; trailing zeros are stripped."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        if any(c < 0 for c in coeffs):
            raise ValueError(f"negative coefficient in {coeffs}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[d] + other[d] for d in range(size)))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __str__(self):
        return render_plain(self)


def from_coeffs(coeffs: Iterable[int]) -> IntPolynomial:
    return IntPolynomial(tuple(coeffs))


def from_exponent_multiset(exponents: Iterable[int],
                           degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    counts = Counter()
    for d in exponents:
        if d < 0:
            raise ValueError(f"negative exponent {d}")
        if d > degree_cap:
            raise CapExceeded("exponent", d, degree_cap)
        counts[d] += 1
    if not counts:
        return IntPolynomial()
    top = max(counts)
    return IntPolynomial(tuple(counts[d] for d in range(top + 1)))


def ones(k: int) -> IntPolynomial:
    """``1 + x + ... + x**(k-1)``."""
    if k < 1:
        raise ValueError("k must be positive")
    return IntPolynomial((1,) * k)


def mul_ones(p: IntPolynomial, k: int) -> IntPolynomial:
    """Return ``p * (1 + x + ... + x**(k-1))`` as a sliding-window sum."""
    if k < 1:
        raise ValueError("k must be positive")
    if p.is_zero():
        return p
    c = p.coeffs
    out = []
    window = 0
    for d in range(len(c) + k - 1):
        if d < len(c):
            window += c[d]
        if d >= k:
            window -= c[d - k]
        out.append(window)
    return IntPolynomial(tuple(out))


def divide_exact_ones(p: IntPolynomial, k: int) -> IntPolynomial:
    """Return ``q`` with ``q * (1 + x + ... + x**(k-1)) == p``.

    Uses ``p * (1 - x) = q * (1 - x**k)``, i.e. ``q[d] = q[d-k] + p[d] - p[d-1]``,
    then checks that the leftover top coefficients vanish.  Raises
    :class:`NotDivisible` on a remainder or on a quotient that would need
    negative coefficients.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if p.is_zero() or k == 1:
        return p
    top = p.degree - (k - 1)
    if top < 0:
        raise NotDivisible(f"degree {p.degree} is below divisor degree {k - 1}")
    q = []
    for d in range(top + 1):
        v = p[d] - p[d - 1] + (q[d - k] if d >= k else 0)
        if v < 0:
            raise NotDivisible(f"quotient coefficient at x^{d} would be {v}")
        q.append(v)
    result = IntPolynomial(tuple(q))
    if mul_ones(result, k) != p:
        raise NotDivisible(f"nonzero remainder dividing by 1+...+x^{k - 1}")
    return result


def nonzero_coeff_sequence(p: IntPolynomial) -> list[int]:
    """Nonzero coefficients in ascending-exponent order."""
    return [c for c in p.coeffs if c]


def render_plain(p: IntPolynomial) -> str:
    """``c_d*x^d + ... + c_0`` with zero terms dropped and unit coefficients elided."""
    if p.is_zero():
        return "0"
    terms = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        mono = "x" if d == 1 else f"x^{d}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def parse_plain(text: str) -> IntPolynomial:
    """Inverse of :func:`render_plain`."""
    text = text.strip()
    if text == "0":
        return IntPolynomial()
    counts = {}
    for term in text.split(" + "):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"cannot parse term {term!r}")
        if m.group(3) is not None:
            d, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            d = int(m.group(2)) if m.group(2) else 1
        counts[d] = counts.get(d, 0) + c
    return IntPolynomial(tuple(counts.get(d, 0) for d in range(max(counts) + 1)))


def to_json(p: IntPolynomial) -> str:
    return json.dumps({"coeffs": list(p.coeffs)}, separators=(",", ":"))


def from_json(text: str) -> IntPolynomial:
    return IntPolynomial(tuple(json.loads(text)["coeffs"]))

