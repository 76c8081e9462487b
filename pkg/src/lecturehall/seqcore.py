"""Signature sequences, s-inversion sequences and the ascent statistics.

Every ratio comparison here is done by integer cross-multiplication, so
``e_i / s_i < e_j / s_j`` is evaluated as ``e_i * s_j < e_j * s_i``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded

DEFAULT_CAP = 10**8


@dataclass(frozen=True)
class SignatureSeq:
    """A finite sequence of positive integers ``(s_1, ..., s_n)``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if not entries:
            raise ValueError("signature must have at least one entry")
        if any(v < 1 for v in entries):
            raise ValueError(f"signature entries must be positive, got {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def product(self) -> int:
        return math.prod(self.entries)

    def prefix(self, k: int) -> "SignatureSeq":
        if not 1 <= k <= self.n:
            raise ValueError(f"prefix length {k} outside [1, {self.n}]")
        return SignatureSeq(self.entries[:k])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def as_signature(s: SignatureSeq | Iterable[int]) -> SignatureSeq:
    if isinstance(s, SignatureSeq):
        return s
    return SignatureSeq(tuple(s))


@dataclass(frozen=True)
class InversionSeq:
    """An element ``e`` of I_n^(s), i.e. ``0 <= e_i < s_i`` for every i."""

    values: tuple[int, ...]
    signature: SignatureSeq

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        sig = as_signature(self.signature)
        if len(values) != sig.n:
            raise ValueError(f"length {len(values)} does not match signature {sig}")
        for v, bound in zip(values, sig.entries):
            if not 0 <= v < bound:
                raise ValueError(f"{values} is not an inversion sequence for {sig}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "signature", sig)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def check_cap(size: int, cap: int | None, what: str = "s_1*...*s_n") -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if size > cap:
        raise CapExceeded(what, size, cap)


def enumerate_inversion_sequences(s, cap: int | None = None) -> Iterator[InversionSeq]:
    """Yield every element of I_n^(s) in lexicographic order.

    The cap is checked eagerly, before the first element is produced.
    """
    sig = as_signature(s)
    check_cap(sig.product, cap)
    return (InversionSeq(values, sig)
            for values in itertools.product(*(range(v) for v in sig.entries)))


def _ascents(values: Sequence[int], entries: Sequence[int]) -> tuple[int, ...]:
    out = [0] if values[0] > 0 else []
    for i in range(len(values) - 1):
        # positions are 1-based: ascent i compares e_i and e_{i+1}
        if values[i] * entries[i + 1] < values[i + 1] * entries[i]:
            out.append(i + 1)
    return tuple(out)


def ascent_set(e: InversionSeq) -> tuple[int, ...]:
    """Asc(e) as a strictly increasing tuple of positions in ``{0, ..., n-1}``."""
    return _ascents(e.values, e.signature.entries)


def asc(e: InversionSeq) -> int:
    return len(ascent_set(e))


def stat(e: InversionSeq, s: SignatureSeq | None = None) -> int:
    """``s_n * asc(e) - e_n``, the exponent e contributes to Q_n^(s)."""
    sig = e.signature if s is None else as_signature(s)
    value = sig[-1] * asc(e) - e[-1]
    assert value >= 0, (e, value)
    return value


def qstat(e: InversionSeq, s_next: int, s: SignatureSeq | None = None) -> int:
    """``s_next * asc(e) - floor(s_next * e_{n-1} / s_{n-1})`` for ``e`` in I_{n-1}^(s).

    This is the exponent ``e`` contributes to the quotient
    Q_n^(s)(x) / (1 + x + ... + x^(s_n - 1)) when ``s_next = s_n``.
    """
    if s_next < 1:
        raise ValueError("s_next must be positive")
    sig = e.signature if s is None else as_signature(s)
    value = s_next * asc(e) - (s_next * e[-1]) // sig[-1]
    assert value >= 0, (e, s_next, value)
    return value
