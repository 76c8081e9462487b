"""Slow reference implementations written straight from the definitions.

They use Fraction and itertools only, so they share no code path with the
integer kernels they check.
"""
import itertools
from collections import Counter
from fractions import Fraction


def inversion_sequences(s):
    return list(itertools.product(*(range(v) for v in s)))


def ascents(e, s):
    out = {0} if e[0] > 0 else set()
    for i in range(1, len(e)):
        if Fraction(e[i - 1], s[i - 1]) < Fraction(e[i], s[i]):
            out.add(i)
    return out


def coeffs(counter):
    if not counter:
        return []
    return [counter.get(d, 0) for d in range(max(counter) + 1)]


def Q(s):
    return coeffs(Counter(s[-1] * len(ascents(e, s)) - e[-1] for e in inversion_sequences(s)))


def floor_frac(x):
    return x.numerator // x.denominator


def quotient(s):
    head, last = s[:-1], s[-1]
    return coeffs(Counter(last * len(ascents(e, head)) - floor_frac(Fraction(last * e[-1], head[-1]))
                          for e in inversion_sequences(head)))


def in_parallelepiped(lam, s):
    prev = Fraction(0)
    for l, sj in zip(lam, s):
        alpha = Fraction(l, sj) - prev
        if not 0 <= alpha < 1:
            return False
        prev = Fraction(l, sj)
    return True


def parallelepiped_points(s):
    n = len(s)
    return [lam for lam in itertools.product(*(range(n * v) for v in s)) if in_parallelepiped(lam, s)]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def lecture_hall_count(N, n):
    return sum(1 for lam in itertools.product(range(N + 1), repeat=n)
               if sum(lam) == N and all(Fraction(lam[i], i + 1) <= Fraction(lam[i + 1], i + 2)
                                       for i in range(n - 1)))


def odd_part_count(N, n):
    # coefficient extraction from prod 1/(1-q^(2i-1)) by truncated series
    series = [1] + [0] * N
    for i in range(1, n + 1):
        part = 2 * i - 1
        geo = [1 if d % part == 0 else 0 for d in range(N + 1)]
        series = poly_mul(series, geo)[:N + 1]
    return series[N]
