import itertools
import math

import pytest

from lecturehall.cone_oracle import (box_scan, count_lecture_hall,
                                     count_odd_parts, enumerate_parallelepiped,
                                     in_parallelepiped, oracle_by_streaming,
                                     oracle_inflated_eulerian)
from lecturehall.errors import CapExceeded
from lecturehall.eulerian import inflated_eulerian
from lecturehall.polynomial import IntPolynomial as P

import _oracles

PI_32 = {(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3)}
PI_53 = {(0, 0), (0, 1), (1, 1), (0, 2), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3),
         (4, 3), (2, 4), (3, 4), (4, 4), (4, 5)}


def points(s):
    return [p.coords for p in enumerate_parallelepiped(s)]


def test_parallelepiped_32():
    assert set(points((3, 2))) == PI_32
    assert len(points((3, 2))) == 6


def test_parallelepiped_53():
    pts = points((5, 3))
    assert set(pts) == PI_53 and len(pts) == 15


@pytest.mark.parametrize("n", range(1, 6))
def test_all_ones_gives_origin(n):
    assert points((1,) * n) == [(0,) * n]


@pytest.mark.parametrize("s", [(2, 3), (1, 7), (3, 1, 2), (2, 2, 2), (1, 4, 2), (3, 2, 1, 2)])
def test_enumeration_equals_box_scan(s):
    pts = points(s)
    assert len(pts) == len(set(pts)) == math.prod(s)
    assert set(pts) == {p.coords for p in box_scan(s)}
    assert set(pts) == set(_oracles.parallelepiped_points(s))


def test_membership_rejects_outside():
    assert in_parallelepiped((4, 5), (5, 3))
    assert not in_parallelepiped((4, 6), (5, 3))   # alpha_2 = 1
    assert not in_parallelepiped((5, 3), (5, 3))   # alpha_1 = 1
    assert not in_parallelepiped((1, 0), (5, 3))   # alpha_2 < 0
    assert not in_parallelepiped((1,), (5, 3))


def test_oracle_examples():
    assert oracle_inflated_eulerian((5, 3)) == P((1, 2, 4, 4, 3, 1))
    assert oracle_inflated_eulerian((3, 2)) == P((1, 2, 2, 1))
    assert oracle_inflated_eulerian((1,)) == P((1,))
    assert oracle_by_streaming((5, 3)) == P((1, 2, 4, 4, 3, 1))


@pytest.mark.parametrize("s", list(itertools.product(range(1, 5), repeat=3)))
def test_oracle_agrees_with_statistic(s):
    assert oracle_inflated_eulerian(s) == inflated_eulerian(s) == oracle_by_streaming(s)


def test_oracle_cap():
    with pytest.raises(CapExceeded):
        oracle_inflated_eulerian((4, 4, 4), cap=63)
    with pytest.raises(CapExceeded):
        enumerate_parallelepiped((4, 4, 4), cap=63)


def test_lecture_hall_examples():
    assert count_lecture_hall(0, 4) == 1
    assert count_lecture_hall(4, 2) == 2
    assert count_odd_parts(4, 2) == 2
    assert count_odd_parts(0, 3) == 1
    assert count_odd_parts(5, 1) == 1


def test_partition_14_is_lecture_hall():
    lam = (1, 2, 4, 7)
    assert all((i + 2) * lam[i] <= (i + 1) * lam[i + 1] for i in range(3))
    # 1+2+4+5 fails: 4/3 > 5/4
    assert not 4 * 4 <= 3 * 5
    assert count_lecture_hall(14, 4) == _oracles.lecture_hall_count(14, 4)


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("N", range(0, 13))
def test_counts_match_brute_force(N, n):
    assert count_lecture_hall(N, n) == _oracles.lecture_hall_count(N, n)
    assert count_odd_parts(N, n) == _oracles.odd_part_count(N, n)


def test_lecture_hall_guards():
    with pytest.raises(CapExceeded):
        count_lecture_hall(201, 2)
    with pytest.raises(CapExceeded):
        count_odd_parts(10, 7)
    with pytest.raises(ValueError):
        count_lecture_hall(-1, 2)
