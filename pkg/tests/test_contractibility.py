import itertools

import pytest

from lecturehall.contractibility import (classify_prefix, check_n,
                                         is_n_contractible_bruteforce,
                                         is_n_contractible_fast,
                                         is_n_contractible_fiber,
                                         prefix_shape, verify_witness)
from lecturehall.errors import CapExceeded

FIB6 = (1, 1, 2, 3, 5, 8)


def test_172_not_contractible():
    assert not is_n_contractible_bruteforce((1, 7, 2), 3)
    assert not is_n_contractible_fast((1, 7, 2), 3)
    ok, (e, e_bar) = is_n_contractible_fiber((1, 7, 2), 3)
    assert not ok
    # s_{n-1} = 7, l = 5: the smallest k with floor(-5k/7) <= -2 is k = 2
    assert {e.values, e_bar.values} == {(0, 2), (0, 1)}
    assert (e.values, e_bar.values) == ((0, 1), (0, 2))


@pytest.mark.parametrize("n", range(3, 7))
def test_fibonacci_contractible(n):
    assert is_n_contractible_bruteforce(FIB6, n)
    assert is_n_contractible_fiber(FIB6, n) == (True, None)
    assert is_n_contractible_fast(FIB6, n)


def test_drop_by_one_after_ones():
    s = (1, 1, 3, 2)
    assert is_n_contractible_bruteforce(s, 4)
    assert is_n_contractible_fiber(s, 4)[0]
    assert is_n_contractible_fast(s, 4)


def test_small_value_in_prefix_breaks_drop():
    s = (1, 2, 1, 5, 3)
    ok, (e, e_bar) = is_n_contractible_fiber(s, 5)
    assert not ok
    assert (e.values, e_bar.values) == ((0, 0, 0, 1), (0, 1, 0, 0))
    assert not is_n_contractible_bruteforce(s, 5)
    assert not is_n_contractible_fast(s, 5)


def test_large_drop_after_ones():
    s = (1, 1, 5, 2)
    assert not is_n_contractible_fast(s, 4)
    assert not is_n_contractible_bruteforce(s, 4)
    ok, (e, e_bar) = is_n_contractible_fiber(s, 4)
    assert not ok
    # l = 3, s_{n-1} = 5: k = 2 since floor(-6/5) = -2
    assert {e.values, e_bar.values} == {(0, 0, 2), (0, 0, 1)}


@pytest.mark.parametrize("n", range(3, 7))
def test_all_ones(n):
    assert is_n_contractible_fiber((1,) * 6, n) == (True, None)


def test_index_checks():
    with pytest.raises(ValueError):
        is_n_contractible_fast((1, 2, 3), 2)
    with pytest.raises(ValueError):
        is_n_contractible_bruteforce((1, 2, 3), 4)
    with pytest.raises(CapExceeded):
        is_n_contractible_fiber((9, 9, 9, 9), 4, cap=100)


def test_classify_fibonacci():
    r = classify_prefix(FIB6)
    assert r.contractible and r.method_agreement
    assert sorted(r.verdicts) == [3, 4, 5, 6]
    assert (r.shape, r.drop_index) == ("nondecreasing", None)
    assert r.witness is None and r.shape_agreement


def test_classify_exceptional_drop():
    r = classify_prefix((1, 1, 3, 2, 2))
    assert r.contractible and r.method_agreement
    assert (r.shape, r.drop_index) == ("drop", 4)


def test_classify_172():
    r = classify_prefix((1, 7, 2, 2, 2))
    assert not r.contractible and r.method_agreement
    assert r.failing_indices() == [3]
    assert r.witness is not None
    assert r.shape is None and r.shape_agreement


def test_classify_needs_three():
    with pytest.raises(ValueError):
        classify_prefix((1, 2))


def test_prefix_shape_cases():
    assert prefix_shape((5, 1, 1)) == ("nondecreasing", None)
    assert prefix_shape((1, 7, 2, 2, 2)) == (None, None)
    assert prefix_shape((1, 7, 6, 6)) == ("drop", 3)
    assert prefix_shape((1, 7, 6, 5)) == (None, None)
    assert prefix_shape((2, 3, 2)) == (None, None)


SWEEP = [s for L in range(3, 5) for s in itertools.product(range(1, 5), repeat=L)]


@pytest.mark.parametrize("s", SWEEP[::7])
def test_methods_agree_sample(s):
    for n in range(3, len(s) + 1):
        v = check_n(s, n)
        assert v.method_agreement, (s, n, v)
        if not v.fiber:
            assert verify_witness(s, n, v.witness)


def test_lemma_forward_direction_and_remark():
    # equal Q_{n-1} exponents force equal quotient exponents; equal quotient
    # exponents force equal floors and equal ascent counts
    from lecturehall.seqcore import asc, enumerate_inversion_sequences, qstat, stat
    for head in itertools.product(range(1, 5), repeat=3):
        seqs = list(enumerate_inversion_sequences(head))
        for s_n in range(1, 6):
            for e, f in itertools.combinations(seqs, 2):
                if stat(e) == stat(f):
                    assert qstat(e, s_n) == qstat(f, s_n)
                if qstat(e, s_n) == qstat(f, s_n):
                    assert (s_n * e[-1]) // head[-1] == (s_n * f[-1]) // head[-1]
                    assert asc(e) == asc(f)
