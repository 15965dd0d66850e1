import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import ext1_table
from ruledsheaves import SplittingType, WindowError, enumerate_splitting_types, stratum_codim, verify_lemma_p1
from ruledsheaves.strata import ext1_locally_free, locally_free_types


def _t0(types):
    return [s.parts for s in types if s.torsion_points == 0]


def test_enumeration_examples():
    assert _t0(enumerate_splitting_types(2, -1, -2)) == [(0, -1), (1, -2)]
    assert _t0(enumerate_splitting_types(2, 0, -1)) == [(0, 0), (1, -1)]
    assert enumerate_splitting_types(1, 0, 0) == [SplittingType((0,), 0)]


def test_enumeration_brute_force():
    import itertools

    for r in range(1, 4):
        for deg in range(-4, 3):
            lo = -4
            brute = set()
            for t in range(0, deg - r * lo + 1):
                for combo in itertools.product(range(lo, deg - t - (r - 1) * lo + 1), repeat=r):
                    if sum(combo) == deg - t and list(combo) == sorted(combo, reverse=True):
                        brute.add((combo, t))
            got = [(s.parts, s.torsion_points) for s in enumerate_splitting_types(r, deg, lo)]
            assert len(got) == len(set(got)) and set(got) == brute
            assert got == sorted(got, key=lambda x: (x[1], x[0]))
            assert all(SplittingType(p, t).degree == deg for p, t in got)


def test_empty_window_is_not_error():
    assert enumerate_splitting_types(3, -10, 0) == []


def test_codim_examples():
    assert stratum_codim(SplittingType((0, 0, -1, -1))) == 0
    assert stratum_codim(SplittingType((0, -1))) == 0
    assert stratum_codim(SplittingType((1, 0, 0, -1))) == 1
    assert stratum_codim(SplittingType((1, -2))) == 2
    for r in range(1, 6):
        assert stratum_codim(SplittingType((-1,) * r, 1)) == r + 1


def test_codim_two_ways():
    for r in range(1, 7):
        for deg in range(-10, 11):
            for parts in locally_free_types(r, deg, -10):
                if max(parts) > 10:
                    continue
                assert ext1_locally_free(parts) == ext1_table(parts)


@given(st.lists(st.integers(-10, 10), min_size=1, max_size=6), st.integers(-20, 20))
def test_codim_shift_invariant(parts, c):
    parts = tuple(sorted(parts, reverse=True))
    shifted = tuple(a + c for a in parts)
    assert stratum_codim(SplittingType(parts)) == stratum_codim(SplittingType(shifted))


def test_verify_examples():
    assert verify_lemma_p1(2, 1, -10).passed
    rep = verify_lemma_p1(2, 0, -10)
    assert rep.passed
    assert (SplittingType((1, -1)), 1) in rep.low_codim
    assert verify_lemma_p1(6, 3, -8).passed


def test_verify_window_error():
    with pytest.raises(WindowError):
        verify_lemma_p1(3, 1, 0)


def test_verify_full_grid_timed():
    start = time.perf_counter()
    for r in range(2, 7):
        for d in range(r):
            rep = verify_lemma_p1(r, d, -10)
            assert rep.passed, rep.offending
            assert sum(rep.codim_histogram.values()) == rep.type_count
    assert time.perf_counter() - start < 1.0
