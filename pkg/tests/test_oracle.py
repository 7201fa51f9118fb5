from math import factorial

import pytest

from pinnacles.oracle import (
    MAX_PERM_N, OracleScaleError, admissible_sets, all_subsets, bell_numbers,
    brute_block_count, brute_orderings, brute_pinnacle_count, enumerate_decorated_walks,
    enumerate_marked_cycles, multiset_permutations, pinnacle_census, stirling2_recurrence,
)


def test_census_sums_to_factorial():
    for n in range(0, 8):
        assert sum(pinnacle_census(n).values()) == factorial(n)


def test_brute_counts():
    assert brute_pinnacle_count(3, {3}) == 2
    assert brute_pinnacle_count(4, {4}) == 12
    for n in range(1, 7):
        assert brute_pinnacle_count(n, {1}) == 0
        assert brute_pinnacle_count(n, ()) == 2 ** (n - 1)


def test_admissible_sets_are_census_keys():
    assert sorted(admissible_sets(4)) == [(), (3,), (4,)]


def test_scale_guards():
    with pytest.raises(OracleScaleError):
        brute_pinnacle_count(MAX_PERM_N + 1, ())
    with pytest.raises(OracleScaleError):
        brute_block_count("0" * 9, 1, 1)
    with pytest.raises(OracleScaleError):
        list(enumerate_decorated_walks(8, ()))
    with pytest.raises(OracleScaleError):
        list(enumerate_marked_cycles(8, ()))
    with pytest.raises(OracleScaleError):
        brute_orderings((3, 5, 7, 9), 0)


def test_multiset_permutations():
    got = list(multiset_permutations([0, 1, 1]))
    assert got == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    assert len(list(multiset_permutations([0, 0, 1, 2, 3, 3]))) == factorial(6) // 4
    assert list(multiset_permutations([])) == [()]


def test_small_walks_and_cycles():
    assert sorted(str(w) for w in enumerate_decorated_walks(1, ())) == ["F1L", "F1R"]
    assert sorted(str(w) for w in enumerate_decorated_walks(1, (1,))) == ["D1L", "U1R"]
    assert len(list(enumerate_marked_cycles(1, ()))) == 2


def test_stirling_recurrence_and_bell():
    assert stirling2_recurrence(4, 2) == 7
    assert stirling2_recurrence(2, 3) == 0
    assert bell_numbers(8) == [1, 1, 2, 5, 15, 52, 203, 877]
    for x in range(9):
        assert sum(stirling2_recurrence(x, c) for c in range(x + 1)) == bell_numbers(9)[x]


def test_all_subsets():
    assert len(list(all_subsets(5))) == 32
