from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from pinnacles.perm_core import (
    CyclicPermutation, Permutation, PermutationError, PinnacleCandidate, ballot_string,
    cyclic_pinnacles_and_vales, format_set, is_admissible, is_ballot, parse_set, pinnacle_set,
    relative_order, standardize,
)
from pinnacles.oracle import all_subsets, brute_admissible


@pytest.mark.parametrize("seq, expected", [
    ((5, 7, 6, 4, 2, 3, 1, 8), {3, 7}),
    ((1, 2, 3), set()),
    ((1, 3, 2, 5, 4), {3, 5}),
    ((2, 1), set()),
    ((1,), set()),
])
def test_pinnacle_set(seq, expected):
    assert pinnacle_set(seq) == frozenset(expected)


def test_pinnacle_set_empty_rejected():
    with pytest.raises(PermutationError, match="empty permutation"):
        pinnacle_set(())


def test_cyclic_examples():
    assert cyclic_pinnacles_and_vales([9, 1, 3, 2, 5, 4]) == ((3, 5, 9), (1, 2, 4))
    assert cyclic_pinnacles_and_vales([3, 1, 2]) == ((3,), (1,))
    assert cyclic_pinnacles_and_vales([1]) == ((), ())


@pytest.mark.parametrize("n", range(1, 7))
def test_sentinel_adds_top_pinnacle(n):
    for perm in permutations(range(1, n + 1)):
        cyc = Permutation(perm).append_sentinel()
        pins, _ = cyc.pinnacles_and_vales()
        assert set(pins) == set(pinnacle_set(perm)) | {n + 1}


def test_sentinel_round_trip():
    p = Permutation.parse("2 1 3")
    cyc = p.append_sentinel()
    assert str(cyc) == "[4,2,1,3]"
    assert cyc.strip_sentinel() == p
    assert CyclicPermutation.parse("5,1,2,3,4").strip_sentinel() == Permutation((1, 2, 3, 4))


def test_strip_without_sentinel():
    with pytest.raises(PermutationError):
        CyclicPermutation((3, 1, 2), sentinel=None).strip_sentinel()


def test_cyclic_equality_is_rotation_invariant():
    a = CyclicPermutation((1, 3, 2), sentinel=None)
    b = CyclicPermutation((3, 2, 1), sentinel=None)
    assert a == b and hash(a) == hash(b)


def test_standardize_and_relative_order():
    assert standardize((4, 7, 2, 3, 1), range(1, 6)) == (4, 5, 2, 3, 1)
    assert standardize((5, 7, 2, 3, 1), (1, 2, 4, 7, 9)) == (7, 9, 2, 4, 1)
    assert standardize((3, 1, 2), (1, 2, 3)) == (3, 1, 2)
    assert relative_order((5, 7, 6, 4, 2, 3, 1, 8), {3, 7}) == (7, 3)
    assert relative_order((1, 3, 2, 5, 4), set()) == ()
    assert relative_order((1, 3, 2, 5, 4), {3, 5, 1}) == (1, 3, 5)
    with pytest.raises(ValueError):
        standardize((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        relative_order((1, 2), {5})


@pytest.mark.parametrize("n, pins, ok", [
    (5, (3, 5), True), (4, (1,), False), (9, (1,), False), (4, (3, 4), False), (7, (4, 6), True),
])
def test_admissible_examples(n, pins, ok):
    assert bool(is_admissible(n, pins)) is ok


@pytest.mark.parametrize("n", range(1, 9))
def test_admissible_matches_brute(n):
    for pins in all_subsets(n):
        assert bool(is_admissible(n, pins)) == brute_admissible(n, pins), pins


@pytest.mark.parametrize("n", range(1, 13))
def test_census_central_binomial(n):
    got = sum(1 for pins in all_subsets(n) if is_admissible(n, pins))
    assert got == comb(n - 1, (n - 1) // 2)


@given(st.integers(1, 14).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_admissible_iff_ballot(case):
    n, pins = case
    bits = ballot_string(n, pins)
    # the criterion only looks at prefixes that end in a member
    prefixes_ok = all(bits[:t].count("0") > bits[:t].count("1")
                      for t in range(1, n + 1) if bits[t - 1] == "1")
    assert bool(is_admissible(n, pins)) == prefixes_ok


def test_is_ballot():
    assert is_ballot("0010011")
    assert not is_ballot("01")
    assert not is_ballot("1")


def test_candidate_validation_and_format():
    c = PinnacleCandidate(8, (7, 3))
    assert c.values == (3, 7) and c.k == 2
    assert str(c) == "{3,7}"
    assert c.non_members() == (1, 2, 4)
    assert PinnacleCandidate(3, (2, 3)).non_members() == (1, 4, 5)
    assert PinnacleCandidate.parse(5, "") == PinnacleCandidate(5, ())
    with pytest.raises(ValueError):
        PinnacleCandidate(4, (5,))
    with pytest.raises(ValueError):
        PinnacleCandidate(4, (0,))
    assert parse_set("6,3,7") == (3, 6, 7)
    assert format_set((7, 3, 6)) == "{3,6,7}"


def test_permutation_validation():
    with pytest.raises(PermutationError):
        Permutation((1, 1, 2))
    assert Permutation((0, 3, 1, 3, 2, 0), multiset=True).pinnacle_multiset() == {3: 2}
    with pytest.raises(PermutationError):
        Permutation((1, 1, 2), multiset=True)
    with pytest.raises(PermutationError):
        Permutation.parse("1,x")
