import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from pinnacles.blocks import (
    Block, BlockError, Forest, ForestError, Tree, block_count, block_of, concat_count,
    fast_count, forest_decode, forest_encode, half_identity_check, pieces_of_set, pinnacles_of,
    segregated_count, segregated_prefixes,
)
from pinnacles.comb_kernel import Arithmetic
from pinnacles.oracle import all_subsets, brute_block_count, brute_pinnacle_count
from pinnacles.perm_core import PinnacleCandidate, is_admissible

P = 2**61 - 1


def test_block_of_examples():
    assert str(block_of(7, (3, 6, 7))) == "0010011"
    assert str(block_of(3, ())) == "000"
    assert pinnacles_of(Block.parse("0010011")) == PinnacleCandidate(7, (3, 6, 7))
    assert Block.parse("[0,1,1]") == Block((0, 1, 1))
    for bad in ("", "012"):
        with pytest.raises(BlockError):
            Block.parse(bad)
    with pytest.raises(ValueError):
        block_of(3, (5,))


@settings(max_examples=50)
@given(st.integers(1, 20).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_block_round_trip(case):
    n, pins = case
    assert pinnacles_of(block_of(n, pins)).values == tuple(sorted(pins))


@pytest.mark.parametrize("n", range(1, 10))
def test_pieces_without_block(n):
    for pins in all_subsets(n):
        assert pieces_of_set(n, pins) == segregated_prefixes(block_of(n, pins))


def test_segregated_prefixes():
    assert segregated_prefixes(Block.parse("0010011")) == [(2, 1), (2, 2)]
    assert segregated_prefixes(Block.parse("1100")) == [(0, 2), (2, 0)]


@pytest.mark.parametrize("x, y, i, j, expected", [
    (2, 1, 0, 0, 2), (3, 0, 0, 0, 4), (3, 0, 2, 1, 72),
])
def test_segregated_examples(x, y, i, j, expected):
    assert segregated_count(x, y, i, j) == expected


def test_segregated_needs_nonempty():
    with pytest.raises(BlockError, match="empty block"):
        segregated_count(0, 0, 0, 0)


def test_segregated_grid_matches_brute():
    for x, y, i, j in product(range(5), range(3), range(3), range(3)):
        if x + y:
            assert segregated_count(x, y, i, j) == brute_block_count("0" * x + "1" * y, i, j), (x, y, i, j)


def test_brute_block_regressions():
    assert brute_block_count("011", 0, 2) == 6
    assert brute_block_count("011", 0, 4) == 0


def test_discrepancy_value():
    # recorded regression: the oracle gives 144 and the decomposition agrees
    assert brute_block_count("001000", 2, 0) == 144
    assert block_count("001000", 2, 0) == 144
    assert 2 * segregated_count(3, 0, 2, 1) == 144


def test_concat_examples():
    b = Block.parse("001000")
    assert block_count(b) == brute_pinnacle_count(6, (3,))
    lookup = lambda blk, i, j: block_count(blk, i, j)
    assert concat_count(Block.parse("001"), Block.parse("000"), 2, 0, lookup) == 144
    assert block_count("0011") == 0


def _cut_sets(m):
    for r in range(m):
        yield from combinations(range(1, m), r)


@pytest.mark.parametrize("m", range(2, 7))
def test_decomposition_invariance(m):
    for bits in product("01", repeat=m):
        block = "".join(bits)
        for i, j in product(range(3), range(3)):
            ref = block_count(block, i, j)
            if m + i + j <= 7:
                assert ref == brute_block_count(block, i, j), (block, i, j)
            for cuts in _cut_sets(m):
                assert block_count(block, i, j, cuts=cuts) == ref, (block, i, j, cuts)


@pytest.mark.parametrize("n, pins, expected", [
    (3, (3,), 2), (4, (3, 4), 0), (4, (4,), 12), (1, (), 1), (6, (), 32), (5, (1,), 0),
])
def test_fast_count_examples(n, pins, expected):
    assert fast_count(n, pins) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_fast_count_exhaustive(n):
    for pins in all_subsets(n):
        assert fast_count(n, pins) == brute_pinnacle_count(n, pins), pins


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_splitter_agrees(n):
    for pins in all_subsets(n):
        assert fast_count(n, pins, splitter="trees") == fast_count(n, pins)


def test_empty_set_power_of_two():
    for n in range(1, 40):
        assert fast_count(n, ()) == 2 ** (n - 1)


def test_modular_matches_exact():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 120)
        k = rng.randint(0, min(12, n))
        pins = tuple(sorted(rng.sample(range(1, n + 1), k)))
        assert fast_count(n, pins, Arithmetic(P)) == fast_count(n, pins) % P
        assert fast_count(n, pins, Arithmetic(101)) == fast_count(n, pins) % 101


def test_large_n_modular_runs():
    a = Arithmetic(P)
    value = fast_count(10**9, tuple(range(10**7, 10**9, 10**7 + 3))[:20], a)
    assert 0 <= value < P and a.ops > 0


def test_bad_splitter():
    with pytest.raises(ValueError):
        fast_count(4, (4,), splitter="middle")


# -- forests

def test_worked_example_forest():
    f = forest_encode(7, (4, 6))
    assert str(f) == "1 ((2,3)4,5)6 7"
    assert Forest.parse("1 ((2,3)4,5)6 7") == f
    assert forest_decode(f) == PinnacleCandidate(7, (4, 6))


def test_small_forests():
    assert str(forest_encode(3, ())) == "1 2 3"
    assert str(forest_encode(4, (4,))) == "1 (2,3)4"
    with pytest.raises(ForestError, match="inadmissible"):
        forest_encode(4, (3, 4))


@pytest.mark.parametrize("n", range(1, 11))
def test_forest_round_trip(n):
    for pins in all_subsets(n):
        if is_admissible(n, pins):
            f = forest_encode(n, pins)
            assert forest_decode(f) == PinnacleCandidate(n, pins)
            assert Forest.parse(str(f)) == f
        else:
            with pytest.raises(ForestError):
                forest_encode(n, pins)


def test_forest_validation():
    with pytest.raises(ForestError):
        Tree(3, Tree(1), None)
    for bad in ("1 (2,3", "(1,2)", "1 2 2", "x"):
        with pytest.raises(ForestError):
            forest_decode(Forest.parse(bad))


def test_half_identity_counterexample():
    res = half_identity_check(forest_encode(4, (4,)))
    assert (res.left, res.right, res.product) == (12, 12, 24)
    assert res.equal and res.product != res.left


@pytest.mark.parametrize("n", range(2, 9))
def test_half_identity(n):
    for pins in all_subsets(n):
        if not is_admissible(n, pins):
            continue
        f = forest_encode(n, pins)
        if len(f.trees) >= 2 and f.trees[0].is_leaf:
            assert half_identity_check(f).equal, pins
            assert half_identity_check(f, Arithmetic(P)).equal


def test_half_identity_precondition():
    with pytest.raises(ForestError, match="precondition"):
        half_identity_check(Forest.parse("1"))
