"""Brute-force reference counts.

Every function here enumerates the objects it counts.  They are slow on
purpose and guard their input size: asking for more than the guard allows
raises :class:`OracleScaleError` instead of sampling.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence

from .perm_core import (
    PinnacleCandidate, pinnacle_set, pinnacles, relative_order,
)
from .walks import (
    DOWN, FLAT, LEFT, RIGHT, UP,
    DecoratedMotzkinWalk, MarkedCyclicPermutation, Step,
)

MAX_PERM_N = 9
MAX_BLOCK_SIZE = 10
MAX_ORDERING_K = 3
MAX_WALK_N = 7


class OracleScaleError(ValueError):
    pass


def _guard(ok: bool, what: str):
    if not ok:
        raise OracleScaleError(f"oracle refuses {what}")


@lru_cache(maxsize=None)
def pinnacle_census(n: int) -> Counter:
    """``Counter`` mapping each pinnacle set of S_n to its number of permutations."""
    _guard(0 <= n <= MAX_PERM_N, f"n={n} (limit {MAX_PERM_N})")
    census = Counter()
    for perm in permutations(range(1, n + 1)):
        census[pinnacle_set(perm) if perm else frozenset()] += 1
    return census


def brute_pinnacle_count(n: int, pins: Iterable[int]) -> int:
    """|{pi in S_n : Pin(pi) = P}| by listing all n! permutations."""
    cand = PinnacleCandidate(n, tuple(pins))
    return pinnacle_census(n)[frozenset(cand.values)]


def brute_admissible(n: int, pins: Iterable[int]) -> bool:
    return brute_pinnacle_count(n, pins) > 0


def multiset_permutations(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct arrangements of a multiset, in lexicographic order.

    Walks the standard next-permutation successor from the sorted
    arrangement, so each distinct tuple is produced exactly once.
    """
    a = sorted(items)
    m = len(a)
    while True:
        yield tuple(a)
        t = m - 2
        while t >= 0 and a[t] >= a[t + 1]:
            t -= 1
        if t < 0:
            return
        u = m - 1
        while a[u] <= a[t]:
            u -= 1
        a[t], a[u] = a[u], a[t]
        a[t + 1:] = reversed(a[t + 1:])


def _block_ok(seq, target, top):
    if sorted(pinnacles(seq)) != target:
        return False
    # every 0 must be a vale once a sentinel larger than everything closes the cycle
    cyc = seq + (top,)
    m = len(cyc)
    for t, v in enumerate(cyc):
        if v == 0 and not (cyc[t - 1] > 0 and cyc[(t + 1) % m] > 0):
            return False
    return True


def brute_block_count(bits: Sequence[int] | str, i: int, j: int) -> int:
    """Count arrangements of ``{1..m} + {0^j} + {(m+1)^i}`` whose linear
    pinnacle multiset is ``P_B + {(m+1)^i}`` and whose zeros are all cyclic
    vales of the sentinel-closed cycle."""
    bits = [int(b) for b in bits]
    m = len(bits)
    _guard(m >= 1, "an empty block")
    _guard(m + i + j <= MAX_BLOCK_SIZE, f"block of size {m}+{i}+{j} (limit {MAX_BLOCK_SIZE})")
    target = sorted([t + 1 for t, b in enumerate(bits) if b] + [m + 1] * i)
    items = list(range(1, m + 1)) + [0] * j + [m + 1] * i
    return sum(1 for seq in multiset_permutations(items) if _block_ok(seq, target, m + 2))


def brute_orderings(pins: Iterable[int], i: int) -> set[tuple[int, ...]]:
    """The set O_i(P) for a compact P inside [2k+1]: relative orders of
    ``P + N_i`` over all witnesses, N_i being the i smallest non-members."""
    pins = tuple(sorted(pins))
    k = len(pins)
    _guard(k <= MAX_ORDERING_K, f"k={k} (limit {MAX_ORDERING_K})")
    n = 2 * k + 1
    cand = PinnacleCandidate(n, pins)
    others = [v for v in range(1, n + 1) if v not in cand.values]
    if i > len(others):
        raise ValueError(f"i={i} exceeds |N|={len(others)}")
    tracked = set(pins) | set(others[:i])
    target = frozenset(pins)
    return {relative_order(perm, tracked)
            for perm in permutations(range(1, n + 1)) if pinnacle_set(perm) == target}


def stirling2_recurrence(x: int, c: int) -> int:
    """S(x, c) from ``S(x, c) = c S(x-1, c) + S(x-1, c-1)``."""
    row = [1]  # S(0, .)
    for _ in range(x):
        nxt = [0] * (len(row) + 1)
        for t, v in enumerate(row):
            nxt[t] += t * v
            nxt[t + 1] += v
        row = nxt
    return row[c] if c < len(row) else 0


def bell_numbers(count: int) -> list[int]:
    """First ``count`` Bell numbers from the Bell triangle."""
    out, row = [], [1]
    for _ in range(count):
        out.append(row[0])
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return out


def enumerate_decorated_walks(n: int, pins: Iterable[int]) -> Iterator[DecoratedMotzkinWalk]:
    """Every walk of M_n(P), each once."""
    _guard(0 <= n <= MAX_WALK_N, f"n={n} (limit {MAX_WALK_N})")
    pins = frozenset(PinnacleCandidate(n, tuple(pins)).values)

    def grow(num, h, acc):
        if num == 0:
            yield DecoratedMotzkinWalk(tuple(acc))
            return
        if num in pins:
            options = [(UP, RIGHT), (DOWN, LEFT)]
        else:
            options = [(FLAT, LEFT), (FLAT, RIGHT)]
        for kind, side in options:
            nh = h + {UP: 1, DOWN: -1, FLAT: 0}[kind]
            if nh < 0 and num != 1:
                continue
            for label in range(1, h + 2):
                acc.append(Step(kind, label, side))
                yield from grow(num - 1, nh, acc)
                acc.pop()

    yield from grow(n, 0, [])


def enumerate_marked_cycles(n: int, pins: Iterable[int]) -> Iterator[MarkedCyclicPermutation]:
    """Every member of V_n(P): sentinel cycles with pinnacles inside
    ``P + {n+1}``, forced marks everywhere except the cyclic vales."""
    _guard(0 <= n <= MAX_WALK_N, f"n={n} (limit {MAX_WALK_N})")
    pins = frozenset(PinnacleCandidate(n, tuple(pins)).values)
    top = n + 1
    for perm in permutations(range(1, n + 1)):
        cyc = (top,) + perm
        m = len(cyc)
        forced, free = [], []
        ok = True
        for t in range(m):
            e, left, right = cyc[t], cyc[t - 1], cyc[(t + 1) % m]
            if t == 0:
                forced.append(RIGHT)
            elif left > e < right:
                forced.append(None)
                free.append(t)
            elif left < e > right:
                if e not in pins:
                    ok = False
                    break
                forced.append(RIGHT)
            elif e in pins:
                forced.append(RIGHT)
            else:
                forced.append(RIGHT if left > e > right else LEFT)
        if not ok:
            continue
        for choice in product((LEFT, RIGHT), repeat=len(free)):
            marks = list(forced)
            for t, side in zip(free, choice):
                marks[t] = side
            yield MarkedCyclicPermutation(cyc, tuple(marks))


def admissible_sets(n: int) -> Iterator[tuple[int, ...]]:
    """Subsets of [n] that occur as a pinnacle set in S_n (by census)."""
    for s in pinnacle_census(n):
        yield tuple(sorted(s))


def all_subsets(n: int) -> Iterator[tuple[int, ...]]:
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)


__all__ = [
    "OracleScaleError", "pinnacle_census", "brute_pinnacle_count", "brute_admissible",
    "multiset_permutations", "brute_block_count", "brute_orderings", "stirling2_recurrence",
    "bell_numbers", "enumerate_decorated_walks", "enumerate_marked_cycles",
    "admissible_sets", "all_subsets",
]
