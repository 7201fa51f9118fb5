"""Permutations, pinnacles, vales and admissibility.

A pinnacle of a sequence is an interior value strictly larger than both of
its neighbours; a vale is an interior value strictly smaller than both.
Everything here is phrased in terms of *values*, not positions.

Sequences are plain tuples of ints.  The small value classes below
(:class:`Permutation`, :class:`CyclicPermutation`, :class:`PinnacleCandidate`)
add validation and the text formats used by the command line.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class PermutationError(ValueError):
    pass


def _interior(seq: Sequence[int], cmp) -> list[int]:
    return [seq[t] for t in range(1, len(seq) - 1)
            if cmp(seq[t - 1], seq[t]) and cmp(seq[t + 1], seq[t])]


def pinnacles(seq: Sequence[int]) -> list[int]:
    """Pinnacle values of ``seq`` in order of appearance (repeats kept)."""
    if len(seq) == 0:
        raise PermutationError("empty permutation")
    return _interior(seq, lambda nb, v: nb < v)


def vales(seq: Sequence[int]) -> list[int]:
    if len(seq) == 0:
        raise PermutationError("empty permutation")
    return _interior(seq, lambda nb, v: nb > v)


def pinnacle_set(seq: Sequence[int]) -> frozenset[int]:
    """Return ``{s_t : s_{t-1} < s_t > s_{t+1}}``.

    >>> sorted(pinnacle_set((5, 7, 6, 4, 2, 3, 1, 8)))
    [3, 7]

    Sequences of length one or two have no interior and hence no pinnacles.
    """
    return frozenset(pinnacles(seq))


def cyclic_pinnacles_and_vales(cycle: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Classify the entries of a cyclic sequence (last entry adjacent to first).

    Returns the sorted pinnacle multiset and the sorted vale multiset.
    A one-element cycle has neither.
    """
    m = len(cycle)
    if m == 0:
        raise PermutationError("empty permutation")
    if m == 1:
        return (), ()
    pins, vals = [], []
    for t in range(m):
        v, left, right = cycle[t], cycle[t - 1], cycle[(t + 1) % m]
        if left < v > right:
            pins.append(v)
        elif left > v < right:
            vals.append(v)
    return tuple(sorted(pins)), tuple(sorted(vals))


def standardize(seq: Sequence[int], target: Iterable[int]) -> tuple[int, ...]:
    """Relabel ``seq`` onto ``target`` by the unique order-preserving map.

    >>> standardize((4, 7, 2, 3, 1), range(1, 6))
    (4, 5, 2, 3, 1)
    """
    target = sorted(set(target))
    if len(set(seq)) != len(seq):
        raise PermutationError("standardize needs distinct entries")
    if len(seq) != len(target):
        raise PermutationError(f"size mismatch: {len(seq)} entries, {len(target)} targets")
    rank = {v: target[r] for r, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


def relative_order(seq: Sequence[int], subset: Iterable[int]) -> tuple[int, ...]:
    """The subsequence of ``seq`` consisting of the values in ``subset``."""
    subset = set(subset)
    missing = subset - set(seq)
    if missing:
        raise PermutationError(f"values {sorted(missing)} do not occur in the permutation")
    return tuple(v for v in seq if v in subset)


class Admissibility(NamedTuple):
    admissible: bool
    reason: str

    def __bool__(self) -> bool:
        return self.admissible


def is_admissible(n: int, pins: Iterable[int]) -> Admissibility:
    """Decide whether ``pins`` is the pinnacle set of some permutation of [n].

    The test is the classical counting criterion: for each p in the set, the
    number of set members <= p must be strictly less than the number of
    non-members < p.  The reason string names the first failing value.
    """
    values = sorted(set(pins))
    if values and (values[0] < 1 or values[-1] > n):
        return Admissibility(False, f"values must lie in [1, {n}]")
    for rank, p in enumerate(values, start=1):
        below = p - rank  # non-members smaller than p
        if rank >= below:
            return Admissibility(
                False, f"{p}: {rank} member(s) <= {p} but only {below} non-member(s) below")
    return Admissibility(True, "every member has more smaller non-members than members up to it")


def ballot_string(n: int, pins: Iterable[int]) -> str:
    pins = set(pins)
    return "".join("1" if t in pins else "0" for t in range(1, n + 1))


def is_ballot(bits: str | Sequence[int]) -> bool:
    """True iff every nonempty prefix holds strictly more 0s than 1s."""
    balance = 0
    for b in bits:
        balance += 1 if int(b) == 0 else -1
        if balance <= 0:
            return False
    return True


# -- value classes and text formats -----------------------------------------


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip().strip("{}[]()")
    if not text.strip():
        return ()
    try:
        return tuple(int(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok)
    except ValueError as exc:
        raise PermutationError(f"cannot parse integer list {text!r}") from exc


@dataclass(frozen=True)
class Permutation:
    """A linear arrangement of non-negative integers.

    In plain mode the entries are distinct positive integers.  With
    ``multiset=True`` repeats are tolerated for 0 and for the largest value,
    which is what the block counts need.
    """

    elements: tuple[int, ...]
    multiset: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(v) for v in self.elements))
        els = self.elements
        if any(v < 0 for v in els):
            raise PermutationError("entries must be non-negative")
        counts = Counter(els)
        repeated = {v for v, c in counts.items() if c > 1}
        if not self.multiset:
            if repeated:
                raise PermutationError(f"repeated entries {sorted(repeated)} in plain mode")
            if 0 in counts:
                raise PermutationError("plain permutations use positive entries")
        elif repeated - {0, max(els, default=0)}:
            raise PermutationError("multiset mode only repeats 0 and the top value")

    @classmethod
    def parse(cls, text: str, multiset: bool = False) -> Permutation:
        return cls(_parse_ints(text), multiset)

    @property
    def ambient_max(self) -> int:
        return max(self.elements, default=0)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))

    def pinnacle_set(self) -> frozenset[int]:
        return pinnacle_set(self.elements)

    def pinnacle_multiset(self) -> Counter:
        return Counter(pinnacles(self.elements))

    def append_sentinel(self) -> CyclicPermutation:
        if self.multiset:
            raise PermutationError("append_sentinel expects a plain permutation")
        top = len(self.elements) + 1
        return CyclicPermutation((top,) + self.elements, sentinel=top)


@dataclass(frozen=True)
class CyclicPermutation:
    """A rotation class, stored as the rotation that starts at the sentinel
    (or at the maximum when there is none)."""

    elements: tuple[int, ...]
    sentinel: int | None = None

    def __post_init__(self):
        els = tuple(int(v) for v in self.elements)
        if not els:
            raise PermutationError("empty permutation")
        if self.sentinel is not None:
            if els.count(self.sentinel) != 1:
                raise PermutationError("a cyclic permutation carries exactly one sentinel")
            if any(v >= self.sentinel for v in els if v != self.sentinel):
                raise PermutationError("sentinel must exceed every other entry")
            start = els.index(self.sentinel)
        else:
            start = els.index(max(els))
        object.__setattr__(self, "elements", els[start:] + els[:start])

    @classmethod
    def parse(cls, text: str, sentinel: bool = True) -> CyclicPermutation:
        els = _parse_ints(text)
        return cls(els, sentinel=max(els) if sentinel and els else None)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.elements)) + "]"

    def pinnacles_and_vales(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return cyclic_pinnacles_and_vales(self.elements)

    def strip_sentinel(self) -> Permutation:
        if self.sentinel is None:
            raise PermutationError("cycle has no sentinel to strip")
        return Permutation(self.elements[1:])


@dataclass(frozen=True)
class PinnacleCandidate:
    """A candidate pinnacle set ``values`` (ascending) inside [n].

    Admissibility is not required; inadmissible sets are legal inputs.
    """

    n: int
    values: tuple[int, ...] = ()

    def __post_init__(self):
        vals = tuple(sorted(int(v) for v in self.values))
        if len(set(vals)) != len(vals):
            raise PermutationError("pinnacle values must be distinct")
        if self.n < 0:
            raise PermutationError("n must be non-negative")
        if vals and (vals[0] < 1 or vals[-1] > self.n):
            raise PermutationError(f"pinnacle values {vals} not contained in [1, {self.n}]")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, n: int, text: str) -> PinnacleCandidate:
        return cls(n, _parse_ints(text))

    @property
    def k(self) -> int:
        return len(self.values)

    def non_members(self, count: int | None = None) -> tuple[int, ...]:
        """The first ``count`` positive integers outside the set (default k+1).

        These may run past n when n < 2k+1.
        """
        count = self.k + 1 if count is None else count
        members, out, v = set(self.values), [], 1
        while len(out) < count:
            if v not in members:
                out.append(v)
            v += 1
        return tuple(out)

    def __str__(self) -> str:
        return format_set(self.values)


def format_set(values: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(values))) + "}"


def parse_set(text: str) -> tuple[int, ...]:
    return tuple(sorted(set(_parse_ints(text))))
