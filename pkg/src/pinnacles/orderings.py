"""Counting admissible orderings of a candidate pinnacle set.

An ordering of P is admissible when some permutation with pinnacle set P
lists the members of P in that order.  Counting reduces to permutations of
``[2k+1]`` (:func:`compactify`), where a three-term recursion in the number
``i`` of tracked small non-members does the rest:

    o_i(P) = i(i-1) o_{i-1}(P') + 2i [p_1 > i+1] o_i(P') + [p_1 > i+2] o_{i+1}(P')

with ``P' = r(P)`` obtained by dropping ``p_1`` and shifting the rest down
by two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .comb_kernel import Arithmetic
from .perm_core import PinnacleCandidate, standardize


class OrderingStateError(ValueError):
    pass


def compactify(n: int, pins: Iterable[int]) -> PinnacleCandidate:
    """Standardize ``P + N`` onto ``[2k+1]`` and return the image of P.

    N is the set of the k+1 smallest positive non-members (possibly running
    past n).  Ordering counts are unchanged by this relabelling.

    >>> compactify(8, {3, 7})
    PinnacleCandidate(n=5, values=(3, 5))
    """
    cand = PinnacleCandidate(n, tuple(pins))
    support = sorted(set(cand.values) | set(cand.non_members()))
    image = dict(zip(support, standardize(support, range(1, len(support) + 1))))
    return PinnacleCandidate(2 * cand.k + 1, tuple(image[p] for p in cand.values))


def reduction_operator(cand: PinnacleCandidate) -> PinnacleCandidate:
    """``r(P) = {p_2 - 2, ..., p_k - 2}`` inside ``[2k-1]``."""
    if not cand.values:
        raise OrderingStateError("cannot reduce the empty set")
    if cand.n != 2 * cand.k + 1:
        raise OrderingStateError("reduction needs the compact form n = 2k+1")
    return PinnacleCandidate(cand.n - 2, tuple(p - 2 for p in cand.values[1:]))


@dataclass
class OrderingCounter:
    """Evaluates ``o_i`` along the reduction chain of one compact set.

    The memo is keyed by ``(depth, i)`` where depth counts applications of
    the reduction operator; ``P^depth`` is fixed once P is.
    """

    cand: PinnacleCandidate
    arith: Arithmetic = field(default_factory=Arithmetic)
    memo: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        k = self.cand.k
        if self.cand.n != 2 * k + 1:
            raise OrderingStateError(f"need n = 2k+1 = {2 * k + 1}, got n = {self.cand.n}")
        # _first[d] is the smallest member of r^d(P), None once it is empty
        vals = self.cand.values
        self._first = [vals[d] - 2 * d for d in range(k)] + [None]

    def count(self, i: int, depth: int = 0) -> int:
        key = (depth, i)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        k = self.cand.k - depth
        if i < 0 or i > k + 1:
            raise OrderingStateError(f"i={i} outside [0, {k + 1}]")
        p1 = self._first[depth]
        if p1 is None:
            if i > 1:
                raise OrderingStateError(f"o_{i} of the empty set is never needed")
            value = 1
        else:
            if i >= p1:
                raise OrderingStateError(f"need i < p_1 (i={i}, p_1={p1})")
            a = self.arith
            value = 0
            if i >= 2:
                value = a.add(value, a.mul(i * (i - 1), self.count(i - 1, depth + 1)))
            if i >= 1 and p1 > i + 1:
                value = a.add(value, a.mul(2 * i, self.count(i, depth + 1)))
            if p1 > i + 2:
                value = a.add(value, self.count(i + 1, depth + 1))
        self.memo[key] = value
        return value


def memo_bound(k: int) -> int:
    """Upper bound ``2 C(floor(k/2)+2, 2) + floor(k/2) + 1`` on memo entries."""
    h = k // 2
    return 2 * ((h + 2) * (h + 1) // 2) + h + 1


def count_orderings(cand: PinnacleCandidate, i: int = 0,
                    arith: Arithmetic | None = None) -> int:
    """``o_i(P)`` for a compact candidate (``n = 2k+1``).

    >>> count_orderings(PinnacleCandidate(5, (3, 5)), 1)
    4
    """
    return OrderingCounter(cand, arith or Arithmetic()).count(i)


def count_admissible_orderings(n: int, pins: Iterable[int],
                               arith: Arithmetic | None = None) -> int:
    """Number of admissible orderings of P as a pinnacle set of S_n."""
    return count_orderings(compactify(n, pins), 0, arith)
