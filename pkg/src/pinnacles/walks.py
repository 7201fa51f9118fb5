"""Lattice walks behind the weighted pinnacle-count identity.

Two walk families live here:

* modified Dyck walks, stored as height sequences ``(r_0, ..., r_k)`` with
  ``r_0 = 0``, unit steps, ``r_i >= 0`` before the last entry and
  ``r_k >= -1``;
* decorated Motzkin walks on ``n`` steps, numbered ``n, n-1, ..., 1`` from
  left to right, each carrying a height label and a left/right side.

The weighted sum

    sum_{Q subset of P} 2^{|Q|+1} p_n(Q)
        = 2^{n-k} sum_{r in R_k} prod_{i=0}^{k} (r_i + 1)^{p_i - p_{i+1}}

is evaluated by :func:`weighted_sum_lhs` (left side, any counter) and
:func:`weighted_walk_sum` (right side).  On the right the members of P are
read in *descending* order with ``p_0 = n+1`` and ``p_{k+1} = 1``; that
reversal is internal to this module.

:func:`f_map` and :func:`g_map` are mutually inverse maps between decorated
Motzkin walks and sentinel cycles with left/right marks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .perm_core import PinnacleCandidate

UP, DOWN, FLAT = "U", "D", "F"
LEFT, RIGHT = "L", "R"
_SLOPE = {UP: 1, DOWN: -1, FLAT: 0}


class WalkError(ValueError):
    pass


# -- modified Dyck walks ----------------------------------------------------


def enumerate_modified_dyck(k: int) -> list[tuple[int, ...]]:
    """All of R_k in lexicographic order.

    >>> enumerate_modified_dyck(2)
    [(0, 1, 0), (0, 1, 2)]
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []

    def grow(path):
        if len(path) == k + 1:
            out.append(tuple(path))
            return
        h = path[-1]
        last = len(path) == k
        for nxt in (h - 1, h + 1):
            if nxt >= 0 or (last and nxt == -1):
                path.append(nxt)
                grow(path)
                path.pop()

    grow([0])
    return out


def enumerate_unrestricted_walks(k: int) -> list[tuple[int, ...]]:
    """All ``2^k`` height sequences of +-1 walks from 0 (the family W_k)."""
    out = []
    for steps in product((-1, 1), repeat=k):
        h, path = 0, [0]
        for s in steps:
            h += s
            path.append(h)
        out.append(tuple(path))
    return out


def _descending_bounds(n: int, pins: Iterable[int]) -> list[int]:
    cand = PinnacleCandidate(n, tuple(pins))
    return [n + 1, *reversed(cand.values), 1]


def walk_weight(n: int, pins: Iterable[int], heights: Sequence[int]) -> int:
    """``prod_i (r_i + 1)^(p_i - p_{i+1})`` for one height sequence."""
    bounds = _descending_bounds(n, pins)
    if len(heights) != len(bounds) - 1:
        raise WalkError("walk length must equal |P|")
    w = 1
    for i, r in enumerate(heights):
        w *= (r + 1) ** (bounds[i] - bounds[i + 1])
    return w


def weighted_walk_sum(n: int, pins: Iterable[int]) -> int:
    """Right-hand side ``2^{n-k} sum_{r in R_k} prod (r_i+1)^{p_i-p_{i+1}}``.

    Evaluated by a transfer over heights rather than by listing R_k, so it is
    polynomial in k.  P need not be admissible.

    >>> weighted_walk_sum(3, {3})
    16
    """
    bounds = _descending_bounds(n, pins)
    k = len(bounds) - 2
    return 2 ** (n - k) * _height_transfer(bounds, allow_final_dip=True)


def dyck_walk_sum(n: int, pins: Iterable[int]) -> int:
    """The half-size variant with the final height also kept ``>= 0``:
    ``2^{n-k-1} sum prod (r_i+1)^{p_i-p_{i+1}}`` over ordinary Dyck walks."""
    bounds = _descending_bounds(n, pins)
    k = len(bounds) - 2
    total = _height_transfer(bounds, allow_final_dip=False)
    return total * 2 ** (n - k) // 2


def _height_transfer(bounds: list[int], allow_final_dip: bool) -> int:
    k = len(bounds) - 2
    dist = {0: 1 ** (bounds[0] - bounds[1])}
    for i in range(1, k + 1):
        expo = bounds[i] - bounds[i + 1]
        floor = -1 if (i == k and allow_final_dip) else 0
        nxt: dict[int, int] = {}
        for h, w in dist.items():
            for h2 in (h - 1, h + 1):
                if h2 >= floor:
                    nxt[h2] = nxt.get(h2, 0) + w * (h2 + 1) ** expo
        dist = nxt
    return sum(dist.values())


def enumerated_walk_sum(n: int, pins: Iterable[int], family: str = "R") -> int:
    """Same right-hand side, by listing R_k (``family="R"``) or W_k (``"W"``)."""
    pins = tuple(pins)
    k = len(pins)
    walks = enumerate_modified_dyck(k) if family == "R" else enumerate_unrestricted_walks(k)
    return 2 ** (n - k) * sum(walk_weight(n, pins, r) for r in walks)


def weighted_sum_lhs(n: int, pins: Iterable[int], counter: Callable[[int, tuple], int]) -> int:
    """``sum_{Q subset of P} 2^{|Q|+1} counter(n, Q)``."""
    pins = tuple(sorted(pins))
    total = 0
    for size in range(len(pins) + 1):
        for q in combinations(pins, size):
            total += 2 ** (size + 1) * counter(n, q)
    return total


# -- decorated Motzkin walks -------------------------------------------------


@dataclass(frozen=True)
class Step:
    kind: str
    label: int
    side: str

    def __str__(self) -> str:
        return f"{self.kind}{self.label}{self.side}"


_TOKEN = re.compile(r"^([UDF])(\d+)([LR])$")


@dataclass(frozen=True)
class DecoratedMotzkinWalk:
    """Steps listed left to right; the step at position t is numbered n - t."""

    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        h = 0
        for t, s in enumerate(self.steps):
            num = self.n - t
            if s.kind not in _SLOPE:
                raise WalkError(f"step {num}: unknown kind {s.kind!r}")
            if s.side not in (LEFT, RIGHT):
                raise WalkError(f"step {num}: side must be L or R")
            if s.kind == DOWN and s.side != LEFT:
                raise WalkError(f"step {num}: down steps are marked left")
            if s.kind == UP and s.side != RIGHT:
                raise WalkError(f"step {num}: up steps are marked right")
            if h < 0:
                raise WalkError(f"step {num} starts below the axis (height {h})")
            if not 1 <= s.label <= h + 1:
                raise WalkError(f"step {num}: label {s.label} outside [1, {h + 1}]")
            h += _SLOPE[s.kind]

    @classmethod
    def parse(cls, text: str) -> DecoratedMotzkinWalk:
        steps = []
        for tok in re.split(r"[,\s]+", text.strip()):
            if not tok:
                continue
            m = _TOKEN.match(tok.upper())
            if not m:
                raise WalkError(f"bad step token {tok!r}; expected e.g. U2R")
            steps.append(Step(m.group(1), int(m.group(2)), m.group(3)))
        return cls(tuple(steps))

    @property
    def n(self) -> int:
        return len(self.steps)

    @property
    def pins(self) -> frozenset[int]:
        """Step numbers of the sloped steps; this is the walk's set P."""
        return frozenset(self.n - t for t, s in enumerate(self.steps) if s.kind != FLAT)

    def start_heights(self) -> list[int]:
        out, h = [], 0
        for s in self.steps:
            out.append(h)
            h += _SLOPE[s.kind]
        return out

    def step(self, number: int) -> Step:
        return self.steps[self.n - number]

    def __str__(self) -> str:
        return " ".join(map(str, self.steps))


@dataclass(frozen=True)
class MarkedCyclicPermutation:
    """A cycle of ``1..n+1`` read clockwise from the sentinel ``n+1``, with a
    left/right mark on every entry."""

    elements: tuple[int, ...]
    marks: tuple[str, ...]

    def __post_init__(self):
        els, marks = tuple(self.elements), tuple(self.marks)
        if len(els) != len(marks) or not els:
            raise WalkError("need one mark per element")
        if sorted(els) != list(range(1, len(els) + 1)):
            raise WalkError("entries must be 1..n+1")
        start = els.index(len(els))
        object.__setattr__(self, "elements", els[start:] + els[:start])
        object.__setattr__(self, "marks", marks[start:] + marks[:start])

    @classmethod
    def parse(cls, text: str) -> MarkedCyclicPermutation:
        body = text.strip().strip("[]")
        els, marks = [], []
        for tok in re.split(r"[,\s]+", body.strip()):
            if not tok:
                continue
            m = re.match(r"^(\d+)_?([lrLR])$", tok)
            if not m:
                raise WalkError(f"bad marked entry {tok!r}; expected e.g. 10r")
            els.append(int(m.group(1)))
            marks.append(m.group(2).upper())
        return cls(tuple(els), tuple(marks))

    @property
    def n(self) -> int:
        return len(self.elements) - 1

    def mark_of(self) -> dict[int, str]:
        return dict(zip(self.elements, self.marks))

    def __str__(self) -> str:
        return "[" + ",".join(f"{e}{m.lower()}" for e, m in zip(self.elements, self.marks)) + "]"


def check_marked(marked: MarkedCyclicPermutation, pins: Iterable[int]) -> None:
    """Raise :class:`WalkError` unless ``marked`` belongs to V_n(P)."""
    pins = frozenset(pins)
    n, els = marked.n, marked.elements
    top = n + 1
    if not pins <= set(range(1, n + 1)):
        raise WalkError(f"P must lie in [1, {n}]")
    mark = marked.mark_of()
    if mark[top] != RIGHT:
        raise WalkError("the sentinel is marked right")
    m = len(els)
    for t in range(1, m):
        e, left, right = els[t], els[t - 1], els[(t + 1) % m]
        if left > e < right:
            continue  # cyclic vale: either mark
        if left < e > right:
            if e not in pins:
                raise WalkError(f"{e} is a cyclic pinnacle outside P")
            want = RIGHT
        elif e in pins:
            want = RIGHT
        else:
            want = RIGHT if left > e > right else LEFT
        if mark[e] != want:
            raise WalkError(f"{e} must be marked {'right' if want == RIGHT else 'left'}")


def _intermediate_sets(cyc: list[int], bounds: set[int]):
    """Intermediate sets clockwise from position 0 as
    ``(left_bound_pos, left_bound, right_bound, members)``."""
    pos = [t for t, e in enumerate(cyc) if e in bounds]
    out = []
    for a, b0 in enumerate(pos):
        b1 = pos[a + 1] if a + 1 < len(pos) else len(cyc)
        out.append((b0, cyc[b0], cyc[b1 % len(cyc)], cyc[b0 + 1:b1]))
    return out


def f_map(walk: DecoratedMotzkinWalk) -> MarkedCyclicPermutation:
    """Build a marked sentinel cycle from a decorated Motzkin walk.

    Steps are read left to right.  Step number i with label h_x inserts i
    into the h-th *available* intermediate set counted clockwise from the
    sentinel; a set is available when both bounding members of
    ``P + {n+1}`` carry right marks.  In a nonempty set, i goes directly
    beside the set's current minimum v, on the side named by v's mark.
    """
    n = walk.n
    pins = walk.pins
    top = n + 1
    cyc = [top]
    mark = {top: RIGHT}
    bounds = {top}
    for t, step in enumerate(walk.steps):
        i = n - t
        avail = [s for s in _intermediate_sets(cyc, bounds)
                 if mark[s[1]] == RIGHT and mark[s[2]] == RIGHT]
        if step.label > len(avail):
            raise WalkError(f"step {i}: label {step.label} but only {len(avail)} available sets")
        b0, _, _, members = avail[step.label - 1]
        if not members:
            where = b0 + 1
        else:
            v = min(members)
            where = cyc.index(v) + (0 if mark[v] == LEFT else 1)
        cyc.insert(where, i)
        mark[i] = step.side
        if i in pins:
            bounds.add(i)
    return MarkedCyclicPermutation(tuple(cyc), tuple(mark[e] for e in cyc))


def g_map(marked: MarkedCyclicPermutation, pins: Iterable[int]) -> DecoratedMotzkinWalk:
    """Inverse of :func:`f_map`: peel off 1, 2, ..., n in turn.

    Removing i merges or shrinks an intermediate set S; the step for i gets
    S's rank among the available sets as its label and i's mark as its side.
    It is flat when i is outside P, down for a left-marked member and up
    for a right-marked member.
    """
    pins = frozenset(pins)
    check_marked(marked, pins)
    n = marked.n
    top = n + 1
    cyc = list(marked.elements)
    mark = marked.mark_of()
    bounds = {top} | set(pins)
    steps: list[Step] = []
    for i in range(1, n + 1):
        where = cyc.index(i)
        del cyc[where]
        bounds.discard(i)
        sets = _intermediate_sets(cyc, bounds)
        # the set whose left bound is the last boundary before the gap
        owner = max(a for a, s in enumerate(sets) if s[0] <= where - 1)
        avail = [a for a, s in enumerate(sets) if mark[s[1]] == RIGHT and mark[s[2]] == RIGHT]
        if owner not in avail:
            raise WalkError(f"removing {i} leaves it in an unavailable set")
        if i not in pins:
            kind = FLAT
        else:
            kind = DOWN if mark[i] == LEFT else UP
        steps.append(Step(kind, avail.index(owner) + 1, mark[i]))
    steps.reverse()
    walk = DecoratedMotzkinWalk(tuple(steps))
    if walk.pins != pins:
        raise WalkError("reconstructed walk does not match P")
    return walk


def worked_example_walk() -> DecoratedMotzkinWalk:
    """The worked example walk for P = {3,5,7,9}, n = 9."""
    return DecoratedMotzkinWalk.parse("U1R F1L D2L F1R U1R F2L D2L F1L F1R")
