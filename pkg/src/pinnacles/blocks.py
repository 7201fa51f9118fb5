"""Block representation of pinnacle sets and the fast count ``p_n(P)``.

A candidate set P inside [n] is written as a 0/1 block of length n with a 1
at each member.  For a block B of length m the quantity ``p(B)^i_j`` counts
arrangements of ``{1..m} + {0^j} + {(m+1)^i}`` whose pinnacle multiset is
``P_B + {(m+1)^i}`` and whose zeros are all cyclic vales (vales once a
sentinel above everything closes the sequence into a cycle).  Then
``p_n(P) = p(B)^0_0``.

Two facts drive the computation:

* for a segregated block ``0^x 1^y``, with ``c = i + y + 1``,
  ``p^i_j = 2^(x+j-c) c!(c-1)!/i! sum_{m<=j} C(c-m, j-m) S(x, c-m) / m!``;
* splitting ``B = B1 B2`` with b ones in B2,
  ``p(B)^i_j = sum_{a=1}^{b+i+1} p(B1)^{a-1}_j p(B2)^i_a``.

:func:`fast_count` peels maximal segregated prefixes off the block and folds
right to left, using ``O(k^2 log n + k^4)`` ring operations for ``k = |P|``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .comb_kernel import Arithmetic, KernelTables
from .perm_core import PinnacleCandidate, is_ballot


class BlockError(ValueError):
    pass


class ForestError(ValueError):
    pass


# -- blocks -------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise BlockError("empty block")
        if any(b not in (0, 1) for b in bits):
            raise BlockError("blocks hold only 0s and 1s")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> Block:
        text = re.sub(r"[\s,\[\]]", "", text)
        if not re.fullmatch(r"[01]+", text):
            raise BlockError(f"bad block {text!r}; expected a bit string like 0010011")
        return cls(tuple(int(ch) for ch in text))

    def __len__(self) -> int:
        return len(self.bits)

    def __add__(self, other: Block) -> Block:
        return Block(self.bits + other.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def pins(self) -> tuple[int, ...]:
        return tuple(t + 1 for t, b in enumerate(self.bits) if b)

    @property
    def segregated(self) -> bool:
        return "10" not in str(self)

    def split_xy(self) -> tuple[int, int]:
        if not self.segregated:
            raise BlockError(f"{self} is not of the form 0^x 1^y")
        return len(self) - self.ones, self.ones

    def is_ballot(self) -> bool:
        return is_ballot(self.bits)


def block_of(n: int, pins: Iterable[int]) -> Block:
    """``P = {3,6,7}, n = 7`` gives ``0010011``."""
    cand = PinnacleCandidate(n, tuple(pins))
    if n < 1:
        raise BlockError("a block needs n >= 1")
    members = set(cand.values)
    return Block(tuple(int(t in members) for t in range(1, n + 1)))


def pinnacles_of(block: Block) -> PinnacleCandidate:
    return PinnacleCandidate(len(block), block.pins)


def segregated_prefixes(block: Block | Sequence[int]) -> list[tuple[int, int]]:
    """Split into maximal ``0^x 1^y`` pieces, returned as ``(x, y)`` pairs."""
    bits = block.bits if isinstance(block, Block) else tuple(block)
    out, t, m = [], 0, len(bits)
    while t < m:
        x = 0
        while t < m and bits[t] == 0:
            x, t = x + 1, t + 1
        y = 0
        while t < m and bits[t] == 1:
            y, t = y + 1, t + 1
        out.append((x, y))
    return out


def pieces_of_set(n: int, pins: Sequence[int]) -> list[tuple[int, int]]:
    """:func:`segregated_prefixes` of ``block_of(n, pins)`` without building
    the block; ``pins`` ascending.  Costs O(k) for any n."""
    out, prev = [], 0
    t = 0
    while t < len(pins):
        x = pins[t] - prev - 1
        y = 1
        while t + y < len(pins) and pins[t + y] == pins[t] + y:
            y += 1
        out.append((x, y))
        prev = pins[t + y - 1]
        t += y
    if prev < n:
        out.append((n - prev, 0))
    return out


# -- the segregated formula ---------------------------------------------------


def _two_pow(e: int, arith: Arithmetic) -> int:
    if arith.exact:
        arith.ops += 1
        return 1 << e
    return arith.pow(2, e)


def segregated_count(x: int, y: int, i: int, j: int,
                     arith: Arithmetic | None = None,
                     tables: KernelTables | None = None) -> int:
    """``p(0^x 1^y)^i_j`` from the closed formula.

    The bracketed sum is evaluated first; only when it is nonzero is the
    power ``2^(x+j-c)`` formed, and then its exponent is non-negative.
    All divisions are folded into falling factorials, so exact mode never
    divides.
    """
    if min(x, y, i, j) < 0:
        raise BlockError("x, y, i, j must be non-negative")
    if x + y == 0:
        raise BlockError("empty block")
    arith = Arithmetic() if arith is None else arith
    c = i + y + 1
    u = c - j
    if u < 0:
        return 0
    if tables is None:
        tables = KernelTables(c + 1, arith)
    top = min(c, x)
    stir = tables.stirling_row(x, top)
    total = 0
    for t in range(u, top + 1):
        # c!/m! * C(c-m, j-m) with t = c - m  ==  falling(c, t) * C(t, u)
        term = arith.mul(_falling(tables, c, t), tables.binomial(t, u))
        total = arith.add(total, arith.mul(term, stir[t]))
    if total == 0:
        return 0
    expo = x + j - c
    if expo < 0:
        raise ArithmeticError("nonzero sum with negative power of two")
    lead = arith.mul(_two_pow(expo, arith), _falling(tables, c - 1, y))
    return arith.mul(lead, total)


def _falling(tables: KernelTables, a: int, b: int) -> int:
    """``a! / (a-b)!``."""
    arith = tables.arith
    if arith.exact:
        return arith.div_exact(tables.factorial(a), tables.factorial(a - b))
    return arith.mul(tables.factorial(a), tables.inv_factorial(a - b))


# -- concatenation ------------------------------------------------------------

Lookup = Callable[[Block, int, int], int]


def concat_count(b1: Block, b2: Block, i: int, j: int, lookup: Lookup,
                 arith: Arithmetic | None = None) -> int:
    """``p(B1 B2)^i_j = sum_{a=1}^{b+i+1} p(B1)^{a-1}_j p(B2)^i_a``, b = ones(B2)."""
    arith = Arithmetic() if arith is None else arith
    total = 0
    for a in range(1, b2.ones + i + 2):
        left = lookup(b1, a - 1, j)
        if left:
            total = arith.add(total, arith.mul(left, lookup(b2, i, a)))
    return total


def block_count(block: Block | str, i: int = 0, j: int = 0,
                arith: Arithmetic | None = None,
                cuts: Sequence[int] = ()) -> int:
    """``p(B)^i_j`` for any nonempty block by recursive splitting.

    ``cuts`` lists split positions to use first (strictly increasing, inside
    the block); once exhausted, each piece is split at its maximal
    segregated prefix.
    """
    if isinstance(block, str):
        block = Block.parse(block)
    arith = Arithmetic() if arith is None else arith
    cuts = tuple(cuts)
    if any(not 0 < c < len(block) for c in cuts) or list(cuts) != sorted(set(cuts)):
        raise BlockError(f"invalid cut positions {cuts} for a block of length {len(block)}")

    @lru_cache(maxsize=None)
    def count(bits: tuple[int, ...], ii: int, jj: int, cuts: tuple[int, ...]) -> int:
        b = Block(bits)
        if not cuts and b.segregated:
            x, y = b.split_xy()
            return segregated_count(x, y, ii, jj, arith)
        if cuts:
            at, rest = cuts[0], tuple(c - cuts[0] for c in cuts[1:])
        else:
            x, y = segregated_prefixes(b)[0]
            at, rest = x + y, ()
        left, right = Block(bits[:at]), Block(bits[at:])
        return concat_count(left, right, ii, jj,
                            lambda blk, p, q: count(blk.bits, p, q, rest if blk is right else ()),
                            arith)

    return count(block.bits, i, j, cuts)


# -- fast count ---------------------------------------------------------------


class _SegregatedRows:
    """``p(0^x 1^y)^i_j`` for one block over a rectangle of (i, j).

    Shares falling factorials, binomials and the Stirling row ``S(x, .)``
    and evaluates each bracketed sum as a single dot product.
    """

    def __init__(self, x: int, y: int, tables: KernelTables, falling: list[list[int]],
                 two: list[int], inv_two: list[int] | None):
        self.x, self.y = x, y
        self.t = tables
        self.a = tables.arith
        self.falling = falling
        K = tables.bound
        self.stir = tables.stirling_row(x, min(x, K))
        self.two_x = None if self.a.exact else self.a.pow(2, x)
        self.two, self.inv_two = two, inv_two
        self._w: dict[int, list[int]] = {}

    def _weights(self, u: int) -> list[int]:
        # w[t] = C(t, u) S(x, t) for t = u .. len(stir)-1
        w = self._w.get(u)
        if w is None:
            a, t = self.a, self.t
            w = [a.mul(t.binomial(s, u), self.stir[s]) for s in range(u, len(self.stir))]
            self._w[u] = w
        return w

    def value(self, i: int, j: int) -> int:
        a = self.a
        c = i + self.y + 1
        u = c - j
        if u < 0:
            return 0
        top = min(c, self.x)
        if top < u:
            return 0
        w = self._weights(u)
        total = a.dot(self.falling[c][u:top + 1], w[:top + 1 - u])
        if total == 0:
            return 0
        expo = self.x + j - c
        if a.exact:
            a.ops += 1
            pw = 1 << expo
        else:
            pw = a.mul(a.mul(self.two_x, self.two[j]), self.inv_two[c])
        return a.mul(a.mul(pw, self.falling[c - 1][self.y]), total)


def fast_count(n: int, pins: Iterable[int], arith: Arithmetic | None = None,
               splitter: str = "prefix") -> int:
    """``p_n(P) = |{pi in S_n : Pin(pi) = P}|``.

    ``arith`` selects exact or modular arithmetic and accumulates the
    operation count.  ``splitter="trees"`` cuts the block along the trees of
    the forest encoding first (admissible sets only; others count 0).

    >>> fast_count(4, {4})
    12
    """
    cand = PinnacleCandidate(n, tuple(pins))
    arith = Arithmetic() if arith is None else arith
    if n == 0:
        return 1
    if splitter == "trees":
        try:
            forest = forest_encode(n, cand.values)
        except ForestError:
            return 0
        return block_count(block_of(n, cand.values), 0, 0, arith, forest.cuts()[1:])
    if splitter != "prefix":
        raise ValueError(f"unknown splitter {splitter!r}")

    pieces = pieces_of_set(n, cand.values)
    k = cand.k
    bound = k + 2
    tables = KernelTables(bound, arith)
    falling = [[_falling(tables, c, t) for t in range(c + 1)] for c in range(bound + 1)]
    if arith.exact:
        two = inv_two = None
    else:
        two = [1] * (bound + 1)
        for e in range(1, bound + 1):
            two[e] = arith.mul(two[e - 1], 2)
        half = arith.inv(2)
        inv_two = [1] * (bound + 1)
        for e in range(1, bound + 1):
            inv_two[e] = arith.mul(inv_two[e - 1], half)
    # ones in pieces[l:], so ones_from[l+1] is the b of the split after piece l
    ones_from = [0] * (len(pieces) + 1)
    for l in range(len(pieces) - 1, -1, -1):
        ones_from[l] = ones_from[l + 1] + pieces[l][1]

    vec: list[int] = []
    for l in range(len(pieces) - 1, -1, -1):
        x, y = pieces[l]
        rows = _SegregatedRows(x, y, tables, falling, two, inv_two)
        js = [0] if l == 0 else range(1, ones_from[l] + 2)
        b = ones_from[l + 1]
        new = [0] * (max(js) + 1)
        for j in js:
            if l == len(pieces) - 1:
                new[j] = rows.value(0, j)
            else:
                col = [rows.value(a - 1, j) for a in range(1, b + 2)]
                new[j] = arith.dot(col, vec[1:b + 2])
        vec = new
    return vec[0]


# -- forests ------------------------------------------------------------------


@dataclass(frozen=True)
class Tree:
    """A complete binary tree node; leaves have no children."""

    label: int
    left: Tree | None = None
    right: Tree | None = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ForestError(f"node {self.label} has exactly one child")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def postorder(self) -> list[Tree]:
        if self.is_leaf:
            return [self]
        return self.left.postorder() + self.right.postorder() + [self]

    def size(self) -> int:
        return len(self.postorder())

    def __str__(self) -> str:
        if self.is_leaf:
            return str(self.label)
        return f"({self.left},{self.right}){self.label}"


@dataclass(frozen=True)
class Forest:
    trees: tuple[Tree, ...]

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))

    @property
    def n(self) -> int:
        return sum(t.size() for t in self.trees)

    def labels(self) -> list[int]:
        """Labels in left-suffix order (trees left to right, postorder)."""
        return [node.label for t in self.trees for node in t.postorder()]

    def cuts(self) -> list[int]:
        """Start offsets of the trees inside [n] (first is 0)."""
        out, pos = [], 0
        for t in self.trees:
            out.append(pos)
            pos += t.size()
        return out

    def __str__(self) -> str:
        return " ".join(map(str, self.trees))

    @classmethod
    def parse(cls, text: str) -> Forest:
        return cls(tuple(_ForestParser(text).forest()))


class _ForestParser:
    def __init__(self, text: str):
        self.toks = re.findall(r"\d+|[(),]|\S", text)
        self.pos = 0

    def _peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def _take(self, want=None):
        tok = self._peek()
        if tok is None or (want is not None and tok != want):
            raise ForestError(f"expected {want or 'a token'} at token {self.pos}, got {tok!r}")
        self.pos += 1
        return tok

    def _label(self) -> int:
        tok = self._take()
        if not tok.isdigit():
            raise ForestError(f"expected a label, got {tok!r}")
        return int(tok)

    def tree(self) -> Tree:
        if self._peek() == "(":
            self._take("(")
            left = self.tree()
            self._take(",")
            right = self.tree()
            self._take(")")
            return Tree(self._label(), left, right)
        return Tree(self._label())

    def forest(self) -> list[Tree]:
        trees = []
        while self._peek() is not None:
            trees.append(self.tree())
        return trees


def relabel(trees: Sequence[Tree]) -> Forest:
    """Same shapes, labels reassigned 1, 2, ... in left-suffix order."""
    counter = iter(range(1, 10**9))

    def walk(t: Tree) -> Tree:
        if t.is_leaf:
            return Tree(next(counter))
        left = walk(t.left)
        right = walk(t.right)
        return Tree(next(counter), left, right)

    return Forest(tuple(walk(t) for t in trees))


def forest_encode(n: int, pins: Iterable[int]) -> Forest:
    """Complete binary forest of an admissible pinnacle set.

    Labels n, n-1, ..., 1 are handed out in turn.  Each goes to the rightmost
    unlabeled node, or to a fresh singleton tree on the far left when none is
    waiting; members of P then receive two unlabeled children.

    >>> str(forest_encode(7, {4, 6}))
    '1 ((2,3)4,5)6 7'
    """
    cand = PinnacleCandidate(n, tuple(pins))
    members = set(cand.values)
    # mutable nodes: [label, left, right]; the stack top is the rightmost open node
    roots: list[list] = []
    open_nodes: list[list] = []
    for label in range(n, 0, -1):
        if open_nodes:
            node = open_nodes.pop()
        else:
            node = [None, None, None]
            roots.insert(0, node)
        node[0] = label
        if label in members:
            node[1], node[2] = [None, None, None], [None, None, None]
            open_nodes.extend((node[1], node[2]))
    if open_nodes:
        raise ForestError(f"inadmissible: {cand} leaves {len(open_nodes)} node(s) unlabeled")

    def freeze(node) -> Tree:
        if node[1] is None:
            return Tree(node[0])
        return Tree(node[0], freeze(node[1]), freeze(node[2]))

    return Forest(tuple(freeze(r) for r in roots))


def forest_decode(forest: Forest) -> PinnacleCandidate:
    """Pinnacle set = labels of internal nodes, after validating the labelling."""
    labels = forest.labels()
    if labels != list(range(1, len(labels) + 1)):
        raise ForestError("labels must read 1..n in left-suffix order")
    internal = [node.label for t in forest.trees for node in t.postorder() if not node.is_leaf]
    return PinnacleCandidate(len(labels), tuple(internal))


# -- the one-half product identity --------------------------------------------


@dataclass(frozen=True)
class HalfIdentity:
    left: int
    right: int
    product: int

    @property
    def equal(self) -> bool:
        return self.left == self.right


def _forest_count(trees: Sequence[Tree], arith: Arithmetic) -> int:
    cand = forest_decode(relabel(trees))
    return fast_count(cand.n, cand.values, arith)


def half_identity_check(forest: Forest, arith: Arithmetic | None = None) -> HalfIdentity:
    """Compare ``p(F)`` with ``1/2 p(O, T_2) p(O, O, T_3, ..., T_r)``.

    ``product`` is the unhalved right-hand side.
    """
    arith = Arithmetic() if arith is None else arith
    trees = forest.trees
    if len(trees) < 2 or not trees[0].is_leaf:
        raise ForestError("precondition: forest must start with a singleton tree and have r >= 2")
    single = Tree(0)
    left = _forest_count(trees, arith)
    prod = arith.mul(_forest_count(trees[:2], arith),
                     _forest_count((single, single) + trees[2:], arith))
    if arith.exact:
        if prod % 2:
            raise ArithmeticError(f"product {prod} is odd")
        right = prod // 2
    else:
        right = arith.mul(prod, arith.inv(2))
    return HalfIdentity(left, right, prod)
