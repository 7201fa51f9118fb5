"""Exact and modular arithmetic plus the small combinatorial number kernel.

Counts are plain Python ints.  An :class:`Arithmetic` object fixes the mode
(exact, or residues modulo a prime) and counts the ring operations it
performs, which is what the benchmark harness reports.  :class:`Count`
wraps a value together with its mode for callers who want mixing of modes
to be caught.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Arithmetic", "Count", "KernelTables", "ModeError", "KernelBoundError",
    "EXACT", "parse_mode", "fast_pow", "stirling2", "binomial", "factorial",
]


class ModeError(ValueError):
    """Values from different arithmetic modes were combined."""


class KernelBoundError(ValueError):
    pass


class Arithmetic:
    """Ring operations in exact mode (``modulus=None``) or modulo a prime.

    ``ops`` accumulates the number of additions, multiplications and
    inversions performed through this object.
    """

    __slots__ = ("modulus", "ops")

    def __init__(self, modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.modulus = modulus
        self.ops = 0

    @property
    def exact(self) -> bool:
        return self.modulus is None

    def fresh(self) -> Arithmetic:
        """Same mode, zeroed operation counter."""
        return Arithmetic(self.modulus)

    def __eq__(self, other):
        return isinstance(other, Arithmetic) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "Arithmetic(exact)" if self.exact else f"Arithmetic(mod {self.modulus})"

    def __str__(self):
        return "exact" if self.exact else f"mod:{self.modulus}"

    def reduce(self, x: int) -> int:
        return x if self.modulus is None else x % self.modulus

    def add(self, a: int, b: int) -> int:
        self.ops += 1
        return self.reduce(a + b)

    def mul(self, a: int, b: int) -> int:
        self.ops += 1
        return self.reduce(a * b)

    def dot(self, xs, ys) -> int:
        """Sum of pairwise products; counted as 2·len multiply-adds."""
        total = sum(map(int.__mul__, xs, ys))
        self.ops += 2 * len(xs)
        return self.reduce(total)

    def pow(self, base: int, exp: int) -> int:
        """Square-and-multiply; O(log exp) counted multiplications."""
        if exp < 0:
            raise ValueError("negative exponent")
        result, base = 1, self.reduce(base)
        m = self.modulus
        while exp:
            if exp & 1:
                result = result * base if m is None else result * base % m
                self.ops += 1
            exp >>= 1
            if exp:
                base = base * base if m is None else base * base % m
                self.ops += 1
        return self.reduce(result)

    def inv(self, a: int) -> int:
        if self.modulus is None:
            raise ModeError("no inverses in exact mode")
        if a % self.modulus == 0:
            raise ZeroDivisionError("inverse of zero residue")
        self.ops += 1
        return pow(a, -1, self.modulus)

    def div_exact(self, a: int, b: int) -> int:
        """``a / b`` when b is known to divide a (exact mode checks this)."""
        if self.modulus is None:
            q, r = divmod(a, b)
            if r:
                raise ArithmeticError(f"{b} does not divide {a}")
            self.ops += 1
            return q
        return self.mul(a, self.inv(b))


EXACT = Arithmetic()


def parse_mode(text: str | int | None) -> Arithmetic:
    """``"exact"`` or ``"mod:<prime>"`` (a bare int is read as the prime)."""
    if text is None or text == "exact":
        return Arithmetic()
    if isinstance(text, int):
        p = text
    elif isinstance(text, str) and text.startswith("mod:"):
        try:
            p = int(text[4:])
        except ValueError as exc:
            raise ValueError(f"bad modulus in {text!r}") from exc
    else:
        raise ValueError(f"unknown arithmetic mode {text!r}; use 'exact' or 'mod:<prime>'")
    from sympy import isprime

    if p >= 2**63 or not isprime(p):
        raise ValueError(f"{p} is not a prime below 2^63")
    return Arithmetic(p)


@dataclass(frozen=True)
class Count:
    """A non-negative count tagged with its arithmetic mode."""

    value: int
    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            object.__setattr__(self, "value", self.value % self.modulus)
        elif self.value < 0:
            raise ValueError("counts are non-negative")

    def _check(self, other) -> int:
        if isinstance(other, Count):
            if other.modulus != self.modulus:
                raise ModeError(f"cannot combine {self.mode} and {other.mode} values")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    @property
    def mode(self) -> str:
        return str(Arithmetic(self.modulus))

    def __add__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else Count(self.value + v, self.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        v = self._check(other)
        return NotImplemented if v is NotImplemented else Count(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Count):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == (other if self.modulus is None else other % self.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _mode_of(x, arith: Arithmetic | None) -> Arithmetic:
    if isinstance(x, Count):
        if arith is not None and arith.modulus != x.modulus:
            raise ModeError(f"{x.mode} value used under {arith}")
        return arith if arith is not None else Arithmetic(x.modulus)
    return arith if arith is not None else Arithmetic()


def fast_pow(base: int | Count, exp: int, arith: Arithmetic | None = None) -> Count:
    """``base ** exp`` under the active mode by repeated squaring.

    >>> fast_pow(Count(3, 7), 5)
    Count(value=5, modulus=7)
    """
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    arith = _mode_of(base, arith)
    return Count(arith.pow(int(base), exp), arith.modulus)


class KernelTables:
    """Factorials, binomials and Stirling numbers up to a bound ``K``.

    Everything is computed in the constructor; afterwards the tables are only
    read.  In modular mode the prime must exceed ``K`` so that every
    factorial up to ``K`` is invertible.

    ``stirling_keys`` lists the ``(x, c)`` pairs to tabulate; ``S(x, c)`` is
    evaluated with the alternating sum
    ``S(x, c) = (1/c!) * sum_d (-1)^(c-d) C(c, d) d^x``
    and the powers ``d^x`` are shared across all keys with the same ``x``.
    """

    def __init__(self, bound: int, arith: Arithmetic | None = None,
                 stirling_keys: Iterable[tuple[int, int]] = ()):
        arith = Arithmetic() if arith is None else arith
        if bound < 0:
            raise ValueError("bound must be non-negative")
        if arith.modulus is not None and arith.modulus <= bound:
            raise KernelBoundError(
                f"modulus {arith.modulus} must exceed the kernel bound {bound}")
        self.arith = arith
        self.bound = bound
        fact = [1] * (bound + 1)
        for a in range(1, bound + 1):
            fact[a] = arith.mul(fact[a - 1], a)
        self._fact = fact
        if arith.exact:
            self._inv_fact = None
        else:
            inv = [1] * (bound + 1)
            inv[bound] = arith.inv(fact[bound])
            for a in range(bound, 0, -1):
                inv[a - 1] = arith.mul(inv[a], a)
            self._inv_fact = inv
        rows = [[1]]
        for a in range(1, bound + 1):
            prev = rows[-1]
            row = [1] * (a + 1)
            for b in range(1, a):
                row[b] = arith.add(prev[b - 1], prev[b])
            rows.append(row)
        self._binom = rows
        self._stirling: dict[tuple[int, int], int] = {}
        self._powers: dict[int, list[int]] = {}
        for x, c in stirling_keys:
            self._tabulate_stirling(x, c)

    def _check(self, a: int):
        if a > self.bound:
            raise KernelBoundError(f"kernel bound exceeded: {a} > {self.bound}")
        if a < 0:
            raise ValueError("arguments must be non-negative")

    def factorial(self, a: int) -> int:
        self._check(a)
        return self._fact[a]

    def inv_factorial(self, a: int) -> int:
        self._check(a)
        if self._inv_fact is None:
            raise ModeError("inverse factorials exist only in modular mode")
        return self._inv_fact[a]

    def binomial(self, a: int, b: int) -> int:
        self._check(a)
        if b < 0 or b > a:
            return 0
        return self._binom[a][b]

    def binomial_row(self, a: int) -> list[int]:
        self._check(a)
        return self._binom[a]

    def powers(self, x: int) -> list[int]:
        """``[d^x for d in 0..bound]``, computed once per exponent."""
        row = self._powers.get(x)
        if row is None:
            row = [self.arith.pow(d, x) for d in range(self.bound + 1)]
            self._powers[x] = row
        return row

    def _tabulate_stirling(self, x: int, c: int) -> int:
        key = (x, c)
        if key in self._stirling:
            return self._stirling[key]
        self._check(c)
        if c > x or (c == 0 and x > 0):
            value = 0
        else:
            pw = self.powers(x)
            row = self._binom[c]
            # alternating sum, split by sign so every term stays non-negative
            even = self.arith.dot(row[c::-2], pw[c::-2])
            odd = self.arith.dot(row[c - 1::-2], pw[c - 1::-2]) if c else 0
            total = self.arith.reduce(even - odd)
            value = self.arith.div_exact(total, self._fact[c])
        self._stirling[key] = value
        return value

    def stirling2(self, x: int, c: int) -> int:
        try:
            return self._stirling[(x, c)]
        except KeyError:
            raise KernelBoundError(f"S({x},{c}) was not requested at build time") from None

    def stirling_row(self, x: int, top: int) -> list[int]:
        """``[S(x, t) for t in 0..top]``, tabulating any missing entries."""
        return [self._tabulate_stirling(x, t) for t in range(top + 1)]


def stirling2(x: int, c: int, arith: Arithmetic | None = None) -> Count:
    """Stirling number of the second kind via the alternating-sum formula.

    >>> int(stirling2(4, 2))
    7
    """
    arith = Arithmetic() if arith is None else arith
    if c > x:
        return Count(0, arith.modulus)
    tables = KernelTables(c, arith, [(x, c)])
    return Count(tables.stirling2(x, c), arith.modulus)


def binomial(a: int, b: int, arith: Arithmetic | None = None) -> Count:
    if a < 0 or b < 0:
        raise ValueError("arguments must be non-negative")
    arith = Arithmetic() if arith is None else arith
    return Count(KernelTables(a, arith).binomial(a, b), arith.modulus)


def factorial(a: int, arith: Arithmetic | None = None) -> Count:
    if a < 0:
        raise ValueError("argument must be non-negative")
    arith = Arithmetic() if arith is None else arith
    return Count(KernelTables(a, arith).factorial(a), arith.modulus)
