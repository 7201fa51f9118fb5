"""Cross-checks of every fast formula against the brute-force oracles.

Each check yields ``(instance, expected, got)`` triples; :func:`run_all`
stops at the first mismatch and reports which identity failed where.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from . import blocks, oracle, orderings, walks
from .perm_core import PinnacleCandidate, format_set, is_admissible

Triple = tuple[str, object, object]


def check_fast_count(max_n: int) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        for pins in oracle.all_subsets(n):
            yield (f"n={n} P={format_set(pins)}",
                   oracle.brute_pinnacle_count(n, pins), blocks.fast_count(n, pins))


def check_admissible(max_n: int) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        for pins in oracle.all_subsets(n):
            yield (f"n={n} P={format_set(pins)}",
                   oracle.brute_admissible(n, pins), bool(is_admissible(n, pins)))


def check_weighted_sum(max_n: int) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        for pins in oracle.all_subsets(n):
            yield (f"n={n} P={format_set(pins)}",
                   walks.weighted_sum_lhs(n, pins, oracle.brute_pinnacle_count),
                   walks.weighted_walk_sum(n, pins))


def check_bijection(max_n: int) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        for pins in oracle.all_subsets(n):
            tag = f"n={n} P={format_set(pins)}"
            cycles = set(oracle.enumerate_marked_cycles(n, pins))
            images = set()
            count = 0
            for walk in oracle.enumerate_decorated_walks(n, pins):
                count += 1
                image = walks.f_map(walk)
                images.add(image)
                yield (f"{tag} g(f({walk}))", walk, walks.g_map(image, pins))
            yield (f"{tag} |M_n(P)|", walks.weighted_walk_sum(n, pins), count)
            yield (f"{tag} |V_n(P)|", walks.weighted_walk_sum(n, pins), len(cycles))
            yield (f"{tag} f(M_n(P)) = V_n(P)", True, images == cycles)
            for cyc in cycles:
                yield (f"{tag} f(g({cyc}))", cyc, walks.f_map(walks.g_map(cyc, pins)))


def check_orderings(max_k: int = 3) -> Iterator[Triple]:
    for k in range(max_k + 1):
        n = 2 * k + 1
        for pins in oracle.all_subsets(n):
            if len(pins) != k:
                continue
            cand = PinnacleCandidate(n, pins)
            top = k + 1 if not pins else min(k + 1, pins[0] - 1)
            for i in range(top + 1):
                yield (f"P={format_set(pins)} i={i}",
                       len(oracle.brute_orderings(pins, i)), orderings.count_orderings(cand, i))


def check_segregated(max_x: int = 4, max_y: int = 2, max_i: int = 2, max_j: int = 2) -> Iterator[Triple]:
    for x in range(max_x + 1):
        for y in range(max_y + 1):
            if x + y == 0:
                continue
            bits = "0" * x + "1" * y
            for i in range(max_i + 1):
                for j in range(max_j + 1):
                    yield (f"x={x} y={y} i={i} j={j}",
                           oracle.brute_block_count(bits, i, j), blocks.segregated_count(x, y, i, j))


def check_forest(max_n: int) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        for pins in oracle.all_subsets(n):
            tag = f"n={n} P={format_set(pins)}"
            ok = bool(is_admissible(n, pins))
            try:
                forest = blocks.forest_encode(n, pins)
            except blocks.ForestError:
                yield (f"{tag} encodable", ok, False)
                continue
            yield (f"{tag} encodable", ok, True)
            yield (f"{tag} decode(encode)", PinnacleCandidate(n, pins), blocks.forest_decode(forest))


def check_half_identity(max_n: int) -> Iterator[Triple]:
    for n in range(2, max_n + 1):
        for pins in oracle.all_subsets(n):
            if not is_admissible(n, pins):
                continue
            forest = blocks.forest_encode(n, pins)
            if len(forest.trees) < 2 or not forest.trees[0].is_leaf:
                continue
            res = blocks.half_identity_check(forest)
            yield (f"n={n} P={format_set(pins)}", res.left, res.right)


def check_census(max_n: int = 12) -> Iterator[Triple]:
    for n in range(1, max_n + 1):
        got = sum(1 for pins in oracle.all_subsets(n) if is_admissible(n, pins))
        yield (f"n={n}", comb(n - 1, (n - 1) // 2), got)


@dataclass
class Report:
    ok: bool = True
    checks: list[dict] = field(default_factory=list)
    failure: dict | None = None

    def as_dict(self) -> dict:
        out = {"ok": self.ok, "checks": self.checks}
        if self.failure is not None:
            out["failure"] = self.failure
        return out


def suite(max_n: int) -> list[tuple[str, Callable[[], Iterator[Triple]]]]:
    small = min(max_n, 6)
    return [
        ("fast_count = brute count", lambda: check_fast_count(max_n)),
        ("admissibility criterion = brute existence", lambda: check_admissible(max_n)),
        ("weighted sum identity", lambda: check_weighted_sum(max_n)),
        ("walk/cycle bijection", lambda: check_bijection(small)),
        ("ordering recursion = brute orderings", lambda: check_orderings(min(3, (max_n - 1) // 2))),
        ("segregated formula = brute block count", check_segregated),
        ("forest codec round trip", lambda: check_forest(max_n + 3)),
        ("one-half product identity", lambda: check_half_identity(max_n)),
        ("admissible census = central binomial", lambda: check_census(max(max_n, 12))),
    ]


def run_all(max_n: int = 7) -> Report:
    if not 1 <= max_n <= oracle.MAX_PERM_N:
        raise ValueError(f"--max-n must lie in [1, {oracle.MAX_PERM_N}]")
    report = Report()
    for name, make in suite(max_n):
        count = 0
        for instance, expected, got in make():
            count += 1
            if expected != got:
                report.ok = False
                report.failure = {"identity": name, "instance": instance,
                                  "expected": str(expected), "got": str(got)}
                report.checks.append({"name": name, "instances": count, "ok": False})
                return report
        report.checks.append({"name": name, "instances": count, "ok": True})
    return report
