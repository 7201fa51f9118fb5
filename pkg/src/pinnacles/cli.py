"""Command-line front end.

Every subcommand prints one JSON object (or ``key: value`` lines with
``--format plain``).  Counts are emitted as decimal strings.  Exit status is
0 on success, 1 when ``verify`` finds a mismatch and 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench, oracle, verify
from .blocks import Forest, ForestError, fast_count, forest_decode, forest_encode
from .comb_kernel import Arithmetic, KernelBoundError, parse_mode
from .orderings import compactify, count_orderings
from .perm_core import PinnacleCandidate, ballot_string, format_set, is_admissible
from .walks import (
    DecoratedMotzkinWalk, MarkedCyclicPermutation, f_map, g_map, weighted_sum_lhs, weighted_walk_sum,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _candidate(args) -> PinnacleCandidate:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    return PinnacleCandidate.parse(args.n, args.set)


def _arith(mod: str | None, k: int) -> Arithmetic:
    if mod is None:
        return Arithmetic()
    try:
        p = int(mod)
    except ValueError:
        raise UsageError(f"--mod expects an integer prime, got {mod!r}") from None
    if p <= k + 2 or p == 2:
        raise UsageError(f"--mod must be an odd prime greater than k+2 = {k + 2}")
    return parse_mode(p)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


# -- subcommands ---------------------------------------------------------------


def cmd_count(args) -> dict:
    cand = _candidate(args)
    if args.method == "oracle":
        if args.mod is not None:
            raise UsageError("--mod applies to the fast method only")
        value = oracle.brute_pinnacle_count(cand.n, cand.values)
    else:
        value = fast_count(cand.n, cand.values, _arith(args.mod, cand.k))
    out = {"count": str(value)}
    if args.mod is not None:
        out["mod"] = str(args.mod)
    return out


def cmd_wsum(args) -> dict:
    cand = _candidate(args)
    lhs = weighted_sum_lhs(cand.n, cand.values, lambda n, q: fast_count(n, q))
    rhs = weighted_walk_sum(cand.n, cand.values)
    return {"lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}


def cmd_orderings(args) -> dict:
    cand = _candidate(args)
    compact = compactify(cand.n, cand.values)
    if not 0 <= args.i <= cand.k + 1:
        raise UsageError(f"--i must lie in [0, {cand.k + 1}]")
    if compact.values and args.i >= compact.values[0]:
        raise UsageError(f"--i must be below the smallest compacted member {compact.values[0]}")
    out = {"set": format_set(cand.values), "i": args.i,
           "count": str(count_orderings(compact, args.i))}
    if args.list:
        if cand.k > oracle.MAX_ORDERING_K:
            raise UsageError(f"--list needs k <= {oracle.MAX_ORDERING_K}")
        # map the compact labels back onto the original values
        support = sorted(set(cand.values) | set(cand.non_members()))
        orders = sorted(oracle.brute_orderings(compact.values, args.i))
        out["orderings"] = [",".join(str(support[v - 1]) for v in o) for o in orders]
    return out


def cmd_admissible(args) -> dict:
    cand = _candidate(args)
    verdict = is_admissible(cand.n, cand.values)
    return {"admissible": verdict.admissible, "ballot": ballot_string(cand.n, cand.values),
            "reason": verdict.reason}


def cmd_forest(args) -> dict:
    if args.action == "encode":
        if args.n is None or args.set is None:
            raise UsageError("forest encode needs --n and --set")
        cand = _candidate(args)
        try:
            return {"forest": str(forest_encode(cand.n, cand.values))}
        except ForestError as exc:
            return {"forest": None, "error": str(exc)}
    if args.forest is None:
        raise UsageError("forest decode needs --forest")
    forest = Forest.parse(args.forest)
    cand = forest_decode(forest)
    return {"n": cand.n, "set": format_set(cand.values)}


def cmd_bijection(args) -> dict:
    if args.map == "f":
        if args.walk is None:
            raise UsageError("bijection f needs --walk")
        walk = DecoratedMotzkinWalk.parse(args.walk)
        return {"cycle": str(f_map(walk)), "set": format_set(walk.pins)}
    if args.cycle is None or args.set is None:
        raise UsageError("bijection g needs --cycle and --set")
    marked = MarkedCyclicPermutation.parse(args.cycle)
    pins = PinnacleCandidate.parse(marked.n, args.set).values
    return {"walk": str(g_map(marked, pins))}


def cmd_verify(args) -> tuple[dict, int]:
    report = verify.run_all(args.max_n)
    return report.as_dict(), EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bench(args) -> dict:
    ks, ns = _ints(args.k), _ints(args.n)
    if not ks or not ns:
        raise UsageError("bench needs non-empty --k and --n lists")
    prime = bench.DEFAULT_PRIME if args.mod is None else int(args.mod)
    _arith(str(prime), max(ks))
    rows = bench.run_grid(ks, ns, prime)
    c, spread = bench.fit_constant(rows)
    return {
        "mod": str(prime),
        "rows": [{"k": r.k, "n": r.n, "ops": r.ops, "seconds": round(r.seconds, 6),
                  "ratio": round(r.ratio, 4), "count": str(r.count)} for r in rows],
        "fit_c": round(c, 4),
        "spread": round(spread, 4),
    }


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinnacles", description="Pinnacle-set statistics of permutations.")
    parser.add_argument("--format", choices=("json", "plain"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_set(p, required=True):
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--set", required=required, help='comma-separated values; "" for the empty set')
        return p

    p = with_set(sub.add_parser("count", help="number of permutations with pinnacle set P"))
    p.add_argument("--method", choices=("fast", "oracle"), default="fast")
    p.add_argument("--mod")
    p.set_defaults(func=cmd_count)

    p = with_set(sub.add_parser("wsum", help="both sides of the weighted walk identity"))
    p.set_defaults(func=cmd_wsum)

    p = with_set(sub.add_parser("orderings", help="admissible orderings of P"))
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_orderings)

    p = with_set(sub.add_parser("admissible", help="admissibility test and ballot string"))
    p.set_defaults(func=cmd_admissible)

    p = with_set(sub.add_parser("forest", help="forest encoding of P"), required=False)
    p.add_argument("action", choices=("encode", "decode"))
    p.add_argument("--forest")
    p.set_defaults(func=cmd_forest)

    p = sub.add_parser("bijection", help="walk <-> marked cycle maps")
    p.add_argument("map", choices=("f", "g"))
    p.add_argument("--walk")
    p.add_argument("--cycle")
    p.add_argument("--set")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="cross-check fast formulas against the oracles")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="operation counts and timings for fast_count")
    p.add_argument("--k", default="5,10,20,40")
    p.add_argument("--n", default="1000,1000000,1000000000")
    p.add_argument("--mod")
    p.set_defaults(func=cmd_bench)
    return parser


def _emit(payload: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    for key, value in payload.items():
        if isinstance(value, list):
            stream.write(f"{key}:\n")
            for item in value:
                stream.write(f"  {json.dumps(item) if isinstance(item, dict) else item}\n")
        else:
            stream.write(f"{key}: {value}\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        result = args.func(args)
    except (UsageError, ValueError, KernelBoundError) as exc:
        # OracleScaleError, WalkError, ForestError etc. all derive from ValueError
        stderr.write(f"pinnacles {args.command}: error: {exc}\n")
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    _emit(result, args.format, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
