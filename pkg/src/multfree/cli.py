"""
Command-line front end.

    multfree pieri 2 1 --s 2 --n 2          universal one-row rule
    multfree tensor sp 2 -- 2 1 -- 2        tensor decomposition (oracle)
    multfree classify I --n 2 --tau su2=1,sp=1 --degree 4
    multfree verify-theorem1 --bound 2 --degree 6

Exit codes: 0 success/consistent, 1 inconsistency or bounded-certificate
gap, 2 malformed input.  ``--json`` switches every command to a
machine-readable rendering with no prose fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .cases import CaseSpec, case_spec, tau_spec
from .classify import (
    CONSISTENT,
    CONTRADICTION,
    INCONCLUSIVE,
    cross_check,
    default_grid,
    sweep,
)
from .irreps import IrrepLabel, decompose_product, render_formal_sum
from .partitions import canonical
from .sp_pieri import pieri_tensor


class InputError(Exception):
    pass


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InputError(f"not an integer: {text!r}") from exc


def _parse_weight_groups(raw: list[str]) -> list[tuple[int, ...]]:
    groups: list[list[int]] = [[]]
    for tok in raw:
        if tok == "--":
            groups.append([])
        else:
            for piece in tok.split(","):
                piece = piece.strip()
                if piece:
                    groups[-1].append(_parse_int(piece))
    return [tuple(g) for g in groups if g or len(groups) == 1]


def parse_tau(spec: CaseSpec, text: str | None):
    """
    Mini-grammar: comma-separated ``factor=entries`` in the case's canonical
    factor order; a comma-separated segment without ``=`` continues the
    previous factor's weight, so ``su2=1,sp=2,1`` reads as su2=(1), sp=(2,1).
    """
    weights: dict[str, list[int]] = {}
    if text:
        current: str | None = None
        for seg in text.split(","):
            seg = seg.strip()
            if not seg:
                continue
            if "=" in seg:
                key, val = seg.split("=", 1)
                current = key.strip()
                weights[current] = []
                if val.strip():
                    weights[current].append(_parse_int(val))
            elif current is None:
                raise InputError(f"tau segment {seg!r} appears before any factor=...")
            else:
                weights[current].append(_parse_int(seg))
    try:
        return tau_spec(spec, **{k: tuple(v) for k, v in weights.items()})
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _case_kwargs(args) -> dict:
    kwargs = {}
    for key in ("n", "k", "k1", "k2"):
        val = getattr(args, key, None)
        if val is not None:
            kwargs[key] = val
    if getattr(args, "m", None):
        kwargs["m"] = tuple(args.m)
    if getattr(args, "kn", None):
        pairs = []
        for item in args.kn:
            bits = [b for b in item.replace(",", " ").split() if b]
            if len(bits) != 2:
                raise InputError(f"--kn expects 'k,n', got {item!r}")
            pairs.append((_parse_int(bits[0]), _parse_int(bits[1])))
        kwargs["kn"] = tuple(pairs)
    return kwargs


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# commands


def cmd_pieri(args) -> int:
    try:
        eta = canonical(args.parts)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if len(eta) > args.n:
        raise InputError(f"partition {eta} is longer than the rank {args.n}")
    result = pieri_tensor(eta, args.s, args.n)
    if args.json:
        _print_json(result.to_json())
    else:
        print(render_formal_sum(result))
    return 0


def cmd_tensor(args) -> int:
    family = args.family.lower()
    if family not in ("su", "sp", "u", "so"):
        raise InputError(f"unsupported family {args.family!r}")
    rank = args.rank
    # REMAINDER swallows trailing flags, so pick them out by hand
    raw = []
    for tok in args.weights:
        if tok == "--json":
            args.json = True
        elif tok == "--oracle-only":
            args.oracle_only = True
        else:
            raw.append(tok)
    groups = _parse_weight_groups(raw)
    if len(groups) < 2:
        raise InputError("need at least two weights separated by --")
    try:
        labels = [IrrepLabel(family, rank, w) for w in groups]
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = None
    if not args.oracle_only and family == "sp" and len(labels) == 2:
        rows = [lab for lab in labels if len(lab.weight) <= 1]
        if rows:
            row = rows[0]
            other = labels[1] if row is labels[0] else labels[0]
            s = row.weight[0] if row.weight else 0
            result = pieri_tensor(other.weight, s, rank)
    if result is None:
        result = decompose_product(labels)
    if args.json:
        _print_json(result.to_json())
    else:
        print(render_formal_sum(result))
    return 0


def _build_case(args) -> CaseSpec:
    try:
        return case_spec(args.case, **_case_kwargs(args))
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def cmd_classify(args) -> int:
    spec = _build_case(args)
    tau = parse_tau(spec, args.tau)
    row = cross_check(spec, tau, args.degree)
    verdict, expected = row.verdict, row.expected
    if args.json:
        payload = row.to_json()
        if args.witness and verdict.multiplicity_found:
            payload["routes"] = verdict.to_json()["routes"]
        _print_json(payload)
    else:
        if verdict.multiplicity_found:
            print(f"MULTIPLICITY at {verdict.witness} (x{verdict.multiplicity}) - not commutative")
            if args.witness:
                for route in verdict.routes:
                    print(f"  route degree {route['degree']}: omega {route['omega']}, tau {route['tau']}, mult {route['mult']}")
        else:
            d = verdict.degree_bound
            if expected.commutative:
                print(
                    f"multiplicity-free up to degree {d} - commutative per the reference table "
                    f"(bounded certificate only)"
                )
            else:
                print(
                    f"multiplicity-free up to degree {d} - INCONCLUSIVE: the reference table "
                    f"expects non-commutativity; raise --degree"
                )
        print(f"expected: {expected.outcome} - {row.consistency}")
    return 0 if row.consistency == CONSISTENT else 1


_GRID_BY_CASE = {
    "I": [("I", {"n": 2}), ("I", {"n": 3})],
    "II": [("II", {"k1": 1, "k2": 1})],
    "III": [("III", {"n": 1}), ("III", {"n": 2})],
    "IV": [("IV", {"n": 2})],
    "V": [("V", {"n": 3})],
    "VI": [("VI", {"n": 3})],
    "VII": [
        ("VII", {"k": 1, "n": 0}),
        ("VII", {"k": 1, "n": 1}),
        ("VII", {"k": 2, "n": 0}),
        ("VII", {"k": 2, "n": 1}),
    ],
    "VIII": [("VIII", {"m": (3,), "kn": ((1, 0),)})],
    "IX": [("IX", {"n": 1}), ("IX", {"n": 2})],
}


def cmd_verify(args) -> int:
    if args.cases:
        wanted = [c.strip().upper() for c in args.cases.split(",") if c.strip()]
        specs = []
        for cid in wanted:
            if cid not in _GRID_BY_CASE:
                raise InputError(f"unknown case {cid!r}")
            specs.extend(case_spec(c, **kw) for c, kw in _GRID_BY_CASE[cid])
    else:
        specs = default_grid()
    rows = []
    for spec in specs:
        rows.extend(sweep(spec, args.bound, args.degree, jobs=args.jobs))
    bad = [r for r in rows if r.consistency != CONSISTENT]
    summary = {
        "rows": len(rows),
        "consistent": sum(r.consistency == CONSISTENT for r in rows),
        "inconclusive": sum(r.consistency == INCONCLUSIVE for r in rows),
        "contradictions": sum(r.consistency == CONTRADICTION for r in rows),
    }
    if args.json:
        _print_json({"rows": [r.to_json() for r in rows], "summary": summary})
    else:
        for r in rows:
            mark = "   " if r.consistency == CONSISTENT else "!! "
            witness = f"  witness {r.verdict.witness}" if r.verdict.multiplicity_found else ""
            print(
                f"{mark}{str(r.spec):24s} tau {str(r.tau):42s} {r.verdict.outcome:22s} "
                f"expected {r.expected.outcome:16s} {r.consistency}{witness}"
            )
        print(
            f"{summary['rows']} rows: {summary['consistent']} consistent, "
            f"{summary['inconclusive']} inconclusive, {summary['contradictions']} contradictions"
        )
    return 0 if not bad else 1


# ---------------------------------------------------------------------------
# plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multfree",
        description="Exact tensor decompositions and the multiplicity-freeness classifier.",
    )
    parser.add_argument("--config", help="JSON config file (degree, cache, jobs)")
    parser.add_argument("--cache", help="pair-decomposition cache file")
    parser.add_argument("--no-cache", action="store_true", help="disable the persistent cache")
    parser.add_argument("--jobs", type=int, default=None, help="worker threads for sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pieri", help="decompose eta (x) eta_(s) in sp(n)")
    p.add_argument("parts", nargs="*", type=int, help="parts of eta")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("tensor", help="decompose a tensor product of same-family irreps")
    p.add_argument("family", help="su | sp | u | so")
    p.add_argument("rank", type=int)
    p.add_argument("weights", nargs=argparse.REMAINDER, help="weights separated by --")
    p.add_argument("--oracle-only", action="store_true", help="bypass closed forms")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser(
        "classify",
        help="decide a triple by truncated multiplicity-freeness",
        epilog=(
            "tau factor keys per case: I: su2,sp; II: su2a,su2b,spa,spb; III: sp2,sp; "
            "IV: so; V/VI: su,s1; VII: su2,u,sp; VIII: su.i,su2.j,s1.i,u.j,sp.j; IX: u. "
            "Example: --tau su2=1,sp=2,1 sets su2=(1) and sp=(2,1); omitted factors are trivial."
        ),
    )
    p.add_argument("case", help="I..IX")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--m", type=int, action="append", help="su-block size (repeatable, case VIII)")
    p.add_argument("--kn", action="append", help="su2-block 'k,n' (repeatable, case VIII)")
    p.add_argument("--tau", help="factor=weights,... in canonical factor order")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="print production routes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "verify-theorem1",
        help="cross-check the classifier against the reference table on a small grid",
    )
    p.add_argument("--bound", type=int, default=2, help="max weight size per tau factor")
    p.add_argument("--degree", type=int, default=None, help="truncation degree (default 6)")
    p.add_argument("--cases", help="comma-separated subset of I..IX")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                config = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return 2
    if hasattr(args, "degree") and args.degree is None and "degree" in config:
        args.degree = int(config["degree"])
    if args.command == "verify-theorem1" and args.degree is None:
        args.degree = 6
    if args.jobs is None:
        args.jobs = int(config.get("jobs", 1))

    cache_path = cache_mod.resolve_path(args.cache, config.get("cache"), args.no_cache)
    if cache_path:
        cache_mod.load(cache_path)
    try:
        code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache_path:
        cache_mod.save(cache_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
