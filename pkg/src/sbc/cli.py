"""Command-line surface.

Commands: linear, coeff, restrict, thresholds, hset, verify.
Output is a JSON record by default (``--format csv`` for tables,
``--format pretty`` for humans).  Exit codes: 0 success, 1 bad input or
out-of-horizon request, 2 internal consistency failure or failed verify.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import branching as br
from . import verify as verify_mod
from . import wreath
from .errors import InternalConsistencyError, NeedsOracleError
from .partitions import Hook, binary_expansion, check_hook
from .snchars import hook_degree


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise SystemExit(_fail(f"argument error: {message}", 1))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def render_product(labels) -> str:
    return "*".join(wreath.render_label(l) for l in labels)


def _pretty_linear(labels) -> str:
    """X(i1,...,ik) sugar for all-extension product labels."""
    out = []
    for l in labels:
        bits = wreath.linear_bits(l)
        out.append("X(" + ",".join(str(b) for b in bits) + ")")
    return "*".join(out)


def _hook(args) -> Hook:
    return check_hook(Hook(args.n, args.x))


def _record(command: str, inputs: dict, result, provenance: str, t0: float) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": provenance,
        "timing_ms": round((time.perf_counter() - t0) * 1000, 3),
    }


# ---------------------------------------------------------------------------
# commands


def cmd_linear(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    h = _hook(args)
    provenance = "formula"
    if h.n & (h.n - 1) == 0:
        bits = br.unique_linear_bits(h)
        label = wreath.linear_label(bits)
        if args.mode in ("oracle", "both"):
            dec = br.restrict_to_sylow(h, select="linear").constituents
            if dec != {(label,): 1}:
                raise InternalConsistencyError(f"oracle disagrees with bit formula at {h}")
            provenance = "both-agree" if args.mode == "both" else "oracle"
        result = {
            "bits": list(bits),
            "label": wreath.render_label(label),
            "multiplicity": 1,
        }
        rows = [([list(bits)], wreath.render_label(label), 1)]
    else:
        profile = br.linear_profile(h)
        if args.mode in ("oracle", "both"):
            dec = br.restrict_to_sylow(h, select="linear").constituents
            if dec != profile:
                raise InternalConsistencyError(f"oracle disagrees with linear profile at {h}")
            provenance = "both-agree" if args.mode == "both" else "oracle"
        rows = [
            (
                [list(wreath.linear_bits(l)) for l in labels],
                render_product(labels),
                mult,
            )
            for labels, mult in sorted(profile.items())
        ]
        result = {
            "constituents": [
                {"bits_per_factor": bits, "label": label, "multiplicity": mult}
                for bits, label, mult in rows
            ]
        }
    header = ["bits", "label", "multiplicity"]
    csv_rows = [(json.dumps(b), l, m) for b, l, m in rows]
    record = _record(
        "linear", {"n": args.n, "x": args.x, "mode": args.mode}, result, provenance, t0
    )
    pretty = [f"linear constituents of the ({args.n},{args.x}) hook restriction:"] + [
        "  "
        + "*".join("X(" + ",".join(map(str, b)) + ")" for b in per_factor)
        + f"  multiplicity {mult}"
        for per_factor, _, mult in rows
    ]
    return record, [tuple(header)] + csv_rows, pretty


def cmd_coeff(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    h = _hook(args)
    try:
        legs = tuple(int(s) for s in args.parts.split(",")) if args.parts else ()
    except ValueError as exc:
        raise ValueError(f"bad --parts value {args.parts!r}") from exc
    parts = br.factor_hooks(h, legs)
    value = br.linear_multiplicity(h, parts)
    provenance = "formula"
    if args.mode in ("oracle", "both"):
        oracle = br.multiplicity(h, br.linear_constituent_label(parts))
        if oracle != value:
            raise InternalConsistencyError(
                f"oracle multiplicity {oracle} != formula {value} at {h} {parts}"
            )
        provenance = "both-agree" if args.mode == "both" else "oracle"
    t = len(parts)
    y = h.x - sum(p.x for p in parts)
    result = {
        "coefficient": value,
        "binomial": {"top": t - 1, "bottom": y},
        "factors": [[p.n, p.x] for p in parts],
    }
    record = _record(
        "coeff",
        {"n": args.n, "x": args.x, "parts": list(legs), "mode": args.mode},
        result,
        provenance,
        t0,
    )
    rows = [("coefficient", "top", "bottom"), (value, t - 1, y)]
    pretty = [f"[restriction of ({args.n},{args.x}) hook : linear character of legs {list(legs)}] = {value}"]
    return record, rows, pretty


def _profile_payload(h: Hook, mode: str) -> tuple[dict, str]:
    a = wreath.alpha(h.n)
    if mode == "formula":
        rows = []
        for k in range(a + 1):
            entry = {"degree": 1 << k, "member": br.in_degree_set(h, k, "formula")}
            if k == 0:
                entry["distinct"] = len(br.linear_profile(h))
            elif k == 1 and h.n & (h.n - 1) == 0 and h.n >= 4:
                entry["distinct"] = br.degree_two_count(h.n.bit_length() - 1, h.x)
            else:
                entry["distinct"] = None
            rows.append(entry)
        return {"profile": rows}, "formula"
    prof = br.restrict_to_sylow(h).profile()
    rows = [
        {
            "degree": 1 << k,
            "member": prof.distinct.get(k, 0) > 0,
            "distinct": prof.distinct.get(k, 0),
            "total": prof.total.get(k, 0),
        }
        for k in range(a + 1)
    ]
    if mode == "both":
        for k, row in enumerate(rows):
            if br.in_degree_set(h, k, "formula") != row["member"]:
                raise InternalConsistencyError(f"box membership disagrees at {h}, k={k}")
        formula_linear = len(br.linear_profile(h))
        if formula_linear != rows[0]["distinct"]:
            raise InternalConsistencyError(f"linear count disagrees at {h}")
        if h.n & (h.n - 1) == 0 and h.n >= 4:
            expected = br.degree_two_count(h.n.bit_length() - 1, h.x)
            if expected != rows[1]["distinct"]:
                raise InternalConsistencyError(f"degree-2 count disagrees at {h}")
    return {"profile": rows}, ("both-agree" if mode == "both" else "oracle")


def cmd_restrict(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    h = _hook(args)
    inputs = {"n": args.n, "x": args.x, "profile": args.profile, "mode": args.mode}
    if args.profile:
        result, provenance = _profile_payload(h, args.mode)
        rows = [("degree", "member", "distinct", "total")] + [
            (r["degree"], r["member"], r.get("distinct"), r.get("total"))
            for r in result["profile"]
        ]
        pretty = [f"degree profile of the ({args.n},{args.x}) hook restriction:"] + [
            f"  degree {r['degree']}: "
            + ("in" if r["member"] else "out")
            + (f", {r['distinct']} distinct" if r.get("distinct") is not None else "")
            + (f", total multiplicity {r['total']}" if r.get("total") is not None else "")
            for r in result["profile"]
        ]
        return _record("restrict", inputs, result, provenance, t0), rows, pretty
    if args.mode == "formula":
        raise ValueError("the full decomposition has no formula mode; use --profile")
    dec = br.restrict_to_sylow(h)
    items = dec.sorted_items()
    provenance = "oracle"
    if args.mode == "both":
        linear_items = {k: m for k, m in dec.constituents.items()
                        if all(wreath.is_linear(l) for l in k)}
        if linear_items != br.linear_profile(h):
            raise InternalConsistencyError(f"linear part disagrees with formula at {h}")
        provenance = "both-agree"
    result = {
        "degree": hook_degree(h),
        "constituents": [
            {
                "label": render_product(labels),
                "degree": 1 << sum(wreath.degree_exp(l) for l in labels),
                "multiplicity": mult,
            }
            for labels, mult in items
        ],
    }
    rows = [("label", "degree", "multiplicity")] + [
        (r["label"], r["degree"], r["multiplicity"]) for r in result["constituents"]
    ]
    pretty = [f"restriction of the ({args.n},{args.x}) hook character (degree {result['degree']}):"]
    for labels, mult in items:
        shown = (
            _pretty_linear(labels)
            if all(wreath.is_linear(l) for l in labels)
            else render_product(labels)
        )
        deg = 1 << sum(wreath.degree_exp(l) for l in labels)
        pretty.append(f"  {mult} x {shown}  (degree {deg})")
    return _record("restrict", inputs, result, provenance, t0), rows, pretty


def cmd_thresholds(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    n = args.n
    if n < 1:
        raise ValueError("n must be positive")
    a = wreath.alpha(n)
    ks = [args.k] if args.k is not None else list(range(a + 1))
    if any(not 0 <= k <= a for k in ks):
        raise ValueError(f"k out of range [0, {a}]")
    rows = []
    for k in ks:
        row = {"k": k, "degree": 1 << k}
        try:
            row["threshold"] = br.box_threshold(n, k)
            row["source"] = "recursion"
        except NeedsOracleError as exc:
            if k == a:
                row["threshold"] = br.tau_sum(n)
                row["source"] = "closed-form"
            else:
                row["threshold"] = None
                row["source"] = f"needs-oracle@2^{exc.exponent}"
        if k == a and row["threshold"] is not None:
            row["tau_match"] = row["threshold"] == br.tau_sum(n)
        rows.append(row)
    result = {"alpha": a, "rows": rows, "tau_sum": br.tau_sum(n)}
    record = _record("thresholds", {"n": n, "k": args.k}, result, "formula", t0)
    csv_rows = [("k", "degree", "threshold", "source")] + [
        (r["k"], r["degree"], r["threshold"], r["source"]) for r in rows
    ]
    pretty = [f"degree-set box thresholds for n={n} (alpha={a}):"] + [
        f"  k={r['k']} (degree {r['degree']}): "
        + (str(r["threshold"]) if r["threshold"] is not None else r["source"])
        + (" = top-threshold sum" if r.get("tau_match") else "")
        for r in rows
    ]
    return record, csv_rows, pretty


def cmd_hset(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    n = args.n
    if n < 1:
        raise ValueError("n must be positive")
    a = wreath.alpha(n)
    if not 0 <= args.k <= a:
        raise ValueError(f"k out of range [0, {a}]")
    threshold = br.box_threshold(n, args.k)
    members = br.degree_set(n, args.k)
    provenance = "formula"
    if args.mode in ("oracle", "both"):
        oracle = [h for h in (Hook(n, x) for x in range(n))
                  if br.distinct_count(h, args.k, limit=1) > 0]
        if args.mode == "oracle":
            members, provenance = oracle, "oracle"
        elif oracle != members:
            raise InternalConsistencyError(f"degree set disagrees at n={n}, k={args.k}")
        else:
            provenance = "both-agree"
    result = {
        "threshold": threshold,
        "count": len(members),
        "members": [list(h.parts) for h in members],
    }
    record = _record("hset", {"n": n, "k": args.k, "mode": args.mode}, result, provenance, t0)
    rows = [("partition",)] + [("+".join(map(str, h.parts)),) for h in members]
    pretty = [
        f"hooks of {n} with a degree-2^{args.k} constituent (box threshold {threshold}):"
    ] + [f"  ({', '.join(map(str, h.parts))})" for h in members]
    return record, rows, pretty


def cmd_verify(args) -> tuple[dict, list[tuple], list[str]]:
    t0 = time.perf_counter()
    results = verify_mod.run_suites(args.suite or None, max_n=args.max_n)
    all_passed = all(r.passed for r in results)
    payload = {
        "all_passed": all_passed,
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "checked": r.checked,
                "seconds": r.seconds,
                "failures": r.failures,
                **({"skipped": r.skipped} if r.skipped else {}),
            }
            for r in results
        ],
    }
    record = _record(
        "verify", {"max_n": args.max_n, "suites": args.suite or "all"}, payload, "oracle", t0
    )
    rows = [("suite", "passed", "checked", "seconds")] + [
        (r.name, r.passed, r.checked, r.seconds) for r in results
    ]
    pretty = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.name:<14} {r.checked:>7} checks  {r.seconds:7.2f}s"
        if r.skipped:
            line += f"  (skipped: {r.skipped})"
        pretty.append(line)
        pretty.extend(f"     counterexample: {f}" for f in r.failures)
    pretty.append("all suites passed" if all_passed else "FAILURES above")
    return record, rows, pretty


# ---------------------------------------------------------------------------
# wiring


def _emit(record: dict, rows: list[tuple], pretty: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(pretty))


def build_parser() -> _Parser:
    parser = _Parser(prog="sbc", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument(
        "--mode", choices=("formula", "oracle", "both"), default=None,
        help="computation route; default depends on the command",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("linear", parents=[common], help="linear constituents of a hook restriction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.set_defaults(fn=cmd_linear, default_mode="formula")

    p = sub.add_parser("coeff", parents=[common], help="one linear multiplicity from factor legs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--parts", type=str, required=True, help="comma-separated factor leg lengths")
    p.set_defaults(fn=cmd_coeff, default_mode="formula")

    p = sub.add_parser("restrict", parents=[common], help="full decomposition or degree profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--profile", action="store_true", help="degree profile instead of constituents")
    p.set_defaults(fn=cmd_restrict, default_mode="oracle")

    p = sub.add_parser("thresholds", parents=[common], help="box thresholds per degree exponent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(fn=cmd_thresholds, default_mode="formula")

    p = sub.add_parser("hset", parents=[common], help="hooks admitting a given constituent degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=cmd_hset, default_mode="formula")

    p = sub.add_parser("verify", parents=[common], help="run cross-check suites")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--suite", action="append", help="suite name (repeatable); default all")
    p.set_defaults(fn=cmd_verify, default_mode="oracle")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    if args.mode is None:
        args.mode = args.default_mode
    try:
        record, rows, pretty = args.fn(args)
    except NeedsOracleError as exc:
        return _fail(str(exc), 1)
    except ValueError as exc:
        return _fail(str(exc), 1)
    except InternalConsistencyError as exc:
        return _fail(f"internal consistency failure: {exc}", 2)
    _emit(record, rows, pretty, args.format)
    if args.cmd == "verify" and not record["result"]["all_passed"]:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
