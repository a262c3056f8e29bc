"""``bcinv``: command-line front end.

Exit status: 0 on success (inverse found, all properties pass, miner ran),
1 when an inverse is not found or a property fails, 2 on usage errors.
Output is buffered and written only once the command has finished, so an
exit-2 run prints nothing on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from datetime import datetime, timezone

from . import ideals, inverses
from .errors import BCInverseError
from .harness import CHECK_ORDER, HarnessConfig, dumps_record, run_all, summary_table
from .harness.miner import FAMILIES, TARGETS, MinerQuery, mine
from .harness.report import SCHEMA_VERSION
from .rings import build_ring

KIND_INPUTS = {
    "bc": ("a", "b", "c"),
    "hybrid": ("a", "b", "c"),
    "annihilator": ("a", "b", "c"),
    "group": ("a",),
    "drazin": ("a",),
    "bott-duffin": ("a", "e", "f"),
    "image-kernel": ("a", "p", "q"),
}

# settings that may also come from --config; flags win over the file
BUILTIN_DEFAULTS = {
    "ring": None,
    "format": "human",
    "threads": None,
    "max_inner_choices": None,
    "max_order": None,
    "family": "zn",
    "min_n": 2,
    "max_n": 12,
    "budget": 2_000_000,
    "max_witnesses": 20,
}


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, *, ring=True) -> None:
    if ring:
        p.add_argument("--ring", help="ring spec: zn:<n> | mat:<k>:<spec> | prod:<spec>,<spec>,...")
    p.add_argument("--format", choices=("human", "jsonl"), default=None, help="output mode (default human)")
    p.add_argument("--config", help="JSON file with default values for these flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcinv", description="(b,c)-inverses in finite rings")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="{inverse,ideals,verify,mine}")

    p = sub.add_parser("inverse", help="compute one generalised inverse")
    _common(p)
    p.add_argument("--kind", required=True, choices=tuple(KIND_INPUTS))
    for name in ("a", "b", "c", "e", "f", "p", "q"):
        p.add_argument(f"--{name}", metavar="LITERAL")

    p = sub.add_parser("ideals", help="principal one-sided ideals and annihilators of an element")
    _common(p)
    p.add_argument("--a", required=True, metavar="LITERAL")

    p = sub.add_parser("verify", help="run theorem checkers over a ring")
    _common(p)
    p.add_argument("--theorem", default="all", help="checker id or 'all'")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--max-inner-choices", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None, help="largest ring order the harness will sweep")

    p = sub.add_parser("mine", help="search ring families for separating triples")
    _common(p, ring=False)
    p.add_argument("--target", required=True)
    p.add_argument("--family", default=None, choices=FAMILIES)
    p.add_argument("--min-n", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="maximum number of triples examined")
    p.add_argument("--max-witnesses", type=int, default=None)
    p.add_argument("--max-order", type=int, default=None)
    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config {path!r} must hold a JSON object")
    data = {k.replace("-", "_"): v for k, v in data.items()}
    unknown = sorted(set(data) - set(BUILTIN_DEFAULTS))
    if unknown:
        raise UsageError(f"unknown config key(s) {', '.join(unknown)}; valid: {', '.join(BUILTIN_DEFAULTS)}")
    return data


def _resolve(args: argparse.Namespace) -> argparse.Namespace:
    config = _load_config(args.config)
    for key, default in BUILTIN_DEFAULTS.items():
        if getattr(args, key, None) is None and (hasattr(args, key) or key in config):
            setattr(args, key, config.get(key, default))
    if hasattr(args, "threads") and args.threads is None:
        args.threads = os.cpu_count() or 1
    if args.verb != "mine" and not args.ring:
        raise UsageError("--ring is required (flag or config)")
    return args


def _ring(args):
    try:
        return build_ring(args.ring)
    except BCInverseError as exc:
        raise UsageError(f"bad --ring {args.ring!r}: {exc}") from exc


def _literal(ring, name: str, token: str | None) -> int:
    if token is None:
        raise UsageError(f"--{name} is required")
    try:
        return ring.parse_literal(token)
    except (BCInverseError, ValueError) as exc:
        raise UsageError(f"bad literal for --{name}: {token!r}: {exc}") from exc


def _header(args, argv, timings: dict) -> dict:
    return {
        "record": "header",
        "schema_version": SCHEMA_VERSION,
        "tool": "bcinv",
        "verb": args.verb,
        "argv": list(argv),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "timings": timings,
    }


def cmd_inverse(args, ring) -> tuple[int, list[dict], list[str]]:
    names = KIND_INPUTS[args.kind]
    extra = [n for n in ("a", "b", "c", "e", "f", "p", "q") if n not in names and getattr(args, n) is not None]
    if extra:
        raise UsageError(f"--kind {args.kind} does not take {', '.join('--' + n for n in extra)}")
    v = {n: _literal(ring, n, getattr(args, n)) for n in names}
    fn = {
        "bc": inverses.bc_inverse,
        "hybrid": inverses.hybrid_bc_inverse,
        "annihilator": inverses.annihilator_bc_inverse,
        "group": inverses.group_inverse,
        "drazin": inverses.drazin_inverse,
        "bott-duffin": inverses.bott_duffin,
        "image-kernel": inverses.image_kernel_inverse,
    }[args.kind]
    try:
        result = fn(ring, *(v[n] for n in names))
    except BCInverseError as exc:
        # e.g. an argument that must be idempotent is not
        raise UsageError(str(exc)) from exc
    rec = {"schema_version": SCHEMA_VERSION, "record": "inverse", "ring": str(ring.spec), **result.to_record()}
    if result.found:
        rec["value_literal"] = ring.format(result.index)
    args_txt = ", ".join(f"{n}={ring.format(v[n])}" for n in names)
    if result.found:
        line = f"{args.kind} inverse in {ring.spec} ({args_txt}): found y={ring.format(result.index)}"
        if args.kind == "drazin":
            line += f" (index {result.drazin_index})"
    else:
        line = f"{args.kind} inverse in {ring.spec} ({args_txt}): not-found"
    human = [line, f"  method: {result.method}"]
    for k, w in result.witnesses.items():
        human.append(f"  {k}: {w}")
    return (0 if result.found else 1), [rec], human


def cmd_ideals(args, ring):
    a = _literal(ring, "a", args.a)
    rl, lr = ideals.double_annihilators(ring, a)
    sets = {
        "aR": ideals.right_ideal(ring, a),
        "Ra": ideals.left_ideal(ring, a),
        "l(a)": ideals.left_annihilator(ring, a),
        "r(a)": ideals.right_annihilator(ring, a),
        "rl(a)": rl,
        "lr(a)": lr,
    }
    rec = {
        "schema_version": SCHEMA_VERSION,
        "record": "ideals",
        "ring": str(ring.spec),
        "a": a,
        **{k: s.indices() for k, s in sets.items()},
    }
    human = [f"a={ring.format(a)} (index {a}) in {ring.spec}"]
    for k, s in sets.items():
        human.append(f"  {k:<6} |{s.cardinality}| = {{{', '.join(map(str, s.indices()))}}}")
    return 0, [rec], human


def cmd_verify(args, ring):
    if args.theorem == "all":
        ids = list(CHECK_ORDER)
    elif args.theorem in CHECK_ORDER:
        ids = [args.theorem]
    else:
        raise UsageError(f"unknown theorem id {args.theorem!r}; valid ids: all, {', '.join(CHECK_ORDER)}")
    try:
        cfg = HarnessConfig(threads=args.threads, max_inner_choices=args.max_inner_choices, max_order=64 if args.max_order is None else args.max_order)
        reports = run_all(ring, cfg, ids)
    except BCInverseError as exc:
        raise UsageError(str(exc)) from exc
    code = 0 if all(r.passed for r in reports) else 1
    return code, [r.to_record() for r in reports], summary_table(reports).splitlines(), reports


def cmd_mine(args):
    try:
        query = MinerQuery(
            target=args.target,
            family=args.family,
            min_n=args.min_n,
            max_n=args.max_n,
            budget=args.budget,
            max_witnesses=args.max_witnesses,
            max_order=args.max_order if args.max_order is not None else 256,
        )
    except BCInverseError as exc:
        raise UsageError(str(exc)) from exc
    report = mine(query)
    e = report.extra
    human = [
        f"target {args.target}: {e['description']}",
        f"rings examined: {', '.join(e['rings_examined']) or 'none'} ({e['triples_examined']} triples)",
        f"hypothesis held on {report.instances} triple(s); witnesses: {e['witness_count']}",
        f"outcome: {e['outcome']}",
    ]
    for w in e["witnesses"]:
        lit = w["literals"]
        human.append(
            f"  {w['ring']}: a={lit['a']} b={lit['b']} c={lit['c']} t={lit['t']} "
            f"(t regular={w['t_regular']}, b regular={w['b_regular']}, c regular={w['c_regular']})"
        )
    human += [f"note: {n}" for n in report.notes]
    return 0, [report.to_record()], human, [report]


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already wrote its diagnostic to stderr
        return int(exc.code or 0), "", ""
    start = time.perf_counter()
    reports = []
    try:
        args = _resolve(args)
        if args.verb == "mine":
            if args.target not in TARGETS:
                raise UsageError(f"unknown miner target {args.target!r}; valid: {', '.join(TARGETS)}")
            code, records, human, reports = cmd_mine(args)
        else:
            ring = _ring(args)
            if args.verb == "inverse":
                code, records, human = cmd_inverse(args, ring)
            elif args.verb == "ideals":
                code, records, human = cmd_ideals(args, ring)
            else:
                code, records, human, reports = cmd_verify(args, ring)
    except UsageError as exc:
        return 2, "", f"bcinv {args.verb}: error: {exc}\n"
    timings = {"total_seconds": round(time.perf_counter() - start, 6)}
    if reports:
        timings["reports"] = {r.theorem_id: round(r.wall_time, 6) for r in reports}
    if args.format == "jsonl":
        lines = [dumps_record(_header(args, argv, timings))] + [dumps_record(r) for r in records]
    else:
        lines = human
    return code, "\n".join(lines) + "\n", ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
