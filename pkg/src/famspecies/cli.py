"""``famspecies`` command line: classify families, compute cores/hulls/limits, run sweeps.

Every subcommand writes JSON to stdout. Exit status: 0 on success or all
sweeps passing, 1 when a sweep or census assertion fails, 2 on usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io, natep
from . import families as fam
from . import multifamilies as mf
from . import topology as top
from .sweeps import SWEEPS, census, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _family(source: str) -> fam.Family:
    return io.family_from_json(io.load_document(source))


def _multifamily(source: str) -> mf.MultiFamily:
    return io.multifamily_from_json(io.load_document(source))


def cmd_classify(args) -> tuple[dict, int]:
    F = _family(args.family)
    out = {"family": io.family_to_json(F), "species": fam.classify(F).to_json()}
    return out, EXIT_OK


def cmd_aso(args):
    F = _family(args.family)
    return io.family_to_json(fam.aso(F)), EXIT_OK


def cmd_out_core(args):
    M = _multifamily(args.multifamily)
    return io.multifamily_to_json(mf.out_core(M), include_zero=args.all_values), EXIT_OK


def cmd_inn_hull(args):
    M = _multifamily(args.multifamily)
    return io.multifamily_to_json(mf.inn_hull(M), include_zero=args.all_values), EXIT_OK


def _same_labels(a, b, what: str):
    if a.labels != b.labels:
        raise UsageError(f"{what}: universes differ ({list(a.labels)} vs {list(b.labels)})")


def cmd_limit(args):
    M = _multifamily(args.multifamily)
    T = io.topology_from_json(io.load_document(args.topology))
    _same_labels(M.universe, T.universe, "limit")
    out = {
        "limit": io.multiset_to_json(top.multiset_limit(M, T)),
        "closure": io.multifamily_to_json(top.closure_multifamily(M, T), include_zero=True),
    }
    return out, EXIT_OK


def cmd_seq_limit(args):
    x = io.sequence_from_json(io.load_document(args.sequence))
    if args.topology:
        T = io.topology_from_json(io.load_document(args.topology))
        _same_labels(x.universe, T.universe, "seq-limit")
    else:
        T = top.discrete(x.universe)
    pushed = natep.seq_push(x, args.family)
    out = {
        "family": args.family,
        "sequence": x.to_json(),
        "limit": io.multiset_to_json(natep.seq_limit(x, T, args.family)),
        "pushed": io.multifamily_to_json(pushed, include_zero=True),
        "pushed_is_inner": mf.is_inner(pushed),
    }
    return out, EXIT_OK


def cmd_cogap(args):
    S = io.epset_from_json(args.epset)
    out = {"set": S.to_json(), **natep.cogap_report(S)}
    if args.witness:
        if natep.ep_is_finite(S):
            raise UsageError("inner coGap witnesses need an infinite set")
        out["inn_witness"] = [P.to_json() for P in natep.inn_cogap_witness(S, args.witness)]
    return out, EXIT_OK


def cmd_census(args):
    table = census(args.n)
    status = EXIT_OK if all(table.assertions.values()) else EXIT_FAIL
    return table.to_json(), status


def cmd_verify(args):
    if args.all == bool(args.sweep):
        raise UsageError("verify needs exactly one of --sweep ID or --all")
    ids = list(SWEEPS) if args.all else args.sweep
    reports = [run_sweep(i, n=args.n, samples=args.samples, seed=args.seed).to_json() for i in ids]
    ok = all(r["ok"] for r in reports)
    out = {"ok": ok, "seed": args.seed, "reports": reports}
    return out, EXIT_OK if ok else EXIT_FAIL


# -- rendering -------------------------------------------------------------------

def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_pretty(command: str, out: dict) -> str:
    if command == "verify":
        rows = [
            [r["proposition"], "PASS" if r["ok"] else "FAIL", f'{r["passed"]}/{r["instances"]}', f'{r["elapsed"]:.2f}s']
            for r in out["reports"]
        ]
        text = _table(rows, ["sweep", "result", "passed", "time"])
        for r in out["reports"]:
            if r["counterexample"] is not None:
                text += f'\n\ncounterexample for {r["proposition"]}:\n' + json.dumps(r["counterexample"], indent=2)
        return text
    if command == "census":
        text = f'n = {out["n"]}, {out["total"]} families\n\n'
        text += _table(sorted(out["counts"].items()), ["species", "count"]) + "\n\n"
        text += _table(list(out["crosstab"].items()), ["cross-tab", "count"]) + "\n\n"
        text += _table([[k, v] for k, v in out["assertions"].items()], ["assertion", "holds"])
        return text
    return json.dumps(out, indent=2)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="famspecies", description=__doc__.splitlines()[0])
    pretty_help = "indented JSON, or plain tables for verify/census"
    p.add_argument("--pretty", action="store_true", help=pretty_help)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help=pretty_help)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", parents=[common], help="species report for a family")
    s.add_argument("family", help="family JSON: path, '-' or inline")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("aso", parents=[common], help="associate family {S : complement of S not in F}")
    s.add_argument("family")
    s.set_defaults(func=cmd_aso)

    for name, fn, what in (("out-core", cmd_out_core, "outer core"), ("inn-hull", cmd_inn_hull, "inner hull")):
        s = sub.add_parser(name, parents=[common], help=f"{what} of an increasing multi-family")
        s.add_argument("multifamily")
        s.add_argument("--all-values", action="store_true", help="list zero values too")
        s.set_defaults(func=fn)

    s = sub.add_parser("limit", parents=[common], help="multi-set limit (and closure) of a multi-family")
    s.add_argument("multifamily")
    s.add_argument("topology")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("seq-limit", parents=[common], help="limit of an eventually periodic sequence w.r.t. a multi-family on N")
    s.add_argument("sequence")
    s.add_argument("--family", choices=sorted(natep.NAMED), default="cogap")
    s.add_argument("--topology", help="topology JSON (default: discrete)")
    s.set_defaults(func=cmd_seq_limit)

    s = sub.add_parser("cogap", parents=[common], help="Gap/coGap report for an ep-set 'PREFIX:PATTERN'")
    s.add_argument("epset")
    s.add_argument("--witness", type=int, metavar="K", help="also split into K disjoint parts of coGap >= 1")
    s.set_defaults(func=cmd_cogap)

    s = sub.add_parser("census", parents=[common], help="species counts over all families on n points")
    s.add_argument("--n", type=int, required=True, choices=range(1, 5), metavar="N")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", parents=[common], help="run proposition sweeps")
    s.add_argument("--sweep", action="append", choices=list(SWEEPS), metavar="ID",
                   help="sweep id (repeatable): " + ", ".join(SWEEPS))
    s.add_argument("--all", action="store_true", help="run every registered sweep")
    s.add_argument("--n", type=int, help="universe size override")
    s.add_argument("--samples", type=int, help="sample count override")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out, status = args.func(args)
    except (UsageError, ValueError, KeyError) as exc:  # FormatError is a ValueError
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    out = io.to_jsonable(out)
    print(render_pretty(args.command, out) if args.pretty else json.dumps(out))
    return status


if __name__ == "__main__":
    sys.exit(main())
