"""Command-line entry point.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Sequence

from . import __version__, ferrers, theorems
from .counting import q_count, statistic
from .partitions import DEFAULT_ENUM_CAP, Partition, iter_partitions, set_enum_cap

ENUM_CAP_ENV = "PARTITIONKIT_ENUM_CAP"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class Envelope:
    """What a command produced: json/csv renderings plus a text fallback."""

    def __init__(self, command: str, parameters: dict[str, Any], result: Any,
                 text: str, rows: list[dict[str, Any]] | None = None,
                 exit_code: int = EXIT_OK, columns: list[str] | None = None) -> None:
        self.command = command
        self.parameters = parameters
        self.result = result
        self.text = text
        self.rows = rows or []
        self.exit_code = exit_code
        self.columns = columns

    def to_json(self, provenance: bool) -> str:
        obj: dict[str, Any] = {
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "format": "json",
        }
        if provenance:
            obj["provenance"] = {"tool": "partitionkit", "version": __version__}
        return json.dumps(obj, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        columns = self.columns or (list(self.rows[0]) if self.rows else [])
        if columns:
            writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
            writer.writeheader()
            writer.writerows(self.rows)
        return buf.getvalue().rstrip("\n")


def parse_range(text: str) -> tuple[int, int]:
    """``"a..b"`` inclusive, or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return a, b


def _literal(p: Partition) -> str:
    return str(p)


# -- commands ----------------------------------------------------------------

def cmd_compute(args: argparse.Namespace) -> Envelope:
    stat = args.statistic.upper()
    if stat in ("Q", "V") and args.k is None:
        raise UsageError(f"statistic {stat} requires --k")
    if stat in ("P", "S") and args.k is not None:
        raise UsageError(f"statistic {stat} does not take --k")
    lo, hi = parse_range(args.range)
    if stat != "P" and lo < 0:
        raise UsageError(f"statistic {stat} needs n >= 0")
    values = [(n, statistic(stat, n, args.k)) for n in range(lo, hi + 1)]
    name = stat if args.k is None else f"{stat}_{args.k}"
    return Envelope(
        "compute",
        {"statistic": stat, "k": args.k, "range": [lo, hi]},
        {"statistic": stat, "k": args.k, "values": [{"n": n, "value": v} for n, v in values]},
        "\n".join(f"{name}({n}) = {v}" for n, v in values),
        [{"statistic": stat, "k": "" if args.k is None else args.k, "n": n, "value": v}
         for n, v in values],
    )


def cmd_enumerate(args: argparse.Namespace) -> Envelope:
    parts = list(iter_partitions(args.n, args.enum_cap))
    result = []
    rows = []
    lines = []
    for p in parts:
        entry: dict[str, Any] = {"parts": list(p.parts)}
        row: dict[str, Any] = {"partition": _literal(p)}
        line = _literal(p) or "(empty)"
        if args.stats:
            st = p.stats()
            mult = ";".join(f"{v}:{m}" for v, m in st.occurrences_of.items())
            entry["distinct"] = st.distinct_count
            entry["multiplicities"] = {str(v): m for v, m in st.occurrences_of.items()}
            row["distinct"] = st.distinct_count
            row["multiplicities"] = mult
            line += f"\tdistinct={st.distinct_count}\t{mult}"
        result.append(entry)
        rows.append(row)
        lines.append(line)
    return Envelope(
        "enumerate",
        {"n": args.n, "stats": args.stats},
        {"count": len(parts), "partitions": result},
        "\n".join(lines),
        rows,
    )


def _congruence_claims(args: argparse.Namespace) -> list[theorems.CongruenceClaim]:
    claims = []
    if args.builtin:
        claims.extend(theorems.builtin_claims())
    if args.ramanujan:
        claims.extend(theorems.ramanujan_claims())
    for text in args.claim or []:
        try:
            claims.append(theorems.CongruenceClaim.parse(text))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not claims:
        raise UsageError("verify congruences needs --builtin, --ramanujan or --claim")
    return claims


VERIFY_DEFAULTS = {
    "stanley": {"n_max": 40},
    "elder": {"n_max": 40, "k_max": 10},
    "thm1": {"n_max": 200, "k_max": 12},
    "thm2": {"n_max": 100, "k_max": 6, "r_max": 5},
    "congruences": {"n_max": 200},
}


def cmd_verify(args: argparse.Namespace) -> Envelope:
    defaults = VERIFY_DEFAULTS[args.target]
    opt = {key: getattr(args, key) if getattr(args, key) is not None else val
           for key, val in defaults.items()}
    for key, val in opt.items():
        if val < (0 if key == "n_max" else 1):
            raise UsageError(f"--{key.replace('_', '-')} out of range: {val}")
    oracle = False if args.no_oracle else None

    entries: list[tuple[dict[str, Any] | None, theorems.VerificationReport]] = []
    if args.target == "stanley":
        entries.append((None, theorems.verify_stanley(opt["n_max"], oracle)))
    elif args.target == "elder":
        entries.append((None, theorems.verify_elder(opt["n_max"], opt["k_max"])))
    elif args.target == "thm1":
        entries.append((None, theorems.verify_theorem1(opt["n_max"], opt["k_max"], oracle)))
    elif args.target == "thm2":
        entries.append((None, theorems.verify_theorem2(
            opt["n_max"], opt["k_max"], opt["r_max"], oracle)))
    else:
        for claim in _congruence_claims(args):
            entries.append((claim.to_dict(), theorems.verify_congruence(claim, opt["n_max"], oracle)))

    reports = []
    rows = []
    lines = []
    for meta, rep in entries:
        d = rep.to_dict()
        if meta is not None:
            d["source"] = meta["source"]
            d["expected"] = meta["expected"]
        reports.append(d)
        rows.append({"claim": rep.claim, "lo": rep.range_checked[0], "hi": rep.range_checked[1],
                     "passed": rep.passed, "failures": rep.failures})
        line = rep.summary()
        if meta is not None and meta["source"] != "user":
            line += f"  [{meta['source']}, expected {meta['expected']}]"
        lines.append(line)
        for cx in rep.counterexamples:
            extra = "".join(f", {key}={val}" for key, val in cx.params.items())
            lines.append(f"    n={cx.n}{extra}: value={cx.value} residue={cx.residue}")
    ok = theorems.all_passed(rep for _, rep in entries)
    return Envelope(
        "verify",
        {"target": args.target, **opt, "oracle": not args.no_oracle},
        {"all_passed": ok, "reports": reports},
        "\n".join(lines),
        rows,
        EXIT_OK if ok else EXIT_FAIL,
    )


def cmd_scan(args: argparse.Namespace) -> Envelope:
    if args.A < 1 or args.B < 0 or args.m < 2 or args.c_max < 0 or args.n_max < 0:
        raise UsageError("scan needs A >= 1, B >= 0, m >= 2, --c-max >= 0, --n-max >= 0")
    oracle = False if args.no_oracle else None
    survivors = theorems.scan_for_C(args.A, args.B, args.m, args.c_max, args.n_max, oracle)
    text = "\n".join(f"C={c}: {rep.summary()}" for c, rep in survivors)
    return Envelope(
        "scan",
        {"A": args.A, "B": args.B, "m": args.m, "c_max": args.c_max, "n_max": args.n_max},
        {"survivors": [{"C": c, "report": rep.to_dict()} for c, rep in survivors]},
        text or f"no C in 1..{args.c_max} survives",
        [{"C": c, "passed": rep.passed, "n_max": args.n_max} for c, rep in survivors],
        columns=["C", "passed", "n_max"],
    )


def _parse_literal(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _diagram_dict(d: ferrers.FerrersDiagram) -> dict[str, Any]:
    return {
        "parts": list(d.rows.parts),
        "marks": sorted([r, c] for r, c in d.marks),
        "diagram": d.lines(),
    }


def cmd_ferrers(args: argparse.Namespace) -> Envelope:
    cap = args.enum_cap
    if args.action == "show":
        target = args.target
        if "+" in target:
            diagrams = [_parse_literal(target)]
        else:
            try:
                n = int(target)
            except ValueError:
                raise UsageError(f"expected n or a partition literal, got {target!r}") from None
            diagrams = list(iter_partitions(n, cap))
        if diagrams == [Partition(())]:
            text = "(empty diagram: the only partition of 0)"
        else:
            text = ferrers.render_grid(
                [[(str(p), ferrers.FerrersDiagram(p)) for p in diagrams]])
        return Envelope(
            "ferrers",
            {"action": "show", "target": target},
            {"diagrams": [_diagram_dict(ferrers.FerrersDiagram(p)) for p in diagrams]},
            text,
            [{"partition": str(p), "rows": len(p)} for p in diagrams],
        )

    if args.k is None or args.k < 1:
        raise UsageError(f"ferrers {args.action} needs --k >= 1")
    k = args.k

    if args.action == "add":
        source = _parse_literal(args.target)
        outcome = ferrers.add_packet(source, k)
        results = [{"kind": r.kind, "value": r.value, **_diagram_dict(r.diagram)}
                   for r in outcome.results]
        text = ferrers.render_grid(
            [[(str(r.partition), r.diagram) for r in outcome.results]])
        return Envelope(
            "ferrers",
            {"action": "add", "source": str(source), "k": k},
            {"source": list(source.parts), "k": k, "results": results},
            text,
            [{"partition": str(r.partition), "kind": r.kind,
              "value": "" if r.value is None else r.value} for r in outcome.results],
        )

    try:
        n = int(args.target)
    except ValueError:
        raise UsageError(f"ferrers count expects an integer n, got {args.target!r}") from None
    generated = ferrers.count_new_partitions(n, k, cap)
    expected = q_count(k, n + k)
    text = f"new partitions from adding a {k}-packet to partitions of {n}: {generated}\n" \
           f"Q_{k}({n + k}) = {expected}\n{generated} {'=' if generated == expected else '!='} {expected}"
    if args.grid:
        text = ferrers.packet_grid(n, k, cap) + "\n\n" + text
    return Envelope(
        "ferrers",
        {"action": "count", "n": n, "k": k},
        {"count": generated, "q_count": expected, "equal": generated == expected},
        text,
        [{"n": n, "k": k, "count": generated, "q_count": expected}],
    )


# -- parser ------------------------------------------------------------------

def _env_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--enum-cap", type=int, default=argparse.SUPPRESS,
                        help=f"largest n to enumerate exhaustively (env {ENUM_CAP_ENV}, default {DEFAULT_ENUM_CAP})")
    common.add_argument("--no-oracle", action="store_true", default=argparse.SUPPRESS,
                        help="skip brute-force cross-checks")
    common.add_argument("--no-provenance", action="store_true", default=argparse.SUPPRESS,
                        help="omit tool/version metadata from json output")

    parser = argparse.ArgumentParser(
        prog="partitionkit", parents=[common],
        description="Partition statistics, identity checks and Ferrers constructions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="tabulate P, Q_k, V_k or S")
    p.add_argument("statistic", choices=["P", "Q", "V", "S", "p", "q", "v", "s"])
    p.add_argument("range", help="n or A..B inclusive")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check an identity or congruences over a range")
    p.add_argument("target", choices=list(VERIFY_DEFAULTS))
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--builtin", action="store_true", help="built-in Q_k congruence catalogue")
    p.add_argument("--ramanujan", action="store_true", help="Ramanujan's congruences for P")
    p.add_argument("--claim", action="append", metavar="Q,C,A,B,m|P,A,B,m")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="search part indices C for Q_C(A n + B) = 0 mod m")
    p.add_argument("A", type=int)
    p.add_argument("B", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--c-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("ferrers", parents=[common], help="Ferrers diagrams and packet addition")
    p.add_argument("action", choices=["show", "add", "count"])
    p.add_argument("target", help="n, or a partition literal such as 2+2+1")
    p.add_argument("--k", type=int)
    p.add_argument("--grid", action="store_true", help="with count: draw every generated diagram")
    p.set_defaults(func=cmd_ferrers)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    previous_cap = None
    try:
        if getattr(args, "enum_cap", None) is None:
            args.enum_cap = _env_cap()
        args.no_oracle = getattr(args, "no_oracle", False)
        previous_cap = set_enum_cap(args.enum_cap)
        envelope = args.func(args)
    except (UsageError, ValueError) as exc:
        # EnumerationCapError is a ValueError
        print(f"partitionkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if previous_cap is not None:
            set_enum_cap(previous_cap)

    if fmt == "json":
        out = envelope.to_json(provenance=not getattr(args, "no_provenance", False))
    elif fmt == "csv":
        out = envelope.to_csv()
    else:
        out = envelope.text
    if out:
        print(out)
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())
