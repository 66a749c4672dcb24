"""Command-line front end.

    chargraph gen     --family psl2 --q 13
    chargraph analyze --input corpus.jsonl --emit json --emit dot
    chargraph check   --input corpus.jsonl
    chargraph sweep   --family psl2 --q-min 4 --q-max 64
    chargraph oracle  --max-vertices 6 --random 10000 --vertices 10 --seed 7

Exit codes: 0 success (every record equivalent), 1 oracle mismatch,
2 usage or input error, 3 obstruction found.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path
from typing import IO, Iterable, Optional

from .arith import DomainError, prime_powers
from .degrees import FAMILIES, DegreeMultiset, bundled_corpus, dump_record, read_corpus
from .graph import PrimeGraph, build_character_graph, parse_edge_list, pair_to_dot
from .oracle import run_exhaustive, run_random
from .theorem import DEFAULT_ALPHA_CAP, TheoremReport, check_equivalence

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_OBSTRUCTION = 0, 1, 2, 3
MAX_EXHAUSTIVE = 7


class UsageError(Exception):
    """Bad flags or unreadable input; maps to exit code 2."""


def _family_records(
    family: str, qs: Iterable[int], strict: bool
) -> list[tuple[int, DegreeMultiset]]:
    gen = FAMILIES[family]
    out = []
    for q in qs:
        try:
            out.append((q, gen(q)))
        except DomainError as exc:
            if strict:
                raise UsageError(str(exc)) from None
    return out


def _requested_records(args: argparse.Namespace) -> list[DegreeMultiset]:
    family = args.family or "psl2"
    if args.q is not None:
        return [ms for _, ms in _family_records(family, [args.q], strict=True)]
    if args.q_min is None or args.q_max is None:
        raise UsageError("give --q or both --q-min and --q-max")
    records = _family_records(family, prime_powers(args.q_min, args.q_max), strict=False)
    if not records:
        raise UsageError(f"no valid {family} parameters in [{args.q_min}, {args.q_max}]")
    return [ms for _, ms in records]


def _open_output(args: argparse.Namespace) -> IO[str]:
    if args.output and args.output != "-":
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _looks_like_corpus(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            return s.startswith("{")
    return True


def _table_row(cells: Iterable[object], widths: Iterable[int]) -> str:
    return "  ".join(str(c).ljust(w) for c, w in zip(cells, widths)).rstrip()


def _yn(flag: bool) -> str:
    return "T" if flag else "F"


def _witness_text(report: TheoremReport) -> str:
    w = report.psl2_witness
    if w is None:
        return "-"
    return f"u={w.u},alpha={w.alpha},pi={{{','.join(map(str, w.pi))}}}"


ANALYZE_COLUMNS = (("name", 24), ("|V|", 4), ("comps", 6), ("a", 2), ("b", 2), ("c", 2),
                   ("equiv", 6), ("witness", 0))


def _analyze_row(report: TheoremReport) -> str:
    cells = (report.graph.label, report.graph.n, len(report.c.components),
             _yn(report.a.holds), _yn(report.b.holds), _yn(report.c.holds),
             _yn(report.equivalent), _witness_text(report))
    return _table_row(cells, [w for _, w in ANALYZE_COLUMNS])


# ---------------------------------------------------------------------------
# Commands

def cmd_gen(args: argparse.Namespace) -> int:
    records = _requested_records(args)
    out = _open_output(args)
    try:
        for ms in records:
            out.write(dump_record(ms) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _analysis_inputs(args: argparse.Namespace) -> tuple[list[PrimeGraph], list[str]]:
    if args.input is None:
        if args.family is None and args.q is None and args.q_min is None:
            raise UsageError("analyze needs --input or --family/--q")
        return [build_character_graph(d) for d in _requested_records(args)], []
    try:
        text = _read_input(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    if _looks_like_corpus(text):
        records, errors = read_corpus(io.StringIO(text))
        return [build_character_graph(d) for d in records], [str(e) for e in errors]
    label = "stdin" if args.input == "-" else Path(args.input).stem
    try:
        return [parse_edge_list(text, label)], []
    except (ValueError, DomainError) as exc:
        return [], [f"{args.input}: {exc}"]


def cmd_analyze(args: argparse.Namespace) -> int:
    graphs, errors = _analysis_inputs(args)
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    emits = args.emit or ["json"]
    obstruction = False
    out = _open_output(args)
    try:
        if "table" in emits:
            out.write(_table_row([c for c, _ in ANALYZE_COLUMNS],
                                 [w for _, w in ANALYZE_COLUMNS]) + "\n")
        for g in graphs:
            report = check_equivalence(g, args.alpha_cap)
            obstruction |= not report.equivalent
            for fmt in emits:
                if fmt == "json":
                    out.write(json.dumps(report.to_json()) + "\n")
                elif fmt == "dot":
                    out.write(pair_to_dot(g))
                else:
                    out.write(_analyze_row(report) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    if errors:
        return EXIT_INPUT
    return EXIT_OBSTRUCTION if obstruction else EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Validate corpus records and re-verify every report certificate."""
    if args.input is None:
        records, errors = bundled_corpus(), []
    else:
        try:
            records, errors = read_corpus(io.StringIO(_read_input(args.input)))
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {args.input}: {exc}") from None
    out = _open_output(args)
    bad = bool(errors)
    try:
        for e in errors:
            out.write(f"invalid {e}\n")
        for ms in records:
            report = check_equivalence(build_character_graph(ms), args.alpha_cap)
            ok = report.verify()
            bad |= not ok
            status = "ok" if ok else "certificate-failure"
            out.write(f"{status} {ms.name} order={ms.group_order} "
                      f"equivalent={str(report.equivalent).lower()}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_INPUT if bad else EXIT_OK


SWEEP_COLUMNS = (("q", 6), ("comps", 6), ("compl_bip", 10), ("a", 2), ("b", 2), ("c", 2),
                 ("equiv", 6), ("witness", 0))


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.q_min is None or args.q_max is None:
        raise UsageError("sweep needs --q-min and --q-max")
    family = args.family or "psl2"
    records = _family_records(family, prime_powers(args.q_min, args.q_max), strict=False)
    if not records:
        raise UsageError(f"empty range: no valid {family} parameters in [{args.q_min}, {args.q_max}]")
    emits = args.emit or ["table"]
    out = _open_output(args)
    obstruction = False
    try:
        if "table" in emits:
            out.write(_table_row([c for c, _ in SWEEP_COLUMNS],
                                 [w for _, w in SWEEP_COLUMNS]) + "\n")
        for q, ms in records:
            g = build_character_graph(ms)
            report = check_equivalence(g, args.alpha_cap)
            obstruction |= not report.equivalent
            for fmt in emits:
                if fmt == "table":
                    cells = (q, len(report.c.components),
                             _yn(report.c.complement_bipartite.bipartite),
                             _yn(report.a.holds), _yn(report.b.holds), _yn(report.c.holds),
                             _yn(report.equivalent), _witness_text(report))
                    out.write(_table_row(cells, [w for _, w in SWEEP_COLUMNS]) + "\n")
                elif fmt == "json":
                    row = {"family": family, "q": q, **report.to_json()}
                    out.write(json.dumps(row) + "\n")
                else:
                    out.write(pair_to_dot(g))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OBSTRUCTION if obstruction else EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    runs = []
    if args.max_vertices is None and args.random is None:
        args.max_vertices = 6
    if args.max_vertices is not None:
        if not 0 <= args.max_vertices <= MAX_EXHAUSTIVE:
            raise UsageError(f"--max-vertices must be in [0, {MAX_EXHAUSTIVE}]")
        runs.append((f"exhaustive n={args.max_vertices}", run_exhaustive(args.max_vertices)))
    if args.random is not None:
        if args.random < 0 or args.vertices < 1:
            raise UsageError("--random needs a non-negative count and --vertices >= 1")
        summary = run_random(args.random, args.vertices, args.seed)
        runs.append((f"random n<={args.vertices} seed={args.seed}", summary))
    out = _open_output(args)
    mismatches = 0
    try:
        for title, summary in runs:
            out.write(f"{title}: {summary.line()}\n")
            for f in summary.failures:
                out.write(f"  {f}\n")
            mismatches += summary.mismatches
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_MISMATCH if mismatches else EXIT_OK


HELP = {
    "gen": "emit generated degree sets as corpus records",
    "analyze": "decide conditions (a), (b), (c) per record or edge list",
    "check": "validate corpus records and re-verify report certificates",
    "sweep": "tabulate a family over a range of q",
    "oracle": "compare fast algorithms against brute force on small graphs",
}

COMMANDS = {
    "gen": cmd_gen,
    "analyze": cmd_analyze,
    "check": cmd_check,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chargraph", description="Character degree graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name])
        p.add_argument("--family", choices=sorted(FAMILIES))
        p.add_argument("--q", type=int)
        p.add_argument("--q-min", type=int)
        p.add_argument("--q-max", type=int)
        p.add_argument("--input")
        p.add_argument("--output")
        p.add_argument("--emit", action="append", choices=["json", "dot", "table"])
        p.add_argument("--alpha-cap", type=int, default=DEFAULT_ALPHA_CAP)
        p.add_argument("--max-vertices", type=int)
        p.add_argument("--random", type=int)
        p.add_argument("--vertices", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.alpha_cap < 1:
        print("chargraph: error: --alpha-cap must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chargraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"chargraph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
