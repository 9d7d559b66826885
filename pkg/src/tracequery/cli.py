"""Command-line front end.

Exit codes: 0 affirmative, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import analysis, discovery, matcher
from .core import INF, GapConstraint, canonical_form, support_threshold
from .io import (
    parse_constraints,
    parse_gaps,
    parse_query,
    parse_traces,
    serialize_query,
    write_report,
)

YES, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _query(path):
    return parse_query(_read(path))


def _traces(path):
    return parse_traces(_read(path))


def _alphabet(text):
    if text is None:
        return None
    return frozenset(a.strip() for a in text.split(",") if a.strip())


def _emit(args, text, report):
    print(report if args.json else text)


def cmd_match(args):
    q, sample = _query(args.query), _traces(args.traces)
    rows = []
    for t in sample:
        w = matcher.find_witness(q, t)
        rows.append((t, w))
    all_match = all(w is not None for _, w in rows)
    if args.json:
        results = []
        for t, w in rows:
            entry = {"trace": " ".join(t), "verdict": "match" if w else "no-match"}
            if w is not None:
                entry["embedding"] = list(w.embedding)
            results.append(entry)
        first = rows[0][1] if len(rows) == 1 else None
        print(write_report("match", {"query": args.query, "traces": args.traces},
                           "match" if all_match else "no-match", witness=first, results=results))
    else:
        for t, w in rows:
            line = "match" if w else "no-match"
            if w is not None and args.witness:
                line += " " + " ".join(map(str, w.embedding))
            print(line)
    return YES if all_match else NO


def cmd_sat(args):
    q = _query(args.query)
    ok = analysis.is_satisfiable(q)
    verdict = "satisfiable" if ok else "unsatisfiable"
    _emit(args, verdict, write_report("sat", {"query": args.query}, verdict))
    return YES if ok else NO


def cmd_minlen(args):
    q = _query(args.query)
    n = analysis.min_match_length(q, ignore_window=args.ignore_window)
    verdict = "unsatisfiable" if n is None else "satisfiable"
    _emit(args, verdict if n is None else str(n),
          write_report("minlen", {"query": args.query, "ignore_window": args.ignore_window},
                       verdict, min_length=n))
    return NO if n is None else YES


def cmd_mintrace(args):
    q = _query(args.query)
    t = analysis.construct_min_trace(q, args.filler, args.varfill,
                                     ignore_window=args.ignore_window, align=args.align)
    verdict = "unsatisfiable" if t is None else "satisfiable"
    _emit(args, verdict if t is None else " ".join(t),
          write_report("mintrace", {"query": args.query, "filler": args.filler,
                                    "varfill": args.varfill}, verdict,
                       trace=None if t is None else " ".join(t)))
    return NO if t is None else YES


def cmd_contains(args):
    q1, q2 = _query(args.q1), _query(args.q2)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ok = analysis.contained_in(q1, q2, _alphabet(args.alphabet), force=args.force)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    verdict = "contained" if ok else "not-contained"
    _emit(args, verdict, write_report("contains", {"q1": args.q1, "q2": args.q2,
                                                   "alphabet": sorted(_alphabet(args.alphabet))},
                                      verdict))
    return YES if ok else NO


def cmd_equiv(args):
    q1, q2 = _query(args.q1), _query(args.q2)
    ok = analysis.equivalent(q1, q2)
    verdict = "equivalent" if ok else "not-equivalent"
    _emit(args, verdict, write_report("equiv", {"q1": args.q1, "q2": args.q2}, verdict))
    return YES if ok else NO


def cmd_support(args):
    q, sample = _query(args.query), _traces(args.traces)
    s = matcher.support(q, sample)
    _emit(args, str(s), write_report("support", {"query": args.query, "traces": args.traces},
                                     "computed", support=s))
    return YES


def cmd_delta(args):
    sample = _traces(args.traces)
    fam = discovery.compute_delta(sample, args.supp, args.k, _alphabet(args.alphabet))
    layers = {str(i): ["{" + ",".join(sorted(ts)) + "}" for ts in fam.layer(i)]
              for i in sorted(fam.layers)}
    text = "\n".join(f"{i}: " + " ".join(v) for i, v in layers.items())
    _emit(args, text, write_report("delta", {"traces": args.traces, "supp": str(args.supp), "k": args.k},
                                   "computed", layers=layers))
    return YES


def _window(text):
    if text in ("inf", "∞"):
        return INF
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be a positive integer or 'inf', got {text!r}")
    return value


def cmd_discover(args):
    sample = _traces(args.traces)
    constraints = []
    if args.gaps is not None:
        gaps = parse_gaps(args.gaps)
        if len(gaps) != args.len - 1:
            raise UsageError(f"--gaps needs {args.len - 1} entries, got {len(gaps)}")
        constraints += [GapConstraint(i, 1, lo, hi) for i, (lo, hi) in enumerate(gaps, 1)]
    if args.constraints is not None:
        constraints += parse_constraints(args.constraints)
    params = discovery.DiscoveryParams(args.len, args.window, tuple(constraints), args.k, args.order)
    result = discovery.discover(sample, args.supp, params, _alphabet(args.alphabet))
    inputs = {"traces": args.traces, "supp": str(args.supp), "len": args.len,
              "window": "inf" if args.window == INF else args.window, "k": args.k, "order": args.order}
    if isinstance(result, discovery.NoDescriptiveQuery):
        _emit(args, "no-descriptive-query",
              write_report("discover", inputs, "no-descriptive-query", support=result.support))
        return NO
    s = matcher.support(result, sample)
    _emit(args, serialize_query(canonical_form(result)),
          write_report("discover", inputs, "descriptive-query", support=s, query=result))
    return YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracequery", description="Match, analyse and discover subsequence queries over event traces.",
        epilog="exit status: 0 yes, 1 no, 2 usage or input error")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("match", cmd_match, "match a query against each trace")
    p.add_argument("query")
    p.add_argument("traces")
    p.add_argument("--witness", action="store_true", help="print the embedding of each match")

    p = add("sat", cmd_sat, "decide satisfiability")
    p.add_argument("query")

    p = add("minlen", cmd_minlen, "length of the shortest matching trace")
    p.add_argument("query")
    p.add_argument("--ignore-window", action="store_true")

    p = add("mintrace", cmd_mintrace, "construct a shortest matching trace")
    p.add_argument("query")
    p.add_argument("--filler", required=True)
    p.add_argument("--varfill", required=True)
    p.add_argument("--ignore-window", action="store_true")
    p.add_argument("--align", choices=("left", "right"), default="left")

    p = add("contains", cmd_contains, "decide whether q1 is contained in q2")
    p.add_argument("q1")
    p.add_argument("q2")
    p.add_argument("--alphabet", required=True, help="comma separated types")
    p.add_argument("--force", action="store_true", help="decide even below the alphabet bound")

    p = add("equiv", cmd_equiv, "decide equivalence")
    p.add_argument("q1")
    p.add_argument("q2")

    p = add("support", cmd_support, "support of a query in a sample")
    p.add_argument("query")
    p.add_argument("traces")

    p = add("delta", cmd_delta, "typesets meeting a support threshold")
    p.add_argument("traces")
    p.add_argument("--supp", required=True, type=support_threshold)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--alphabet", help="comma separated types (default: types of the sample)")

    p = add("discover", cmd_discover, "discover a descriptive query")
    p.add_argument("traces")
    p.add_argument("--supp", required=True, type=support_threshold)
    p.add_argument("--len", required=True, type=int)
    p.add_argument("--window", required=True, type=_window)
    p.add_argument("--gaps", help="local gaps, e.g. '0:0, 0:inf'")
    p.add_argument("--constraints", help="generalised constraints, e.g. '1+3:7..7'")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--order", default="first", help="'first' or 'seed:N'")
    p.add_argument("--alphabet", help="comma separated types (default: types of the sample)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
