"""Text formats for traces and queries, and JSON result reports.

Trace files hold one trace per line, types separated by whitespace; blank
lines and ``#`` comments are skipped.  Query files are line oriented::

    string: ?x {a,b} ?x c
    window: 10
    gaps: 0:1, 2:inf, 0:5
    constraints: 1+3:7..7, 2+3:6..6

``gaps`` (one ``min:max`` pair per adjacent pair of positions) and
``constraints`` (``j+r:min..max``) are both optional and conjoined.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction

from .core import (
    RESERVED,
    GapConstraint,
    Query,
    Variable,
    canonical_form,
    check_query,
    constraint_key,
    typeset,
)

INF = math.inf


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse_traces(text: str) -> tuple:
    traces = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not line or stripped.startswith("#"):
            continue
        if not stripped:
            raise ParseError("trace line holds only whitespace", lineno)
        for m in re.finditer(r"\S+", line):
            token = m.group()
            for offset, ch in enumerate(token):
                if ch in RESERVED:
                    raise ParseError(f"reserved character {ch!r} in type", lineno, m.start() + offset + 1)
        traces.append(tuple(line.split()))
    if not traces:
        raise ParseError("empty sample")
    return tuple(traces)


def serialize_traces(sample) -> str:
    return "".join(" ".join(t) + "\n" for t in sample)


def _parse_symbol(token: str):
    if token.startswith("?"):
        return Variable(token[1:])
    if token.startswith("{"):
        if not token.endswith("}"):
            raise ValueError(f"unterminated typeset {token!r}")
        members = [m.strip() for m in token[1:-1].split(",")]
        if not members or any(not m for m in members):
            raise ValueError(f"empty member in typeset {token!r}")
        return typeset(*members)
    return typeset(token)


def parse_symbols(text: str) -> tuple:
    # typesets may contain spaces after commas: "{a, b}"
    tokens = re.findall(r"\{[^}]*\}?|[^\s{]+", text)
    return tuple(_parse_symbol(tok.replace(" ", "")) for tok in tokens)


def _parse_bound(text: str):
    text = text.strip()
    if text in ("inf", "∞"):
        return INF
    if not text.isdigit():
        raise ValueError(f"expected a non-negative integer or 'inf', got {text!r}")
    return int(text)


def _split_list(text: str):
    return [item.strip() for item in text.split(",") if item.strip()]


def parse_gaps(text: str) -> list:
    out = []
    for item in _split_list(text):
        lo, sep, hi = item.partition(":")
        if not sep:
            raise ValueError(f"gap {item!r} is not of the form min:max")
        out.append((_parse_bound(lo), _parse_bound(hi)))
    return out


_CONSTRAINT = re.compile(r"^(\d+)\s*\+\s*(\d+)\s*:\s*(\d+)\s*\.\.\s*(\d+|inf|∞)$")


def parse_constraints(text: str) -> list:
    out = []
    for item in _split_list(text):
        m = _CONSTRAINT.match(item)
        if not m:
            raise ValueError(f"constraint {item!r} is not of the form j+r:min..max")
        j, r, lo, hi = m.groups()
        out.append(GapConstraint(int(j), int(r), int(lo), _parse_bound(hi)))
    return out


def parse_query(text: str) -> Query:
    sections = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head, sep, body = stripped.partition(":")
        head = head.strip().lower()
        if not sep or head not in ("string", "window", "gaps", "constraints"):
            raise ParseError(f"unknown section {head!r}", lineno)
        if head in sections:
            raise ParseError(f"duplicate section {head!r}", lineno)
        sections[head] = (lineno, body.strip())
    if "string" not in sections:
        raise ParseError("missing 'string:' section")

    def section(name, parse, default):
        if name not in sections:
            return default
        lineno, body = sections[name]
        try:
            return parse(body)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from exc

    symbols = section("string", parse_symbols, ())
    if not symbols:
        raise ParseError("empty query string", sections["string"][0])
    window = section("window", _parse_bound, INF)
    gaps = section("gaps", parse_gaps, None)
    constraints = section("constraints", parse_constraints, [])
    if gaps is not None:
        if len(gaps) != len(symbols) - 1:
            raise ParseError(f"gaps: expected {len(symbols) - 1} entries, got {len(gaps)}",
                             sections["gaps"][0])
        try:
            constraints += [GapConstraint(i, 1, lo, hi) for i, (lo, hi) in enumerate(gaps, 1)]
        except ValueError as exc:
            raise ParseError(str(exc), sections["gaps"][0]) from exc
    q = Query(symbols, window, tuple(constraints))
    try:
        check_query(q)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return q


def _bound_text(x) -> str:
    return "inf" if x == INF else str(x)


def format_symbol(sym) -> str:
    if isinstance(sym, Variable):
        return str(sym)
    members = sorted(sym)
    return members[0] if len(members) == 1 else "{" + ",".join(members) + "}"


def _is_gap_tuple(q: Query) -> bool:
    return (
        q.length > 1
        and len(q.constraints) == q.length - 1
        and all(c.r == 1 and c.j == i for i, c in enumerate(q.constraints, 1))
    )


def serialize_query(q: Query, canonical: bool = True) -> str:
    if canonical:
        q = canonical_form(q)
    lines = ["string: " + " ".join(format_symbol(s) for s in q.symbols),
             "window: " + _bound_text(q.window)]
    if _is_gap_tuple(q):
        lines.append("gaps: " + ", ".join(f"{c.cmin}:{_bound_text(c.cmax)}" for c in q.constraints))
    elif q.constraints:
        lines.append("constraints: " + ", ".join(str(c) for c in sorted(q.constraints, key=constraint_key)))
    return "\n".join(lines)


def witness_json(w) -> dict:
    return {
        "embedding": list(w.embedding),
        "assignment": {str(v): t for v, t in sorted(w.assignment.items())},
        "choice": {str(i): t for i, t in sorted(w.choice.items())},
    }


def write_report(command: str, inputs: dict, verdict: str, witness=None,
                 support=None, query=None, **extra) -> str:
    """Render a result report as JSON with a fixed key order."""
    report = {"command": command, "inputs": inputs, "verdict": verdict}
    if witness is not None:
        report["witness"] = witness_json(witness)
    if support is not None:
        support = Fraction(support)
        report["support"] = {"fraction": f"{support.numerator}/{support.denominator}",
                             "value": float(support)}
    if query is not None:
        report["query"] = serialize_query(query)
    report.update(extra)
    return json.dumps(report, ensure_ascii=False, indent=2)
