"""Domain model: traces, samples, query symbols, gap constraints and queries.

Positions are 1-based throughout the public surface (query positions,
constraint anchors and embeddings), matching the usual notation for
subsequence embeddings.  Infinity (for windows and gap upper bounds) is
``math.inf``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

INF = math.inf

RESERVED = frozenset("{}?;,:#")


class QueryError(ValueError):
    """Raised when an operation receives a query violating its invariants."""


def check_type_symbol(token: str) -> str:
    if not isinstance(token, str) or not token:
        raise ValueError("type symbol must be a non-empty string")
    for ch in token:
        if ch.isspace():
            raise ValueError(f"type symbol {token!r} contains whitespace")
        if ch in RESERVED:
            raise ValueError(f"type symbol {token!r} contains reserved character {ch!r}")
    return token


@dataclass(frozen=True, order=True)
class Variable:
    """A wildcard; externally written ``?name``."""

    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("variable name must be non-empty")
        if any(ch.isspace() or ch in RESERVED for ch in self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self):
        return "?" + self.name


Typeset = frozenset
Symbol = Union[Variable, frozenset]
Trace = tuple
Sample = tuple


def typeset(*types: str) -> frozenset:
    return frozenset(check_type_symbol(t) for t in types)


def make_trace(items: Union[str, Iterable[str]]) -> tuple[str, ...]:
    """Build a trace; a string is split on whitespace."""
    if isinstance(items, str):
        items = items.split()
    result = tuple(check_type_symbol(t) for t in items)
    if not result:
        raise ValueError("a trace must contain at least one type")
    return result


def make_sample(traces: Iterable[Union[str, Iterable[str]]]) -> tuple[tuple[str, ...], ...]:
    result = tuple(make_trace(t) for t in traces)
    if not result:
        raise ValueError("empty sample")
    return result


def sample_alphabet(sample: Sequence[Sequence[str]]) -> frozenset:
    return frozenset(t for trace in sample for t in trace)


def support_threshold(value) -> Fraction:
    """Parse a support threshold (decimal text, fraction text or number)."""
    if isinstance(value, float):
        value = repr(value)
    try:
        theta = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"invalid support threshold {value!r}") from exc
    if not 0 < theta <= 1:
        raise ValueError(f"support threshold must lie in (0, 1], got {theta}")
    return theta


def _is_inf(x) -> bool:
    return isinstance(x, float) and math.isinf(x) and x > 0


def _check_bound(value, name, allow_inf):
    if allow_inf and _is_inf(value):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int{' or math.inf' if allow_inf else ''}, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class GapConstraint:
    """``cmin <= e(j + r) - 1 - e(j) <= cmax`` for the gap spanning positions j..j+r."""

    j: int
    r: int
    cmin: int
    cmax: Union[int, float] = INF

    def __post_init__(self):
        _check_bound(self.j, "j", False)
        _check_bound(self.r, "r", False)
        _check_bound(self.cmin, "cmin", False)
        _check_bound(self.cmax, "cmax", True)
        if self.j < 1:
            raise ValueError("constraint anchor j must be >= 1")
        if self.r < 1:
            raise ValueError("constraint range r must be >= 1")
        if self.cmin < 0:
            raise ValueError("cmin must be non-negative")
        if self.cmin > self.cmax:
            raise ValueError(f"cmin {self.cmin} exceeds cmax {self.cmax}")

    @property
    def end(self) -> int:
        return self.j + self.r

    def __str__(self):
        cmax = "inf" if _is_inf(self.cmax) else str(self.cmax)
        return f"{self.j}+{self.r}:{self.cmin}..{cmax}"


def local_gaps(gaps: Sequence[tuple]) -> tuple[GapConstraint, ...]:
    """Turn a tuple of local (cmin, cmax) pairs into range-1 constraints."""
    return tuple(GapConstraint(i + 1, 1, lo, hi) for i, (lo, hi) in enumerate(gaps))


def _coerce_symbol(sym) -> Symbol:
    if isinstance(sym, Variable):
        return sym
    if isinstance(sym, str):
        return typeset(sym)
    if isinstance(sym, (set, frozenset, list, tuple)):
        return frozenset(check_type_symbol(t) for t in sym)
    raise TypeError(f"not a query symbol: {sym!r}")


class QueryClass(enum.Enum):
    SWG = "swg"
    SWGG = "swgg"
    DSWG = "dswg"
    GENERAL = "general"


@dataclass(frozen=True)
class Query:
    """A query string with a global window and a multiset of gap constraints.

    Constraints are stored sorted, so equality compares them as a multiset.
    Construction does not check the cross-field rules (window vs. length,
    constraint ranges); use :func:`validate_query` for that.
    """

    symbols: tuple
    window: Union[int, float] = INF
    constraints: tuple = field(default=())

    def __post_init__(self):
        symbols = tuple(_coerce_symbol(s) for s in self.symbols)
        object.__setattr__(self, "symbols", symbols)
        _check_bound(self.window, "window", True)
        constraints = []
        for c in self.constraints:
            if not isinstance(c, GapConstraint):
                raise TypeError(f"not a GapConstraint: {c!r}")
            constraints.append(c)
        object.__setattr__(self, "constraints", tuple(sorted(constraints, key=constraint_key)))

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def variables(self) -> frozenset:
        return frozenset(s for s in self.symbols if isinstance(s, Variable))

    @property
    def typesets(self) -> frozenset:
        return frozenset(s for s in self.symbols if not isinstance(s, Variable))

    @property
    def types(self) -> frozenset:
        return frozenset().union(*self.typesets) if self.typesets else frozenset()

    @property
    def k(self) -> int:
        """Largest typeset cardinality (0 without typesets)."""
        return max((len(s) for s in self.typesets), default=0)

    @property
    def parameters(self) -> tuple:
        return (self.length, self.window, self.constraints)

    @property
    def query_class(self) -> QueryClass:
        return classify(self)

    def with_symbols(self, symbols) -> "Query":
        return Query(tuple(symbols), self.window, self.constraints)

    def __str__(self):
        from .io import serialize_query

        return serialize_query(self, canonical=False)


def constraint_key(c: GapConstraint):
    return (c.j, c.r, c.cmin, c.cmax)


def make_query(string: Union[str, Sequence], window=INF, gaps=None, constraints=()) -> Query:
    """Convenience constructor.

    ``string`` is either a sequence of symbols or whitespace separated text
    using ``?x`` for variables, ``{a,b}`` for typesets and bare tokens for
    single types.  ``gaps`` is a tuple of local ``(cmin, cmax)`` pairs.
    """
    if isinstance(string, str):
        from .io import parse_symbols

        symbols = parse_symbols(string)
    else:
        symbols = tuple(string)
    cons = list(constraints)
    if gaps is not None:
        cons.extend(local_gaps(gaps))
    return Query(symbols, window, tuple(cons))


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str

    def __str__(self):
        return f"{self.field}: {self.rule}"


def validate_query(q: Query) -> list:
    """Report every broken query invariant; never raises."""
    out = []
    n = q.length
    if n == 0:
        out.append(Violation("symbols", "query string must be non-empty"))
    for i, s in enumerate(q.symbols, 1):
        if not isinstance(s, Variable) and not s:
            out.append(Violation("symbols", f"typeset at position {i} is empty"))
    if q.window < 1:
        out.append(Violation("window", "window must be positive"))
    if q.window < n:
        out.append(Violation("window", "window < ℓ"))
    for c in q.constraints:
        if c.j > n - 1:
            out.append(Violation("constraints", f"constraint {c}: j not in [ℓ-1]"))
        elif c.j + c.r > n:
            out.append(Violation("constraints", f"constraint {c}: j + r > ℓ"))
    return out


def check_query(q: Query) -> Query:
    problems = validate_query(q)
    if problems:
        raise QueryError("invalid query: " + "; ".join(map(str, problems)))
    return q


def lint_query(q: Query, alphabet: Iterable[str]) -> list:
    """Warnings that do not make a query invalid."""
    alphabet = frozenset(alphabet)
    out = []
    for i, s in enumerate(q.symbols, 1):
        if not isinstance(s, Variable) and len(s) > 1 and s >= alphabet:
            out.append(f"typeset at position {i} covers the whole alphabet; a variable is equivalent")
    return out


def classify(q: Query) -> QueryClass:
    singletons = all(isinstance(s, Variable) or len(s) == 1 for s in q.symbols)
    anchors = [c.j for c in q.constraints]
    local = all(c.r == 1 for c in q.constraints) and len(anchors) == len(set(anchors))
    if singletons and local:
        return QueryClass.SWG
    if singletons:
        return QueryClass.SWGG
    if local:
        return QueryClass.DSWG
    return QueryClass.GENERAL


def variables_in_order(q: Query) -> list:
    seen = []
    for s in q.symbols:
        if isinstance(s, Variable) and s not in seen:
            seen.append(s)
    return seen


def positions_of(q: Query, z: Symbol) -> frozenset:
    z = _coerce_symbol(z)
    return frozenset(i for i, s in enumerate(q.symbols, 1) if s == z)


def replace_symbol(q: Query, x: Variable, y: Symbol) -> Query:
    """Replace every occurrence of variable ``x`` by ``y``."""
    y = _coerce_symbol(y)
    if x not in q.variables:
        raise QueryError(f"unknown variable {x}")
    return q.with_symbols(y if s == x else s for s in q.symbols)


def canonical_form(q: Query) -> Query:
    renaming = {}
    symbols = []
    for s in q.symbols:
        if isinstance(s, Variable):
            if s not in renaming:
                renaming[s] = Variable(f"v{len(renaming) + 1}")
            symbols.append(renaming[s])
        else:
            symbols.append(s)
    return q.with_symbols(symbols)


def sorted_typeset(ts: frozenset) -> tuple:
    return tuple(sorted(ts))
