"""Exact matching of queries against traces, and sample support."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .core import INF, Query, QueryError, Variable, check_query
from .difference import DifferenceSystem


@dataclass(frozen=True)
class Witness:
    """A variable assignment, the type picked at each typeset position and the
    embedding (1-based trace positions)."""

    assignment: dict
    choice: dict
    embedding: tuple


def embedding_satisfies(e, q: Query) -> bool:
    """Check the window and every gap constraint for a 1-based embedding."""
    e = tuple(e)
    if len(e) != q.length:
        raise QueryError(f"embedding has {len(e)} positions, query has {q.length}")
    if any(b <= a for a, b in zip(e, e[1:])):
        return False
    if q.window != INF and e[-1] - e[0] + 1 > q.window:
        return False
    for c in q.constraints:
        gap = e[c.j + c.r - 1] - 1 - e[c.j - 1]
        if not c.cmin <= gap <= c.cmax:
            return False
    return True


@lru_cache(maxsize=512)
def _system(q: Query) -> DifferenceSystem:
    return DifferenceSystem(q)


def find_witness(q: Query, t) -> Optional[Witness]:
    """Return the witness with the lexicographically least embedding, or None."""
    check_query(q)
    t = tuple(t)
    n, ell = len(t), q.length
    system = _system(q)
    if not system.feasible or ell > n:
        return None
    up = system.upper
    symbols = q.symbols
    pos = [0] * ell
    binding: dict = {}

    def extend(i):
        lo = 0
        hi = n - 1 + up[ell - 1][i]
        for a in range(i):
            lo = max(lo, pos[a] - up[i][a])
            hi = min(hi, pos[a] + up[a][i])
        sym = symbols[i]
        is_var = isinstance(sym, Variable)
        for p in range(lo, hi + 1):
            ty = t[p]
            bound = binding.get(sym) if is_var else None
            if is_var:
                if bound is not None and bound != ty:
                    continue
            elif ty not in sym:
                continue
            pos[i] = p
            fresh = is_var and bound is None
            if fresh:
                binding[sym] = ty
            if i + 1 == ell or extend(i + 1):
                return True
            if fresh:
                del binding[sym]
        return False

    if not extend(0):
        return None
    embedding = tuple(p + 1 for p in pos)
    choice = {i + 1: t[pos[i]] for i, s in enumerate(symbols) if not isinstance(s, Variable)}
    return Witness(dict(binding), choice, embedding)


def matches(q: Query, t) -> bool:
    return find_witness(q, t) is not None


def support(q: Query, sample) -> Fraction:
    """Exact fraction of sample traces matching ``q``."""
    sample = tuple(sample)
    if not sample:
        raise ValueError("empty sample")
    return Fraction(sum(1 for t in sample if matches(q, t)), len(sample))
