"""Static analysis of queries: satisfiability, minimal matching traces,
homomorphisms, containment and equivalence."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .core import (
    QueryClass,
    Query,
    QueryError,
    Variable,
    canonical_form,
    check_query,
    check_type_symbol,
    classify,
)
from .difference import DifferenceSystem, rightmost


class IncomparableQueries(QueryError):
    """The two queries do not share string length, window and constraints."""


class AlphabetTooSmall(QueryError):
    """The alphabet does not meet the bound under which containment coincides
    with the existence of a homomorphism."""


class HeuristicContainmentWarning(UserWarning):
    pass


def is_satisfiable(q: Query) -> bool:
    check_query(q)
    return DifferenceSystem(q).feasible


def min_match_length(q: Query, ignore_window: bool = False) -> Optional[int]:
    """Length of the shortest traces matching ``q`` (None if there are none)."""
    check_query(q)
    span = DifferenceSystem(q, ignore_window).min_span()
    return None if span is None else span + 1


def construct_min_trace(q: Query, filler: str, var_fill: str,
                        ignore_window: bool = False, align: str = "left"):
    """Build a shortest trace matching ``q``.

    Query positions are placed as early (``align="left"``) or as late
    (``align="right"``) as the constraints allow; gaps are filled with
    ``filler``, typesets resolve to their least member and variables to
    ``var_fill``.
    """
    check_query(q)
    check_type_symbol(filler)
    check_type_symbol(var_fill)
    if align == "left":
        offsets = DifferenceSystem(q, ignore_window).leftmost()
    elif align == "right":
        offsets = rightmost(q, ignore_window)
    else:
        raise ValueError(f"align must be 'left' or 'right', got {align!r}")
    if offsets is None:
        return None
    trace = [filler] * (offsets[-1] + 1)
    for off, sym in zip(offsets, q.symbols):
        trace[off] = var_fill if isinstance(sym, Variable) else min(sym)
    return tuple(trace)


@dataclass(frozen=True)
class Homomorphism:
    """Images of the source variables and of each source typeset position."""

    variables: dict
    typesets: dict

    def apply(self, symbols) -> tuple:
        out = []
        for i, s in enumerate(symbols, 1):
            if isinstance(s, Variable):
                out.append(self.variables.get(s, s))
            else:
                out.append(self.typesets.get(i, s))
        return tuple(out)


def _require_same_parameters(a: Query, b: Query):
    if a.parameters != b.parameters:
        raise IncomparableQueries("incomparable parameters: queries differ in length, window or constraints")


def find_homomorphism(q_from: Query, q_to: Query) -> Optional[Homomorphism]:
    """Position-wise substitution mapping ``q_from``'s string onto ``q_to``'s.

    A typeset may only shrink to a non-empty subset, all occurrences of a
    variable must map to the same symbol, and a variable occurring at least
    twice may map to a typeset only if that typeset is a singleton.
    """
    _require_same_parameters(q_from, q_to)
    images: dict = {}
    counts: dict = {}
    sets = {}
    for i, (src, dst) in enumerate(zip(q_from.symbols, q_to.symbols), 1):
        if isinstance(src, Variable):
            if images.setdefault(src, dst) != dst:
                return None
            counts[src] = counts.get(src, 0) + 1
        else:
            if isinstance(dst, Variable) or not dst or not dst <= src:
                return None
            sets[i] = dst
    for var, img in images.items():
        if counts[var] > 1 and not isinstance(img, Variable) and len(img) != 1:
            return None
    return Homomorphism(images, sets)


def sufficient_alphabet_size(q: Query) -> int:
    """Alphabet size from which containment and homomorphisms coincide."""
    if not is_satisfiable(q):
        raise QueryError("sufficient alphabet size is only defined for satisfiable queries")
    ntypes = len(q.types)
    local_bound = max(2, ntypes)
    cls = classify(q)
    if cls in (QueryClass.SWG, QueryClass.DSWG):
        return local_bound
    # a one-type alphabet cannot tell variables apart, whatever the gaps
    return max(local_bound, min_match_length(q) - q.length + ntypes + 1)


def check_alphabet(q: Query, q_prime: Query, alphabet) -> list:
    """Reasons why ``alphabet`` is too small for deciding ``q ⊑ q_prime``."""
    alphabet = frozenset(alphabet)
    problems = []
    missing = (q.types | q_prime.types) - alphabet
    if missing:
        problems.append(f"alphabet lacks query types {sorted(missing)}")
    need = sufficient_alphabet_size(q)
    if len(alphabet) < need:
        problems.append(f"alphabet has {len(alphabet)} types, needs at least {need}")
    for ts in q.typesets | q_prime.typesets:
        if len(ts) > 1 and ts >= alphabet:
            problems.append(f"typeset {{{','.join(sorted(ts))}}} covers the whole alphabet")
    return problems


def contained_in(q: Query, q_prime: Query, alphabet, force: bool = False) -> bool:
    """Decide whether every trace over ``alphabet`` matching ``q`` matches ``q_prime``.

    Decided syntactically: containment holds iff ``q_prime`` maps
    homomorphically onto ``q``.  That equivalence needs a large enough
    alphabet; below the bound an ``AlphabetTooSmall`` is raised unless
    ``force`` is set, in which case the answer carries no guarantee.
    """
    _require_same_parameters(q, q_prime)
    check_query(q)
    for query in (q, q_prime):
        if not is_satisfiable(query):
            raise QueryError("containment is only decided for satisfiable queries")
    problems = check_alphabet(q, q_prime, alphabet)
    if problems and not force:
        raise AlphabetTooSmall("alphabet below sufficiency bound: " + "; ".join(problems))
    if QueryClass.GENERAL in (classify(q), classify(q_prime)):
        warnings.warn("containment for queries mixing typesets and ranged constraints is heuristic",
                      HeuristicContainmentWarning, stacklevel=2)
    return find_homomorphism(q_prime, q) is not None


def equivalent(q: Query, q_prime: Query) -> bool:
    """Isomorphism up to variable renaming."""
    _require_same_parameters(q, q_prime)
    return canonical_form(q) == canonical_form(q_prime)
