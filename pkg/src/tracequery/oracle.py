"""Brute-force reference implementations.

Everything here works straight from the definitions, by enumeration, and
deliberately avoids the matcher, analysis and discovery modules (and the
helpers in ``core``) so that it can serve as an independent check.  Only
the plain data types are shared.  These routines are exponential and meant
for desk-scale inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .core import GapConstraint, Query, Variable

_INF = math.inf


def _window_and_gaps_ok(e, window, constraints):
    if window != _INF and e[-1] - e[0] + 1 > window:
        return False
    for c in constraints:
        gap = e[c.j + c.r - 1] - e[c.j - 1] - 1
        if gap < c.cmin or gap > c.cmax:
            return False
    return True


@lru_cache(maxsize=4096)
def _embeddings(length, window, constraints, n):
    return tuple(e for e in combinations(range(1, n + 1), length)
                 if _window_and_gaps_ok(e, window, constraints))


def _assignable(symbols, letters):
    seen = {}
    for sym, letter in zip(symbols, letters):
        if isinstance(sym, Variable):
            if seen.setdefault(sym, letter) != letter:
                return False
        elif letter not in sym:
            return False
    return True


def brute_matches(q: Query, t) -> bool:
    """Try every embedding of the query string into the trace."""
    t = tuple(t)
    if q.length > len(t):
        return False
    for e in _embeddings(q.length, q.window, q.constraints, len(t)):
        if _assignable(q.symbols, [t[i - 1] for i in e]):
            return True
    return False


def _query_types(q):
    out = set()
    for s in q.symbols:
        if not isinstance(s, Variable):
            out |= s
    return out


def _fresh(taken, n=1):
    out, i = [], 0
    while len(out) < n:
        cand = f"_z{i}"
        if cand not in taken:
            out.append(cand)
        i += 1
    return out


def brute_satisfiable(q: Query, bound=None) -> bool:
    """Search all embeddings that start at position 1 and end within the bound.

    Each embedding is turned into a concrete trace (typesets take their
    least member, variables and gaps a fresh type) which is then matched
    with :func:`brute_matches`.  Any model contains such a trace as a
    factor up to the choice of letters, so this is complete.
    """
    limit = q.window if q.window != _INF else bound
    if limit is None:
        raise ValueError("bound required for an infinite window")
    fresh = _fresh(_query_types(q))[0]
    for n in range(q.length, int(limit) + 1):
        for e in combinations(range(1, n + 1), q.length):
            if e[0] != 1 or e[-1] != n:
                continue
            trace = [fresh] * n
            for pos, sym in zip(e, q.symbols):
                trace[pos - 1] = fresh if isinstance(sym, Variable) else min(sym)
            if brute_matches(q, trace):
                return True
    return False


def lemma5_check(q: Query) -> bool:
    """Chain criterion for compatible constraints.

    Chains are connected runs of constraints taken from the query's
    constraints plus the trivial ``(0, inf, 1)`` constraint on every
    adjacent pair.  The query is rejected if the minimal gap total of some
    chain pushes the length past the window, or exceeds the maximal gap
    total of another chain over the same span.
    """
    ell = q.length
    cons = list(q.constraints) + [GapConstraint(j, 1, 0, _INF) for j in range(1, ell)]
    by_start = {}
    for c in cons:
        by_start.setdefault(c.j, []).append(c)

    # lowest[a][b]: largest minimal-extra total over chains a -> b;
    # tightest[a][b]: smallest maximal-extra total over chains a -> b.
    lowest = {}
    tightest = {}
    for a in range(ell, 0, -1):
        lowest[a] = {a: 0}
        tightest[a] = {a: 0}
        for c in by_start.get(a, []):
            lo_step = c.cmin - c.r + 1
            hi_step = c.cmax - c.r + 1
            for b, v in lowest[c.end].items():
                if lowest[a].get(b, -_INF) < lo_step + v:
                    lowest[a][b] = lo_step + v
            for b, v in tightest[c.end].items():
                if tightest[a].get(b, _INF) > hi_step + v:
                    tightest[a][b] = hi_step + v
    for a in lowest:
        for b, low in lowest[a].items():
            if b == a:
                continue
            if ell + low > q.window:
                return False
            if low > tightest[a].get(b, _INF):
                return False
    return True


def _all_traces(alphabet, max_len):
    alphabet = sorted(alphabet)
    for n in range(1, max_len + 1):
        yield from product(alphabet, repeat=n)


def brute_model_set(q: Query, alphabet, max_len: int) -> set:
    """All traces over ``alphabet`` of length at most ``max_len`` matching ``q``."""
    return {t for t in _all_traces(alphabet, max_len) if brute_matches(q, t)}


def _traces_up_to_renaming(named, others, max_len):
    """Traces over ``named`` plus the interchangeable ``others``, one per
    renaming class of the ``others`` (introduced in first-use order)."""
    named = sorted(named)
    others = sorted(others)

    def grow(prefix, used):
        yield tuple(prefix)
        if len(prefix) == max_len:
            return
        for a in named:
            prefix.append(a)
            yield from grow(prefix, used)
            prefix.pop()
        if used < len(others):
            for idx in range(used + 1):
                prefix.append(others[idx])
                yield from grow(prefix, max(used, idx + 1))
                prefix.pop()
        else:
            for a in others:
                prefix.append(a)
                yield from grow(prefix, used)
                prefix.pop()

    for t in grow([], 0):
        if t:
            yield t


def brute_contained(q: Query, q_prime: Query, alphabet) -> bool:
    """Compare model sets over ``alphabet`` up to traces of window length.

    A counterexample trace always has a counterexample factor no longer
    than the window.  Types mentioned by neither query are interchangeable,
    so only one trace per renaming of them is examined.
    """
    if q.window == _INF or q_prime.window == _INF:
        raise ValueError("bound required for an infinite window")
    if (q.length, q.window, q.constraints) != (q_prime.length, q_prime.window, q_prime.constraints):
        raise ValueError("queries must share length, window and constraints")
    alphabet = set(alphabet)
    named = (_query_types(q) | _query_types(q_prime)) & alphabet
    others = alphabet - named
    for t in _traces_up_to_renaming(named, others, int(q.window)):
        if brute_matches(q, t) and not brute_matches(q_prime, t):
            return False
    return True


def _typesets_of(delta):
    if hasattr(delta, "layers"):
        return set().union(*delta.layers.values()) if delta.layers else set()
    return {frozenset(d) for d in delta}


def enumerate_queries(params, delta):
    """Every query with the given parameters over ``delta``'s typesets, one per
    isomorphism class (variables numbered in order of first use)."""
    typesets = sorted(_typesets_of(delta), key=lambda d: (len(d), sorted(d)))
    ell = params.length
    constraints = tuple(params.constraints)

    def grow(prefix, nvars):
        if len(prefix) == ell:
            yield Query(tuple(prefix), params.window, constraints)
            return
        for d in typesets:
            prefix.append(d)
            yield from grow(prefix, nvars)
            prefix.pop()
        for v in range(1, nvars + 2):
            prefix.append(Variable(f"v{v}"))
            yield from grow(prefix, max(nvars, v))
            prefix.pop()

    yield from grow([], 0)


def _canonical_key(q):
    names = {}
    key = []
    for s in q.symbols:
        if isinstance(s, Variable):
            key.append(("var", names.setdefault(s, len(names))))
        else:
            key.append(("set", tuple(sorted(s))))
    return tuple(key)


def _has_hom(src: Query, dst: Query) -> bool:
    image = {}
    occurrences = {}
    for a, b in zip(src.symbols, dst.symbols):
        if isinstance(a, Variable):
            if a in image and image[a] != b:
                return False
            image[a] = b
            occurrences[a] = occurrences.get(a, 0) + 1
        elif isinstance(b, Variable) or not (b and b <= a):
            return False
    return all(n == 1 or isinstance(image[a], Variable) or len(image[a]) == 1
               for a, n in occurrences.items())


def _support(q, sample):
    return Fraction(sum(1 for t in sample if brute_matches(q, t)), len(sample))


def is_descriptive(q: Query, sample, threshold, params, alphabet=None) -> bool:
    """Support reaches the threshold and no strictly more specific query with
    the same parameters does."""
    sample = [tuple(t) for t in sample]
    theta = Fraction(threshold)
    if _support(q, sample) < theta:
        return False
    if alphabet is None:
        alphabet = {a for t in sample for a in t}
    delta = []
    for size in range(1, params.k + 1):
        for combo in combinations(sorted(alphabet), size):
            d = frozenset(combo)
            if Fraction(sum(1 for t in sample if d & set(t)), len(sample)) >= theta:
                delta.append(d)
    own = _canonical_key(q)
    for cand in enumerate_queries(params, delta):
        if _canonical_key(cand) == own or not _has_hom(q, cand):
            continue
        if _support(cand, sample) >= theta:
            return False
    return True
