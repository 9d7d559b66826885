"""Seeded random instance generators shared by the property and acceptance suites."""

import random

from tracequery import GapConstraint, Query, Variable
from tracequery.core import INF

TYPES = "abc"


def random_symbol(rng, alphabet, k, nvars=3):
    roll = rng.random()
    if roll < 0.4:
        return Variable(f"x{rng.randint(1, nvars)}")
    size = rng.randint(1, min(k, len(alphabet)))
    return frozenset(rng.sample(alphabet, size))


def random_local_gaps(rng, ell, density=0.6, max_gap=3):
    out = []
    for j in range(1, ell):
        if rng.random() < density:
            lo = rng.randint(0, max_gap)
            hi = INF if rng.random() < 0.3 else lo + rng.randint(0, max_gap)
            out.append(GapConstraint(j, 1, lo, hi))
    return tuple(out)


def random_generalised(rng, ell, count, max_gap=6):
    out = []
    for _ in range(count):
        if ell < 2:
            break
        j = rng.randint(1, ell - 1)
        r = rng.randint(1, ell - j)
        lo = rng.randint(0, max_gap)
        hi = INF if rng.random() < 0.25 else lo + rng.randint(0, max_gap)
        out.append(GapConstraint(j, r, lo, hi))
    return tuple(out)


def random_window(rng, ell, max_window, inf_rate=0.2):
    if rng.random() < inf_rate:
        return INF
    return rng.randint(ell, max(ell, max_window))


def random_query(rng, max_len=4, alphabet=TYPES, k=2, max_window=8, generalised=None):
    ell = rng.randint(1, max_len)
    symbols = tuple(random_symbol(rng, alphabet, k) for _ in range(ell))
    if generalised is None:
        generalised = rng.random() < 0.5
    if generalised:
        cons = random_generalised(rng, ell, rng.randint(0, 3))
    else:
        cons = random_local_gaps(rng, ell)
    return Query(symbols, random_window(rng, ell, max_window), cons)


def random_trace(rng, alphabet=TYPES, max_len=8, min_len=1):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
