"""Discovery of descriptive queries from a sample of traces."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .core import (
    INF,
    Query,
    QueryError,
    Variable,
    check_query,
    make_sample,
    replace_symbol,
    sample_alphabet,
    support_threshold,
)
from .difference import DifferenceSystem
from .matcher import support


class UnsatisfiableConstraints(QueryError):
    """The window and gap constraints admit no embedding at all."""


@dataclass(frozen=True)
class NoDescriptiveQuery:
    """Typed outcome: even the most general query misses the threshold."""

    support: Fraction

    def __bool__(self):
        return False


def typeset_support(delta, sample) -> Fraction:
    """Fraction of traces containing at least one member of ``delta``."""
    delta = frozenset(delta)
    sample = tuple(sample)
    if not delta:
        raise ValueError("empty typeset")
    if not sample:
        raise ValueError("empty sample")
    hits = sum(1 for t in sample if not delta.isdisjoint(t))
    return Fraction(hits, len(sample))


@dataclass(frozen=True)
class DeltaFamily:
    """Support-satisfying typesets, grouped by cardinality."""

    layers: dict

    def layer(self, i: int) -> list:
        """Typesets of size ``i`` in lexicographic order of sorted members."""
        return sorted(self.layers.get(i, ()), key=lambda ts: tuple(sorted(ts)))

    @property
    def k(self) -> int:
        return max(self.layers, default=0)

    def all(self) -> frozenset:
        return frozenset().union(*self.layers.values()) if self.layers else frozenset()


def max_k(alphabet) -> int:
    # a one-type alphabet still admits singleton typesets
    return max(1, len(alphabet) - 1)


def compute_delta(sample, threshold, k: int, alphabet=None) -> DeltaFamily:
    """Typesets of size at most ``k`` whose support reaches ``threshold``.

    The lattice of subsets is walked top-down starting at size ``k``; a
    failing typeset prunes all of its subsets, since shrinking a typeset can
    only lower its support.  ``alphabet`` defaults to the sample's types.
    """
    sample = tuple(sample)
    theta = support_threshold(threshold)
    gamma = sorted(sample_alphabet(sample) if alphabet is None else frozenset(alphabet))
    if not 1 <= k <= max_k(gamma):
        raise ValueError(f"k must lie in [1, {max_k(gamma)}] for an alphabet of {len(gamma)} types")
    layers = {}
    pruned: set = set()
    for size in range(k, 0, -1):
        passing = set()
        for combo in combinations(gamma, size):
            ts = frozenset(combo)
            if ts in pruned:
                pruned.update(frozenset(c) for c in combinations(combo, size - 1) if c)
                continue
            if typeset_support(ts, sample) >= theta:
                passing.add(ts)
            else:
                pruned.update(frozenset(c) for c in combinations(combo, size - 1) if c)
        layers[size] = frozenset(passing)
    return DeltaFamily(layers)


@dataclass(frozen=True)
class DiscoveryParams:
    length: int
    window: Union[int, float] = INF
    constraints: tuple = ()
    k: int = 1
    order: str = "first"

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))

    def validate(self):
        if self.length < 1:
            raise QueryError("string length must be positive")
        if self.k < 1:
            raise QueryError("k must be at least 1")
        check_query(most_general_query(self, checked=False))
        anchors = [c.j for c in self.constraints]
        generalised = any(c.r > 1 for c in self.constraints) or len(anchors) != len(set(anchors))
        if generalised and self.k != 1:
            raise QueryError("typesets (k > 1) are only supported with local gap constraints")
        _order_rng(self.order)
        return self


def _order_rng(order) -> Optional[random.Random]:
    if order == "first":
        return None
    if isinstance(order, int):
        return random.Random(order)
    if isinstance(order, str) and order.startswith("seed:"):
        try:
            return random.Random(int(order[5:]))
        except ValueError:
            pass
    raise QueryError(f"order must be 'first' or 'seed:N', got {order!r}")


def most_general_query(p: DiscoveryParams, checked: bool = True) -> Query:
    q = Query(tuple(Variable(f"x{i}") for i in range(1, p.length + 1)), p.window, p.constraints)
    return check_query(q) if checked else q


@dataclass
class DiscoveryRun:
    """Result of one run, with the replacement chosen in each main-loop iteration."""

    result: Union[Query, NoDescriptiveQuery]
    delta: Optional[DeltaFamily] = None
    steps: list = field(default_factory=list)

    @property
    def iterations(self) -> int:
        return len(self.steps)


def _layered_candidates(delta: DeltaFamily, available: list, k: int, rng):
    """Yield one candidate list per for-loop pass: layer 1 plus available variables, then layers 2..k."""
    for i in range(1, k + 1):
        layer = delta.layer(i)
        if i == 1:
            layer = layer + list(available)
        if rng is not None:
            rng.shuffle(layer)
        yield layer


def _run(sample, threshold, p: DiscoveryParams, alphabet, candidates) -> DiscoveryRun:
    sample = make_sample(sample)
    theta = support_threshold(threshold)
    p.validate()
    q = most_general_query(p)
    if not DifferenceSystem(q).feasible:
        raise UnsatisfiableConstraints("window and gap constraints are unsatisfiable")
    mgq_support = support(q, sample)
    if mgq_support < theta:
        return DiscoveryRun(NoDescriptiveQuery(mgq_support))
    gamma = sample_alphabet(sample) if alphabet is None else frozenset(alphabet)
    delta = compute_delta(sample, theta, p.k, gamma)
    rng = _order_rng(p.order)
    pending = list(q.symbols)
    available: list = []
    run = DiscoveryRun(q, delta)
    while pending:
        x = pending.pop(rng.randrange(len(pending))) if rng is not None else pending.pop(0)
        chosen = None
        for layer in candidates(delta, available, p.k, rng):
            for y in layer:
                trial = replace_symbol(q, x, y)
                if support(trial, sample) >= theta:
                    q, chosen = trial, y
                    break
            if chosen is not None:
                break
        if chosen is None:
            available.append(x)
            available.sort(key=lambda v: int(v.name[1:]))
        run.steps.append((x, chosen))
    run.result = q
    return run


def discover_run(sample, threshold, params: DiscoveryParams, alphabet=None) -> DiscoveryRun:
    return _run(sample, threshold, params, alphabet, _layered_candidates)


def discover(sample, threshold, params: DiscoveryParams, alphabet=None):
    """Compute a query descriptive for ``sample``, or ``NoDescriptiveQuery``.

    Variables of the most general query are visited one by one (in order of
    position, or randomly under ``order="seed:N"``).  Each is replaced by
    the first candidate keeping support at or above the threshold, trying
    singleton typesets and already available variables first and larger
    typesets only afterwards; a variable without any admissible
    replacement becomes available for later ones.
    """
    return discover_run(sample, threshold, params, alphabet).result
