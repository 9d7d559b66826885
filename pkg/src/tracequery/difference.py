"""Gap constraints as a system of difference constraints over embedding positions.

Node ``i`` stands for ``E(i+1)``, the (0-based) trace offset of query
position ``i + 1``.  An edge ``a -> b`` with weight ``w`` encodes
``E(b) - E(a) <= w``; lower bounds become backward edges with negated
weight.  The all-pairs shortest-path closure is computed with
Floyd-Warshall, which is ample for query strings of desk size.
"""

from __future__ import annotations

import math

from .core import Query

INF = math.inf


class DifferenceSystem:
    """Closure of the difference constraints implied by a query.

    ``upper[a][b]`` is the largest feasible value of ``E(b) - E(a)``
    (``inf`` when unbounded); the smallest feasible value is
    ``-upper[b][a]``.
    """

    def __init__(self, q: Query, ignore_window: bool = False, extra=()):
        n = q.length
        self.length = n
        w = [[INF] * n for _ in range(n)]
        for i in range(n):
            w[i][i] = 0
        for i in range(n - 1):
            # strictly increasing embedding
            w[i + 1][i] = min(w[i + 1][i], -1)
        for c in q.constraints:
            a, b = c.j - 1, c.j - 1 + c.r
            w[b][a] = min(w[b][a], -(c.cmin + 1))
            if c.cmax != INF:
                w[a][b] = min(w[a][b], c.cmax + 1)
        if not ignore_window and q.window != INF and n:
            w[0][n - 1] = min(w[0][n - 1], q.window - 1)
        for a, b, weight in extra:
            w[a][b] = min(w[a][b], weight)
        for m in range(n):
            wm = w[m]
            for a in range(n):
                wam = w[a][m]
                if wam == INF:
                    continue
                wa = w[a]
                for b in range(n):
                    d = wam + wm[b]
                    if d < wa[b]:
                        wa[b] = d
        self.upper = w
        self.feasible = all(w[i][i] >= 0 for i in range(n))

    def lower(self, a: int, b: int):
        return -self.upper[b][a]

    def min_span(self):
        """Smallest feasible ``E(last) - E(first)``, or None if infeasible."""
        if not self.feasible:
            return None
        return self.lower(0, self.length - 1)

    def leftmost(self):
        """Offsets with ``E(first) = 0`` and every position as early as possible."""
        if not self.feasible:
            return None
        return [self.lower(0, i) for i in range(self.length)]


def rightmost(q: Query, ignore_window: bool = False):
    """Offsets within the minimal span with every position as late as possible."""
    base = DifferenceSystem(q, ignore_window)
    span = base.min_span()
    if span is None:
        return None
    pinned = DifferenceSystem(q, ignore_window, extra=[(0, q.length - 1, span)])
    return [pinned.upper[0][i] for i in range(q.length)]
