"""Reference minimum-cost transport solver.

Solves the full transportation problem between two distributions with a
general successive-shortest-path method in exact arithmetic. It knows
nothing about the prefix-sum shortcut used in :mod:`tclose.emd`, which makes
it a useful certificate for small instances. It is deliberately
size-capped; do not use it on real tables.
"""

from __future__ import annotations

from fractions import Fraction

from .distribution import Distribution
from .errors import InstanceTooLarge, LengthMismatch

MAX_M = 12

FlowMatrix = list  # m x m list of lists of Fraction, rows = source index


def _shortest_paths(n, arcs, source):
    """Bellman-Ford over residual arcs ``(u, v, cost)``; returns (dist, parent arc)."""
    dist = [None] * n
    parent = [None] * n
    dist[source] = 0
    for _ in range(n - 1):
        changed = False
        for k, (u, v, cost) in enumerate(arcs):
            if dist[u] is None:
                continue
            nd = dist[u] + cost
            if dist[v] is None or nd < dist[v]:
                dist[v] = nd
                parent[v] = k
                changed = True
        if not changed:
            break
    return dist, parent


def mincost_transport(p: Distribution, q: Distribution) -> tuple[FlowMatrix, Fraction]:
    """Minimum-cost flow from ``p`` to ``q`` under ground cost ``|i-j|/(m-1)``.

    Returns the optimal flow matrix and its cost.
    """
    m = len(p)
    if len(q) != m:
        raise LengthMismatch(m, len(q))
    if m > MAX_M:
        raise InstanceTooLarge(f"reference solver is capped at m={MAX_M}, got m={m}")

    supply = list(p.probs)
    demand = list(q.probs)
    flow = [[Fraction(0)] * m for _ in range(m)]
    # nodes: 0 = super source, 1..m = supply side, m+1..2m = demand side, 2m+1 = super sink
    n = 2 * m + 2
    src, sink = 0, 2 * m + 1

    while True:
        arcs = []  # (u, v, cost), parallel list `kind` says what to update
        kind = []
        for i in range(m):
            if supply[i] > 0:
                arcs.append((src, 1 + i, 0))
                kind.append(("s", i))
            if demand[i] > 0:
                arcs.append((m + 1 + i, sink, 0))
                kind.append(("t", i))
            for j in range(m):
                arcs.append((1 + i, m + 1 + j, abs(i - j)))  # uncapacitated forward arc
                kind.append(("f", i, j))
                if flow[i][j] > 0:
                    arcs.append((m + 1 + j, 1 + i, -abs(i - j)))
                    kind.append(("b", i, j))
        dist, parent = _shortest_paths(n, arcs, src)
        if dist[sink] is None:
            break
        path = []
        v = sink
        while v != src:
            k = parent[v]
            path.append(k)
            v = arcs[k][0]
        # bottleneck: only source/sink arcs and backward arcs are capacitated
        limits = []
        for k in path:
            tag = kind[k]
            if tag[0] == "s":
                limits.append(supply[tag[1]])
            elif tag[0] == "t":
                limits.append(demand[tag[1]])
            elif tag[0] == "b":
                limits.append(flow[tag[1]][tag[2]])
        cap = min(limits)
        for k in path:
            tag = kind[k]
            if tag[0] == "s":
                supply[tag[1]] -= cap
            elif tag[0] == "t":
                demand[tag[1]] -= cap
            elif tag[0] == "f":
                flow[tag[1]][tag[2]] += cap
            else:
                flow[tag[1]][tag[2]] -= cap

    return flow, flow_cost(flow)


def flow_cost(flow: FlowMatrix) -> Fraction:
    m = len(flow)
    if m < 2:
        return Fraction(0)
    total = sum((flow[i][j] * abs(i - j) for i in range(m) for j in range(m)), Fraction(0))
    return total / (m - 1)
