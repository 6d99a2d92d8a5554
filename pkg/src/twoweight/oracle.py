"""Exhaustive ground truth: weighting and realization search.

Both searches walk the assignment tree in lexicographic order and cut a
subtree as soon as a fully assigned vertex violates the target property. Cut
subtrees are still counted, so ``covered`` always equals the full size of the
assignment space when a search reports absence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import BudgetExceeded
from .graph import Edge, Graph
from .groups import Element, GroupSpec

DEFAULT_BUDGET = 2**24


@dataclass
class OracleResult:
    weighting: Optional[dict]
    space: int  # size of the full assignment space
    covered: int  # assignments accounted for (checked or cut)
    nodes: int  # tree nodes actually visited

    @property
    def exists(self) -> bool:
        return self.weighting is not None


def _completion_schedule(G: Graph) -> tuple[list[int], list[list[Edge]], list[list[int]]]:
    last = [-1] * G.n
    for j, (a, b) in enumerate(G.edges):
        last[a] = j
        last[b] = j
    checks: list[list[Edge]] = [[] for _ in G.edges]
    for a, b in G.edges:
        checks[max(last[a], last[b])].append((a, b))
    finishing: list[list[int]] = [[] for _ in G.edges]
    for v, j in enumerate(last):
        if j >= 0:
            finishing[j].append(v)
    return last, checks, finishing


def search_weighting(G: Graph, k: int, budget: int = DEFAULT_BUDGET) -> OracleResult:
    if k < 1:
        raise ValueError("k must be positive")
    m = G.m
    space = k**m
    if space > budget:
        raise BudgetExceeded(f"{k}^{m} assignments exceed budget {budget}")
    _, checks, _ = _completion_schedule(G)
    edges = G.edges
    color = [0] * G.n
    values = [0] * m
    res = OracleResult(None, space, 0, 0)
    # subtree sizes below depth j+1
    below = [k ** (m - j - 1) for j in range(m)]

    def rec(j: int) -> bool:
        res.nodes += 1
        if j == m:
            res.covered += 1
            return True
        a, b = edges[j]
        for val in range(1, k + 1):
            color[a] += val
            color[b] += val
            values[j] = val
            if all(color[x] != color[y] for x, y in checks[j]):
                if rec(j + 1):
                    return True
            else:
                res.covered += below[j]
            color[a] -= val
            color[b] -= val
        return False

    if rec(0):
        res.weighting = dict(zip(edges, values))
    return res


def brute_force_weighting(G: Graph, k: int, budget: int = DEFAULT_BUDGET) -> Optional[dict[Edge, int]]:
    """Lexicographically first vertex-colouring k-edge-weighting, or None as a
    certificate that none exists."""
    res = search_weighting(G, k, budget)
    if res.weighting is None and res.covered != res.space:
        raise AssertionError("search ended without covering the space")
    return res.weighting


def search_realization(
    G: Graph, group: GroupSpec, target: Mapping[int, Element], budget: int = DEFAULT_BUDGET
) -> OracleResult:
    order = group.order
    m = G.m
    space = order**m
    if space > budget:
        raise BudgetExceeded(f"{order}^{m} assignments exceed budget {budget}")
    c0 = [group.element(target[v]) for v in range(G.n)]
    res = OracleResult(None, space, 0, 0)
    if m == 0:
        ok = all(t == group.zero for t in c0)
        res.nodes, res.covered = 1, 1
        res.weighting = {} if ok else None
        return res
    last, _, finishing = _completion_schedule(G)
    if any(j < 0 and c0[v] != group.zero for v, j in enumerate(last)):
        res.nodes, res.covered = 1, space
        return res
    elements = list(group.elements())
    edges = G.edges
    color = [group.zero] * G.n
    values: list[Element] = [group.zero] * m
    below = [order ** (m - j - 1) for j in range(m)]

    def rec(j: int) -> bool:
        res.nodes += 1
        if j == m:
            res.covered += 1
            return True
        a, b = edges[j]
        done = finishing[j]
        if done:
            # the last edge at a vertex is forced by that vertex's target
            x = done[0]
            candidates = [group.sub(c0[x], color[x])]
            res.covered += (order - 1) * below[j]
        else:
            candidates = elements
        for val in candidates:
            ca, cb = color[a], color[b]
            color[a] = group.add(ca, val)
            color[b] = group.add(cb, val)
            values[j] = val
            if all(color[x] == c0[x] for x in done):
                if rec(j + 1):
                    return True
            else:
                res.covered += below[j]
            color[a], color[b] = ca, cb
        return False

    if rec(0):
        res.weighting = dict(zip(edges, values))
    return res


def brute_force_realization(
    G: Graph, group: GroupSpec, target: Mapping[int, Element], budget: int = DEFAULT_BUDGET
) -> Optional[dict[Edge, Element]]:
    """First group weighting inducing ``target`` exactly, or None."""
    res = search_realization(G, group, target, budget)
    if res.weighting is None and res.covered != res.space:
        raise AssertionError("search ended without covering the space")
    return res.weighting
