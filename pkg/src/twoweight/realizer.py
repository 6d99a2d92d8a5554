"""Edge-weightings that induce a prescribed vertex colouring.

Two realizers live here: one over an arbitrary finite abelian group for
non-bipartite graphs, and a Z2 (parity) realizer for connected graphs. The
parity realizer is paired with :func:`lift_to_12`, which turns Z2 weights into
weights 1 and 2 while preserving the parity of every vertex sum.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    Disconnected,
    IncompleteWeighting,
    InfeasibleParity,
    InfeasibleSum,
    NotApplicable,
)
from .graph import Edge, Graph, canon, component_count
from .groups import Element, GroupSpec, even_walk

log = logging.getLogger(__name__)

Z2 = GroupSpec((2,))
IntWeighting = dict[Edge, int]


@dataclass
class GroupWeighting:
    group: GroupSpec
    weight: dict[Edge, Element]
    rounds: int = 0
    # one entry per correction round: (u, v, walk length, sum of all colours)
    trace: list[tuple[int, int, int, Element]] = field(default_factory=list)

    def colors(self, G: Graph) -> list[Element]:
        return group_colors(G, self.group, self.weight)


def group_colors(G: Graph, group: GroupSpec, weight: Mapping[Edge, Element]) -> list[Element]:
    c = [group.zero] * G.n
    for e in G.edges:
        if e not in weight:
            raise IncompleteWeighting(f"no weight for edge {e}")
        w = weight[e]
        c[e[0]] = group.add(c[e[0]], w)
        c[e[1]] = group.add(c[e[1]], w)
    return c


def realize_group_coloring(
    G: Graph, group: GroupSpec, target: Mapping[int, Element]
) -> GroupWeighting:
    """Weight the edges of a connected non-bipartite graph with group elements
    so that every vertex sum equals ``target[v]``.

    One edge starts at ``h`` (where the targets sum to ``2h``) and the rest at
    zero. Each round takes the two lowest wrong vertices u, v and pushes the
    missing amount d along an even u-v walk as +d, -d, +d, ..., which fixes u
    and leaves every interior vertex and the total sum untouched.
    """
    if G.is_bipartite():
        raise NotApplicable("group realizer needs a non-bipartite graph")
    if component_count(G) > 1:
        raise Disconnected("graph is disconnected")
    c0 = [group.element(target[v]) for v in range(G.n)]
    total = group.total(c0)
    halves = group.halvings(total)
    if not halves:
        raise InfeasibleSum(f"targets sum to {total}, which is not 2h in {group}")
    h = halves[0]

    weight = {e: group.zero for e in G.edges}
    weight[G.edges[0]] = h
    color = group_colors(G, group, weight)
    result = GroupWeighting(group, weight)

    while True:
        wrong = [v for v in range(G.n) if color[v] != c0[v]]
        if not wrong:
            break
        # a lone wrong vertex would break the conserved sum
        u, v = wrong[0], wrong[1]
        d = group.sub(c0[u], color[u])
        walk = even_walk(G, u, v)
        step, minus = d, group.neg(d)
        for j, e in enumerate(walk.edges):
            weight[e] = group.add(weight[e], step if j % 2 == 0 else minus)
        color[u] = group.add(color[u], d)
        color[v] = group.add(color[v], minus)
        result.rounds += 1
        result.trace.append((u, v, len(walk), group.total(color)))
        log.debug("round %d: fixed %d via walk to %d", result.rounds, u, v)
    return result


def _parity_targets(target: Mapping[int, object], n: int) -> list[int]:
    out = []
    for v in range(n):
        t = target[v]
        if not isinstance(t, int):
            (t,) = t
        out.append(int(t) % 2)
    return out


def _shortest_path(G: Graph, s: int, t: int) -> list[int]:
    parent = {s: s}
    queue = deque([s])
    while queue and t not in parent:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def realize_parity_bipartite(G: Graph, target: Mapping[int, object]) -> GroupWeighting:
    """Z2 weighting of a connected graph whose vertex sums have the given
    parities. Needs an even number of odd targets.

    Starts from all zeros and repeatedly flips a shortest path between the two
    lowest wrong vertices; interior vertices are flipped twice and keep their
    parity, so each round fixes exactly two vertices.
    """
    bits = _parity_targets(target, G.n)
    if sum(bits) % 2:
        raise InfeasibleParity(f"{sum(bits)} vertices have odd target")
    if component_count(G) > 1:
        raise Disconnected("graph is disconnected")
    flip = {e: 0 for e in G.edges}
    parity = [0] * G.n
    result = GroupWeighting(Z2, {})
    while True:
        wrong = [v for v in range(G.n) if parity[v] != bits[v]]
        if not wrong:
            break
        u, v = wrong[0], wrong[1]
        path = _shortest_path(G, u, v)
        for a, b in zip(path, path[1:]):
            flip[canon(a, b)] ^= 1
        parity[u] ^= 1
        parity[v] ^= 1
        result.rounds += 1
        result.trace.append((u, v, len(path) - 1, (sum(parity) % 2,)))
    result.weight = {e: (b,) for e, b in flip.items()}
    return result


def lift_to_12(zw: GroupWeighting | Mapping[Edge, Element]) -> IntWeighting:
    """Z2 weight 1 becomes integer 1, weight 0 becomes integer 2."""
    weight = zw.weight if isinstance(zw, GroupWeighting) else zw
    out = {}
    for e, w in weight.items():
        if not isinstance(w, int):
            (w,) = w
        out[e] = 1 if w % 2 else 2
    return out


def induced_colors(G: Graph, w: Mapping[Edge, int]) -> list[int]:
    c = [0] * G.n
    for e in G.edges:
        if e not in w:
            raise IncompleteWeighting(f"no weight for edge {e}")
        c[e[0]] += w[e]
        c[e[1]] += w[e]
    return c


def verify_weighting(G: Graph, w: Mapping[Edge, int]) -> tuple[bool, list[Edge]]:
    """(proper?, edges whose endpoints receive equal sums)."""
    c = induced_colors(G, w)
    conflicts = [e for e in G.edges if c[e[0]] == c[e[1]]]
    return not conflicts, conflicts


def targets_from_json(obj: Mapping) -> tuple[GroupSpec, dict[int, Element]]:
    """``{"group": "Z2", "targets": {"0": [1], ...}}``."""
    group = GroupSpec.parse(obj["group"])
    targets = {int(k): group.element(v) for k, v in obj["targets"].items()}
    return group, targets


def targets_to_json(group: GroupSpec, targets: Mapping[int, Element]) -> dict:
    return {
        "group": str(group),
        "targets": {str(v): list(t) for v, t in sorted(targets.items())},
    }
