"""Seeded min-conflicts search for vertex-colouring k-edge-weightings."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Edge, Graph


def local_search_weighting(
    G: Graph,
    k: int = 2,
    restarts: int = 200,
    flips_per_edge: int = 10,
    seed: int = 0,
    noise: float = 0.15,
) -> Optional[dict[Edge, int]]:
    """Random restarts of min-conflicts search. Returns None when the budget
    runs out, which says nothing about existence."""
    m = G.m
    if m == 0:
        return {}
    rng = random.Random(seed)
    edges = G.edges
    index = G.edge_index
    inc = [[index[e] for e in G.incident[v]] for v in range(G.n)]

    def conflicts_at(vertices, color) -> int:
        seen = set()
        total = 0
        for x in vertices:
            for j in inc[x]:
                if j not in seen:
                    seen.add(j)
                    a, b = edges[j]
                    total += color[a] == color[b]
        return total

    for _ in range(restarts):
        w = [rng.randint(1, k) for _ in range(m)]
        color = [0] * G.n
        for j, (a, b) in enumerate(edges):
            color[a] += w[j]
            color[b] += w[j]
        bad = {j for j, (a, b) in enumerate(edges) if color[a] == color[b]}
        for _ in range(flips_per_edge * m):
            if not bad:
                return dict(zip(edges, w))
            a, b = edges[rng.choice(sorted(bad))]
            moves = []
            for j in sorted(set(inc[a]) | set(inc[b])):
                x, y = edges[j]
                before = conflicts_at((x, y), color)
                for val in range(1, k + 1):
                    if val == w[j]:
                        continue
                    d = val - w[j]
                    color[x] += d
                    color[y] += d
                    moves.append((conflicts_at((x, y), color) - before, j, val))
                    color[x] -= d
                    color[y] -= d
            if rng.random() < noise:
                _, j, val = rng.choice(moves)
            else:
                best = min(mv[0] for mv in moves)
                _, j, val = rng.choice([mv for mv in moves if mv[0] == best])
            x, y = edges[j]
            d = val - w[j]
            w[j] = val
            color[x] += d
            color[y] += d
            for v in (x, y):
                for i in inc[v]:
                    p, q = edges[i]
                    if color[p] == color[q]:
                        bad.add(i)
                    else:
                        bad.discard(i)
        if not bad:
            return dict(zip(edges, w))
    return None
