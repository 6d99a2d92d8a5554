"""Degree bounds, degree-constrained spanning subgraphs and proper colourings
for the high-minimum-degree construction."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasibleBounds, SearchFailed
from .graph import Edge, Graph


@dataclass(frozen=True)
class DegreeBounds:
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def allowed(self, v: int) -> tuple[int, ...]:
        a, b = self.lower[v], self.upper[v]
        return tuple(sorted({a, a + 1, b, b + 1}))

    def check(self, G: Graph) -> None:
        for v in range(G.n):
            if not bounds_ok(G.degree(v), self.lower[v], self.upper[v]):
                raise InfeasibleBounds(
                    f"vertex {v}: ({self.lower[v]}, {self.upper[v]}) violates the bound conditions"
                )


def bounds_ok(d: int, lo: int, hi: int) -> bool:
    return (
        0 <= lo <= d // 2 <= hi < d
        and 2 * hi <= d + lo + 2
        and hi <= 2 * (lo + 1) + 1
    )


def _check_partition(G: Graph, classes: Sequence[Sequence[int]]) -> list[int]:
    cls = [-1] * G.n
    for i, part in enumerate(classes):
        for v in part:
            if not 0 <= v < G.n or cls[v] != -1:
                raise InfeasibleBounds("classes do not partition the vertex set")
            cls[v] = i
    if -1 in cls:
        raise InfeasibleBounds("classes do not cover the vertex set")
    for a, b in G.edges:
        if cls[a] == cls[b]:
            raise InfeasibleBounds(f"edge {(a, b)} inside class {cls[a] + 1}")
    return cls


def choose_degree_bounds(G: Graph, classes: Sequence[Sequence[int]]) -> DegreeBounds:
    """Smallest lower bound a per vertex with d/4 <= a <= d/2, a + d = 2i
    (mod 2k) for the vertex's 1-based class i, and a + 2k >= floor(d/2);
    the upper bound is a + 2k."""
    cls = _check_partition(G, classes)
    k = len(classes)
    lower, upper = [], []
    for v in range(G.n):
        d = G.degree(v)
        i = cls[v] + 1
        for a in range(d // 4, d // 2 + 1):
            if (a + d - 2 * i) % (2 * k) == 0 and a + 2 * k >= d // 2 and bounds_ok(d, a, a + 2 * k):
                lower.append(a)
                upper.append(a + 2 * k)
                break
        else:
            raise InfeasibleBounds(f"no admissible lower bound for vertex {v} (degree {d})")
    return DegreeBounds(tuple(lower), tuple(upper))


def _deficit(d: int, allowed: tuple[int, ...]) -> int:
    return min(abs(d - s) for s in allowed)


def _exhaustive_factor(G: Graph, allowed: list[tuple[int, ...]]) -> set[Edge] | None:
    m = G.m
    last = [-1] * G.n
    for j, (a, b) in enumerate(G.edges):
        last[a] = last[b] = j
    top = [max(s) for s in allowed]
    deg = [0] * G.n
    chosen = [0] * m

    def rec(j: int) -> bool:
        if j == m:
            return True
        a, b = G.edges[j]
        for take in (0, 1):
            if take and (deg[a] >= top[a] or deg[b] >= top[b]):
                continue
            deg[a] += take
            deg[b] += take
            chosen[j] = take
            ok = all(deg[x] in allowed[x] for x in (a, b) if last[x] == j)
            if ok and rec(j + 1):
                return True
            deg[a] -= take
            deg[b] -= take
        return False

    if rec(0):
        return {e for e, t in zip(G.edges, chosen) if t}
    return None


def find_degree_constrained_subgraph(
    G: Graph,
    bounds: DegreeBounds,
    seed: int = 0,
    restarts: int = 50,
    steps_per_edge: int = 20,
    exhaustive_limit: int = 20,
    noise: float = 0.1,
) -> set[Edge]:
    """Spanning subgraph H with deg_H(v) in {a-, a- + 1, a+, a+ + 1}.

    Exhaustive for small graphs, otherwise local search from a half-degree
    start, moving edges in or out at violated vertices.
    """
    allowed = [bounds.allowed(v) for v in range(G.n)]
    if G.m <= exhaustive_limit:
        H = _exhaustive_factor(G, allowed)
        if H is None:
            raise SearchFailed("no subgraph meets the degree sets", best_deficit=None)
        return H

    rng = random.Random(seed)
    index = G.edge_index
    best_total = None
    for _ in range(restarts):
        order = list(G.edges)
        rng.shuffle(order)
        inH = [False] * G.m
        deg = [0] * G.n
        for a, b in order:
            if deg[a] < G.degree(a) // 2 and deg[b] < G.degree(b) // 2:
                inH[index[(a, b)]] = True
                deg[a] += 1
                deg[b] += 1
        bad = {v for v in range(G.n) if deg[v] not in allowed[v]}
        for _ in range(steps_per_edge * G.m):
            if not bad:
                return {e for e, t in zip(G.edges, inH) if t}
            v = rng.choice(sorted(bad))
            nearest = min(allowed[v], key=lambda s: (abs(deg[v] - s), rng.random()))
            add = nearest > deg[v]
            moves = []
            for e in G.incident[v]:
                j = index[e]
                if inH[j] == add:
                    continue
                x = e[0] if e[1] == v else e[1]
                step = 1 if add else -1
                change = _deficit(deg[x] + step, allowed[x]) - _deficit(deg[x], allowed[x])
                moves.append((change, j, x))
            if not moves:
                continue
            if rng.random() < noise:
                _, j, x = rng.choice(moves)
            else:
                best = min(mv[0] for mv in moves)
                _, j, x = rng.choice([mv for mv in moves if mv[0] == best])
            step = 1 if add else -1
            inH[j] = add
            deg[v] += step
            deg[x] += step
            for y in (v, x):
                if deg[y] in allowed[y]:
                    bad.discard(y)
                else:
                    bad.add(y)
        total = sum(_deficit(deg[v], allowed[v]) for v in range(G.n))
        best_total = total if best_total is None else min(best_total, total)
    raise SearchFailed(
        f"no factor found in {restarts} restarts (best total deficit {best_total})",
        best_deficit=best_total,
    )


def chromatic_partition(G: Graph, exact_limit: int = 20) -> list[list[int]]:
    """Proper colouring classes: the bipartition when there is one, an optimal
    colouring by backtracking for small graphs, largest-degree-first greedy
    otherwise (which may use more than chi colours)."""
    if G.n == 0:
        return []
    bp = G.bipartition
    if bp is not None:
        parts = [sorted(bp.U), sorted(bp.W)]
        return [p for p in parts if p]
    if G.n <= exact_limit:
        order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
        for k in range(1, G.n + 1):
            color = [-1] * G.n

            def rec(i: int) -> bool:
                if i == len(order):
                    return True
                v = order[i]
                used = {color[y] for y in G.adj[v]}
                top = max(color) + 1
                for c in range(min(k, top + 1)):
                    if c not in used:
                        color[v] = c
                        if rec(i + 1):
                            return True
                        color[v] = -1
                return False

            if rec(0):
                return [[v for v in range(G.n) if color[v] == c] for c in range(k)]
    color = [-1] * G.n
    for v in sorted(range(G.n), key=lambda v: (-G.degree(v), v)):
        used = {color[y] for y in G.adj[v]}
        color[v] = next(c for c in range(G.n) if c not in used)
    k = max(color) + 1
    return [[v for v in range(G.n) if color[v] == c] for c in range(k)]
