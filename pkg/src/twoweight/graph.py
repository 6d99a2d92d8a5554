"""Immutable simple graphs and the structural queries the constructions need.

Vertices are the integers ``0..n-1``; edges are stored canonically as
``(min, max)`` pairs in sorted order, so iteration order (and therefore every
downstream tie-break) is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import BadVertex, DuplicateEdge, InvalidEdge, ParseError

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Bipartition:
    U: frozenset[int]
    W: frozenset[int]

    def side_of(self, v: int) -> frozenset[int]:
        return self.U if v in self.U else self.W

    def other(self, v: int) -> frozenset[int]:
        return self.W if v in self.U else self.U


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edge_index

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident(self) -> tuple[tuple[Edge, ...], ...]:
        """Edges at each vertex, in canonical order."""
        inc: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def bipartition(self) -> Bipartition | None:
        return bipartition(self)

    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def is_connected(self) -> bool:
        return component_count(self) <= 1

    def is_nice(self) -> bool:
        """True when no connected component is a single edge."""
        return not any(
            len(comp) == 2 for comp in components(self) if len(comp) > 1
        )

    def remove(
        self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()
    ) -> tuple[Graph, tuple[int, ...]]:
        """Compact copy of ``G - vertices - edges``.

        Returns the new graph and ``labels`` with ``labels[i]`` the original
        index of new vertex ``i``.
        """
        gone = set(vertices)
        dropped = {canon(*e) for e in edges}
        labels = tuple(v for v in range(self.n) if v not in gone)
        new = {v: i for i, v in enumerate(labels)}
        kept = [
            (new[a], new[b])
            for a, b in self.edges
            if a not in gone and b not in gone and (a, b) not in dropped
        ]
        return build_graph(len(labels), kept), labels

    def to_edgelist(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise BadVertex(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise BadVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        e = canon(u, v)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
    ordered = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in ordered:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, ordered, tuple(tuple(sorted(a)) for a in nbrs))


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``. Blank lines and ``#``
    comments are ignored; errors carry the 1-based line number."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ParseError("empty input", 1)
    lineno, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must be two integers", lineno) from None
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(rows) - 1}", lineno)
    seen: set[Edge] = set()
    pairs = []
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        if canon(u, v) in seen:
            raise ParseError(f"duplicate edge {canon(u, v)}", lineno)
        seen.add(canon(u, v))
        pairs.append((u, v))
    return build_graph(n, pairs)


def graph_from_json(obj: dict) -> Graph:
    return build_graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


def bipartition(G: Graph) -> Bipartition | None:
    """2-colour ``G`` by BFS; the lowest vertex of each component goes to U."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    U = frozenset(v for v in range(G.n) if side[v] == 0)
    return Bipartition(U, frozenset(range(G.n)) - U)


def _component_labels(
    G: Graph, removed_vertices: Iterable[int] = (), removed_edges: Iterable[Edge] = ()
) -> list[int]:
    gone = set(removed_vertices)
    dropped = {canon(*e) for e in removed_edges}
    label = [-1] * G.n
    count = 0
    for s in range(G.n):
        if s in gone or label[s] != -1:
            continue
        label[s] = count
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if label[y] == -1 and y not in gone and canon(x, y) not in dropped:
                    label[y] = count
                    stack.append(y)
        count += 1
    return label


def components(
    G: Graph, removed_vertices: Iterable[int] = (), removed_edges: Iterable[Edge] = ()
) -> list[list[int]]:
    """Vertex lists of the components of ``G - removed_vertices - removed_edges``,
    ordered by lowest member."""
    label = _component_labels(G, removed_vertices, removed_edges)
    out: list[list[int]] = []
    for v, c in enumerate(label):
        if c < 0:
            continue
        if c == len(out):
            out.append([])
        out[c].append(v)
    return out


def component_count(
    G: Graph, removed_vertices: Iterable[int] = (), removed_edges: Iterable[Edge] = ()
) -> int:
    label = _component_labels(G, removed_vertices, removed_edges)
    return max(label, default=-1) + 1


def _local_vertex_connectivity(G: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally disjoint s-t paths, stopping once ``cap`` is hit.

    Unit-capacity max flow on the split graph: vertex v becomes v_in = 2v and
    v_out = 2v + 1 joined by an arc of capacity 1 (infinite for s and t).
    """
    residual: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        residual.setdefault(a, {})
        residual.setdefault(b, {})
        residual[a][b] = residual[a].get(b, 0) + c
        residual[b].setdefault(a, 0)

    big = G.n
    for v in range(G.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in G.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in residual[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            residual[x][y] -= 1
            residual[y][x] += 1
            y = x
        flow += 1
    return flow


def vertex_connectivity(G: Graph) -> int:
    """Exact vertex connectivity via max flow over all non-adjacent pairs."""
    if G.n < 2:
        return 0
    if component_count(G) > 1:
        return 0
    best = G.n - 1
    for s in range(G.n):
        for t in range(s + 1, G.n):
            if G.has_edge(s, t):
                continue
            best = min(best, _local_vertex_connectivity(G, s, t, best))
            if best == 0:
                return 0
    return best


def delta_neighborhood(G: Graph, u: int) -> tuple[int, ...]:
    """Neighbours of ``u`` whose degree equals the minimum degree of ``G``."""
    if not 0 <= u < G.n:
        raise BadVertex(f"vertex {u} outside 0..{G.n - 1}")
    d = G.min_degree
    return tuple(v for v in G.adj[u] if G.degree(v) == d)


@dataclass
class MultiGraph:
    """Bipartite multigraph whose edges carry labels (the original edges they
    stand for). ``multiplicity`` counts labels per (x, y) pair."""

    X: tuple[int, ...]
    Y: tuple[int, ...]
    labels: dict[tuple[int, int], list[Edge]] = field(default_factory=dict)

    def add(self, x: int, y: int, label: Edge) -> None:
        self.labels.setdefault((x, y), []).append(label)

    @property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        return {k: len(v) for k, v in self.labels.items()}

    def degree(self, x: int) -> int:
        return sum(len(v) for (a, _), v in self.labels.items() if a == x)

    def edges(self) -> Iterator[tuple[int, int, Edge]]:
        """Every (x, y, label) triple, sorted by label."""
        flat = [(x, y, lab) for (x, y), labs in self.labels.items() for lab in labs]
        return iter(sorted(flat, key=lambda t: t[2]))
