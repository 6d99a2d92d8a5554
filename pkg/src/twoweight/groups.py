"""Finite abelian groups as products of cyclic groups, and even walks."""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BadElement, BadSpec, Disconnected, NotApplicable
from .graph import Edge, Graph, canon, component_count

Element = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Z_{m_1} x ... x Z_{m_r}; elements are residue tuples."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli or any(int(m) < 2 for m in self.moduli):
            raise BadSpec(f"cyclic orders must be >= 2, got {self.moduli}")
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """``"Z3"``, ``"Z2xZ2"``, ``"z4"``..."""
        parts = text.strip().lower().split("x")
        moduli = []
        for p in parts:
            match = re.fullmatch(r"z(\d+)", p.strip())
            if not match:
                raise BadSpec(f"cannot parse group {text!r}")
            moduli.append(int(match.group(1)))
        return cls(tuple(moduli))

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)

    @property
    def order(self) -> int:
        k = 1
        for m in self.moduli:
            k *= m
        return k

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    def element(self, value: int | Sequence[int]) -> Element:
        """Coerce an int (cyclic groups only) or a residue sequence."""
        if isinstance(value, int):
            value = (value,)
        a = tuple(int(x) for x in value)
        self.check(a)
        return a

    def check(self, a: Element) -> None:
        if len(a) != len(self.moduli):
            raise BadElement(f"{a} does not have shape {self}")
        for x, m in zip(a, self.moduli):
            if not 0 <= x < m:
                raise BadElement(f"{a} is not reduced in {self}")

    def add(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Element) -> Element:
        self.check(a)
        return tuple(-x % m for x, m in zip(a, self.moduli))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def total(self, items) -> Element:
        s = self.zero
        for a in items:
            s = self.add(s, a)
        return s

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order."""
        return itertools.product(*(range(m) for m in self.moduli))

    def halvings(self, s: Element) -> list[Element]:
        """Every ``h`` with ``h + h == s``, sorted lexicographically.

        Solved per cyclic factor: 2x = s (mod m) has no solution when m is
        even and s odd, two solutions (x, x + m/2) when m is even and s even,
        and exactly one when m is odd.
        """
        self.check(s)
        per_factor: list[list[int]] = []
        for r, m in zip(s, self.moduli):
            if m % 2:
                per_factor.append([r * pow(2, -1, m) % m])
            elif r % 2:
                return []
            else:
                per_factor.append(sorted({r // 2, r // 2 + m // 2}))
        return sorted(itertools.product(*per_factor))


@dataclass(frozen=True)
class Walk:
    vertices: tuple[int, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        v = self.vertices
        return tuple(canon(v[i], v[i + 1]) for i in range(len(v) - 1))

    def __len__(self) -> int:
        return max(len(self.vertices) - 1, 0)


def even_walk(G: Graph, u: int, v: int) -> Walk:
    """Shortest walk from ``u`` to ``v`` with an even number of edges.

    BFS over (vertex, parity) states; in a connected non-bipartite graph the
    state (v, even) is always reachable.
    """
    if G.is_bipartite():
        raise NotApplicable("even walks between arbitrary vertices need an odd cycle")
    if component_count(G) > 1:
        raise Disconnected("graph is disconnected")
    start, goal = (u, 0), (v, 0)
    parent = {start: start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            break
        x, p = state
        for y in G.adj[x]:
            nxt = (y, 1 - p)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    path = [goal[0]]
    state = goal
    while state != start:
        state = parent[state]
        path.append(state[0])
    return Walk(tuple(reversed(path)))
