"""Census of small connected bipartite graphs: solver against oracle.

Graphs are enumerated per split (a, b) with a <= b and a + b = n as subsets
of the a*b potential edges between U = {0..a-1} and W = {a..a+b-1}. With
dedup on, a graph is kept only if its edge mask is the first one seen for its
isomorphism class. A connected bipartite graph has a unique bipartition, so
canonicalising under row and column permutations (plus transposition when
a == b) identifies isomorphism classes exactly.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Optional

from .graph import Graph, build_graph, vertex_connectivity
from .oracle import search_weighting
from .solver import NO_WEIGHTING, SOLVED, SolveOptions, solve

MAX_N = 9


@dataclass
class CensusRow:
    n: int
    sides: tuple[int, int]
    mask: int
    edges: list[list[int]]
    bipartite: bool
    connectivity: int
    status: str
    strategy: str
    oracle: str  # "exists" | "not exists"
    agree: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _rows_of(mask: int, a: int, b: int) -> list[int]:
    full = (1 << b) - 1
    return [(mask >> (i * b)) & full for i in range(a)]


def _connected(rows: list[int], b: int) -> bool:
    if not rows[0]:
        return False
    reached_u = {0}
    reached_w = rows[0]
    changed = True
    while changed:
        changed = False
        for i, r in enumerate(rows):
            if i not in reached_u and r & reached_w:
                reached_u.add(i)
                reached_w |= r
                changed = True
    return len(reached_u) == len(rows) and reached_w == (1 << b) - 1


def _canonical(rows: list[int], a: int, b: int) -> tuple:
    def best(rows: list[int], a: int, b: int) -> tuple:
        out = None
        for perm in itertools.permutations(range(a)):
            cols = sorted(
                sum(((rows[perm[r]] >> j) & 1) << r for r in range(a)) for j in range(b)
            )
            key = tuple(cols)
            if out is None or key < out:
                out = key
        return out

    key = best(rows, a, b)
    if a == b:
        transposed = [sum(((rows[i] >> j) & 1) << i for i in range(a)) for j in range(b)]
        key = min(key, best(transposed, b, a))
    return key


def _graph_of(rows: list[int], a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if rows[i] >> j & 1])


def _parse_filters(filters: Optional[str]) -> list:
    preds = []
    for f in filter(None, (s.strip() for s in (filters or "all").split(","))):
        if f == "all":
            continue
        if m := re.fullmatch(r"(\d+)-regular", f):
            r = int(m.group(1))
            preds.append(lambda G, k, r=r: G.is_regular() and G.min_degree == r)
        elif m := re.fullmatch(r"(\d+)-connected", f):
            c = int(m.group(1))
            preds.append(lambda G, k, c=c: k >= c)
        elif f == "odd-sides":
            preds.append(lambda G, k: all(len(s) % 2 for s in (G.bipartition.U, G.bipartition.W)))
        elif f == "even-side":
            preds.append(lambda G, k: any(len(s) % 2 == 0 for s in (G.bipartition.U, G.bipartition.W)))
        elif f == "non-regular":
            preds.append(lambda G, k: not G.is_regular())
        else:
            raise ValueError(f"unknown census filter {f!r}")
    return preds


def enumerate_split(a: int, b: int, dedup: bool = True) -> Iterator[tuple[int, Graph]]:
    """(mask, graph) for connected graphs spanning the a x b split."""
    seen: set = set()
    for mask in range(1, 1 << (a * b)):
        rows = _rows_of(mask, a, b)
        if not _connected(rows, b):
            continue
        if dedup:
            key = _canonical(rows, a, b)
            if key in seen:
                continue
            seen.add(key)
        yield mask, _graph_of(rows, a, b)


def _split_rows(job: tuple[int, int, bool, Optional[str], SolveOptions]) -> list[CensusRow]:
    a, b, dedup, filters, options = job
    preds = _parse_filters(filters)
    out = []
    for mask, G in enumerate_split(a, b, dedup):
        if G.n < 3:
            continue
        kappa = vertex_connectivity(G)
        if not all(p(G, kappa) for p in preds):
            continue
        report = solve(G, options)
        exists = search_weighting(G, 2, options.oracle_budget).exists
        agree = not (
            (report.status == SOLVED and not exists) or (report.status == NO_WEIGHTING and exists)
        )
        out.append(
            CensusRow(
                n=G.n,
                sides=(a, b),
                mask=mask,
                edges=[list(e) for e in G.edges],
                bipartite=True,
                connectivity=kappa,
                status=report.status,
                strategy=report.strategy,
                oracle="exists" if exists else "not exists",
                agree=agree,
            )
        )
    return out


def splits(max_n: int, min_n: int = 3) -> list[tuple[int, int]]:
    return [(a, n - a) for n in range(min_n, max_n + 1) for a in range(1, n // 2 + 1)]


def census(
    max_n: int,
    filters: Optional[str] = None,
    dedup: bool = True,
    options: Optional[SolveOptions] = None,
    jobs: int = 1,
    min_n: int = 3,
) -> Iterator[CensusRow]:
    """Rows ordered by (n, a, edge mask). ``jobs > 1`` farms splits out to
    worker processes; output order does not depend on it."""
    if max_n > MAX_N:
        raise ValueError(f"census is limited to n <= {MAX_N}")
    options = options or SolveOptions()
    _parse_filters(filters)
    work = [(a, b, dedup, filters, options) for a, b in splits(max_n, min_n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rows in pool.map(_split_rows, work):
                yield from rows
    else:
        for job in work:
            yield from _split_rows(job)


def summarize(rows: Iterable[CensusRow]) -> list[dict]:
    counts: Counter = Counter()
    for row in rows:
        counts[(row.n, row.strategy, row.status, row.oracle, row.agree)] += 1
    return [
        {"n": n, "strategy": s, "status": st, "oracle": o, "agree": ag, "count": c}
        for (n, s, st, o, ag), c in sorted(counts.items())
    ]


def summary_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["n", "strategy", "status", "oracle", "agree", "count"], lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(summarize(rows))
    return buf.getvalue()
