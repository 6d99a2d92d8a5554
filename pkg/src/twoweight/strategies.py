"""Constructive vertex-colouring 2-edge-weightings for special graph classes.

Every strategy returns an integer weighting over {1, 2} or ``None`` when its
witness does not exist, and raises :class:`NotApplicable` when a structural
hypothesis (connected, nice, bipartite, 3-connected, high minimum degree) fails.
Returned weightings are always re-verified; a failed verification raises
:class:`TheoremViolation`.

The bipartite constructions all share one move: realize a parity pattern on
some connected subgraph with Z2 weights, lift Z2 weight 1 to 1 and 0 to 2, and
then fix the remaining edges by hand.
"""

from __future__ import annotations

import itertools
import logging
from typing import Iterable, Optional

from .errors import Disconnected, NotApplicable, TheoremViolation
from .factors import (
    DegreeBounds,
    chromatic_partition,
    choose_degree_bounds,
    find_degree_constrained_subgraph,
)
from .graph import (
    Bipartition,
    Edge,
    Graph,
    MultiGraph,
    canon,
    component_count,
    components,
    delta_neighborhood,
    vertex_connectivity,
)
from .local_search import local_search_weighting
from .oracle import brute_force_weighting
from .realizer import IntWeighting, induced_colors, lift_to_12, realize_parity_bipartite, verify_weighting

log = logging.getLogger(__name__)


def _bipartite_input(G: Graph) -> Bipartition:
    if not G.is_nice():
        raise NotApplicable("graph has a K2 component")
    if component_count(G) != 1:
        raise Disconnected("graph is disconnected")
    bp = G.bipartition
    if bp is None:
        raise NotApplicable("graph is not bipartite")
    return bp


def _both_sides_odd(bp: Bipartition) -> bool:
    return len(bp.U) % 2 == 1 and len(bp.W) % 2 == 1


def _parity_weights(
    G: Graph, odd: Iterable[int], removed_vertices: Iterable[int] = (), removed_edges: Iterable[Edge] = ()
) -> IntWeighting:
    """{1, 2}-weights on ``G - removed`` whose vertex sums are odd exactly on
    ``odd`` (restricted to the surviving vertices)."""
    odd = set(odd)
    H, labels = G.remove(removed_vertices, removed_edges)
    if H.n == 0:
        return {}
    zw = realize_parity_bipartite(H, {i: int(v in odd) for i, v in enumerate(labels)})
    return {canon(labels[a], labels[b]): w for (a, b), w in lift_to_12(zw).items()}


def _certify(G: Graph, w: IntWeighting, name: str) -> IntWeighting:
    if set(w) != set(G.edges):
        raise TheoremViolation(f"{name}: weighting does not cover every edge")
    ok, conflicts = verify_weighting(G, w)
    if not ok:
        raise TheoremViolation(f"{name}: conflicts on {conflicts}")
    return w


def strategy_parity(G: Graph, notes: Optional[dict] = None) -> Optional[IntWeighting]:
    """Bipartite graph with a side of even size: make that side odd, the other
    even."""
    bp = _bipartite_input(G)
    if len(bp.U) % 2 == 0:
        odd_side = bp.U
    elif len(bp.W) % 2 == 0:
        odd_side = bp.W
    else:
        return None
    w = _parity_weights(G, odd_side)
    if notes is not None:
        notes["odd_side"] = sorted(odd_side)
    return _certify(G, w, "parity")


def strategy_special_vertex_closed(
    G: Graph, notes: Optional[dict] = None, min_degree_only: bool = False
) -> Optional[IntWeighting]:
    """Witness v: its degree differs from all neighbour degrees and
    G - v - N(v) is connected and non-empty.

    Parities are realized on G - v - N(v) (odd on v's side, even on the
    other); every edge at N(v) gets weight 2, so c(v) = 2d(v) and
    c(y) = 2d(y) for y in N(v).
    """
    bp = _bipartite_input(G)
    if not _both_sides_odd(bp):
        return None
    delta = G.min_degree
    for v in range(G.n):
        if min_degree_only and G.degree(v) != delta:
            continue
        nbrs = G.adj[v]
        if G.degree(v) in {G.degree(x) for x in nbrs}:
            continue
        closed = {v, *nbrs}
        if len(closed) == G.n or component_count(G, closed) != 1:
            continue
        w = _parity_weights(G, bp.side_of(v) - {v}, removed_vertices=closed)
        for y in nbrs:
            for e in G.incident[y]:
                w[e] = 2
        if notes is not None:
            notes["witness"] = v
        return _certify(G, w, "special-vertex-closed")
    return None


def strategy_special_vertex_open(G: Graph, notes: Optional[dict] = None) -> Optional[IntWeighting]:
    """Witness v of minimum degree whose neighbours all have larger degree,
    with G - v connected. All edges at v get weight 1, so c(v) = delta while
    every neighbour sum exceeds its own degree, hence delta."""
    bp = _bipartite_input(G)
    if not _both_sides_odd(bp):
        return None
    delta = G.min_degree
    for v in range(G.n):
        if G.degree(v) != delta or delta in {G.degree(x) for x in G.adj[v]}:
            continue
        if component_count(G, {v}) != 1:
            continue
        side, other = bp.side_of(v), bp.other(v)
        nbrs = set(G.adj[v])
        if delta % 2 == 0:
            odd = (side - {v}) | nbrs
        else:
            odd = other - nbrs
        w = _parity_weights(G, odd, removed_vertices={v})
        for e in G.incident[v]:
            w[e] = 1
        if notes is not None:
            notes["witness"] = v
            notes["case"] = 1 if delta % 2 == 0 else 2
        return _certify(G, w, "special-vertex-open")
    return None


def _connected_under(n_nodes: int, pairs: Iterable[tuple[int, int]]) -> bool:
    parent = list(range(n_nodes))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    groups = n_nodes
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            groups -= 1
    return groups <= 1


def _bounded_connector(H: MultiGraph, cap: int) -> set[Edge]:
    """Labels of a connected spanning subgraph of ``H`` in which every X
    vertex has degree at most ``cap``.

    Kruskal's tree (cap-respecting edges first), then tree swaps that move
    an edge away from an over-full X vertex; exhaustive search over which
    edge each X vertex gives up if the swaps get stuck.
    """
    xs = {x: i for i, x in enumerate(H.X)}
    node_x = lambda x: xs[x]  # noqa: E731
    node_y = lambda y: len(H.X) + y  # noqa: E731
    n_nodes = len(H.X) + len(H.Y)
    triples = list(H.edges())
    ends = {lab: (node_x(x), node_y(y)) for x, y, lab in triples}
    owner = {lab: x for x, _, lab in triples}

    def spanning_tree() -> tuple[set[Edge], dict[int, int]]:
        parent = list(range(n_nodes))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        tree: set[Edge] = set()
        deg = {x: 0 for x in H.X}
        for respect_cap in (True, False):
            for x, _, lab in triples:
                if respect_cap and deg[x] >= cap:
                    continue
                a, b = map(find, ends[lab])
                if a != b:
                    parent[a] = b
                    tree.add(lab)
                    deg[x] += 1
        return tree, deg

    tree, deg = spanning_tree()
    if len(tree) != n_nodes - 1:
        raise TheoremViolation("G - u is disconnected")

    def side_of_cut(tree: set[Edge], cut: Edge) -> set[int]:
        adj: dict[int, list[int]] = {}
        for lab in tree:
            if lab == cut:
                continue
            a, b = ends[lab]
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        start = ends[cut][0]
        seen = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in adj.get(a, ()):
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    while True:
        over = [x for x in H.X if deg[x] > cap]
        if not over:
            return tree
        swapped = False
        for x in over:
            for lab in sorted(l for l in tree if owner[l] == x):
                part = side_of_cut(tree, lab)
                for _, _, alt in triples:
                    if alt in tree or owner[alt] == x or deg[owner[alt]] >= cap:
                        continue
                    a, b = ends[alt]
                    if (a in part) != (b in part):
                        tree = (tree - {lab}) | {alt}
                        deg[x] -= 1
                        deg[owner[alt]] += 1
                        swapped = True
                        break
                if swapped:
                    break
            if swapped:
                break
        if not swapped:
            break

    # exhaustive: each X vertex drops one edge (one representative per
    # distinct Y neighbour) and the rest must stay connected
    choices = []
    for x in H.X:
        reps = sorted(min(labs) for (a, _), labs in H.labels.items() if a == x)
        choices.append(reps)
    for dropped in itertools.product(*choices):
        gone = set(dropped)
        keep = [ends[lab] for _, _, lab in triples if lab not in gone]
        if _connected_under(n_nodes, keep):
            return {lab for _, _, lab in triples if lab not in gone}
    raise TheoremViolation("no connected spanning subgraph with bounded X-degrees")


def lemma_lu_edges(G: Graph, u: int, check_connectivity: bool = True) -> list[Edge]:
    """For a minimum-degree vertex u of a 3-connected non-regular bipartite
    graph, pick one edge e_i at each minimum-degree neighbour u_i (other than
    u u_i) such that G - u - {e_1..e_t} stays connected.

    Components of G - u - N^delta(u) are contracted into a multigraph H
    against N^delta(u); a connected spanning subgraph T of H with degree at
    most delta - 2 on the u_i leaves every u_i an edge outside T, and e_i is
    the smallest such edge.
    """
    _bipartite_input(G)
    if G.is_regular():
        raise NotApplicable("graph is regular")
    delta = G.min_degree
    if G.degree(u) != delta:
        raise NotApplicable(f"vertex {u} does not have minimum degree")
    if check_connectivity and vertex_connectivity(G) < 3:
        raise NotApplicable("graph is not 3-connected")
    X = delta_neighborhood(G, u)
    if len(X) > delta - 1:
        raise NotApplicable("every neighbour of u has minimum degree")
    if not X:
        return []
    comps = components(G, {u, *X})
    comp_of = {v: j for j, comp in enumerate(comps) for v in comp}
    H = MultiGraph(tuple(X), tuple(range(len(comps))))
    for x in X:
        for y in G.adj[x]:
            if y != u:
                H.add(x, comp_of[y], canon(x, y))
    T = _bounded_connector(H, delta - 2)
    chosen = []
    for x in X:
        spare = sorted(lab for (a, _), labs in H.labels.items() if a == x for lab in labs if lab not in T)
        if not spare:
            raise TheoremViolation(f"no spare edge at {x}")
        chosen.append(spare[0])
    if component_count(G, {u}, chosen) != 1:
        raise TheoremViolation("G - u - {e_i} is disconnected")
    return chosen


def regular_fallback(
    G: Graph, seed: int = 0, restarts: int = 200, flips_per_edge: int = 10, exhaustive_limit: int = 20
) -> Optional[IntWeighting]:
    w = local_search_weighting(G, 2, restarts, flips_per_edge, seed)
    if w is None and G.m <= exhaustive_limit:
        w = brute_force_weighting(G, 2)
    return w


def strategy_three_connected(
    G: Graph,
    notes: Optional[dict] = None,
    seed: int = 0,
    restarts: int = 200,
    flips_per_edge: int = 10,
    connectivity: Optional[int] = None,
) -> Optional[IntWeighting]:
    """3-connected bipartite graphs with both sides odd.

    Non-regular case: take a minimum-degree vertex u with a neighbour of
    larger degree, delete u and the edges from :func:`lemma_lu_edges`, realize
    parities on what is left, weight every edge at u with 1 and the deleted
    e_i with 2. Then c(u) = delta, each neighbour sum exceeds delta, and the
    parities separate everything else. Regular graphs go to a search fallback.
    """
    bp = _bipartite_input(G)
    kappa = vertex_connectivity(G) if connectivity is None else connectivity
    if kappa < 3:
        raise NotApplicable(f"vertex connectivity {kappa} < 3")
    if not _both_sides_odd(bp):
        return None
    if G.is_regular():
        if notes is not None:
            notes["route"] = "regular-fallback"
        w = regular_fallback(G, seed, restarts, flips_per_edge)
        return None if w is None else _certify(G, w, "regular-fallback")

    delta = G.min_degree
    u = next(
        v for v in range(G.n)
        if G.degree(v) == delta and any(G.degree(x) > delta for x in G.adj[v])
    )
    deleted = lemma_lu_edges(G, u, check_connectivity=False)
    side, other = bp.side_of(u), bp.other(u)
    nbrs = set(G.adj[u])
    if delta % 2 == 0:
        odd = nbrs | (side - {u})
    else:
        odd = other - nbrs
    w = _parity_weights(G, odd, removed_vertices={u}, removed_edges=deleted)
    for e in deleted:
        w[e] = 2
    for e in G.incident[u]:
        w[e] = 1
    if notes is not None:
        notes["route"] = "three-connected"
        notes["u"] = u
        notes["deleted"] = [list(e) for e in deleted]
        notes["case"] = 1 if delta % 2 == 0 else 2
    return _certify(G, w, "three-connected")


def strategy_chi_bound(
    G: Graph,
    classes: Optional[list[list[int]]] = None,
    notes: Optional[dict] = None,
    seed: int = 0,
    restarts: int = 50,
) -> Optional[IntWeighting]:
    """Minimum degree at least 8 times the number of colour classes.

    A factor H with degrees in {a-, a- + 1, a+, a+ + 1} gets weight 2, the
    rest weight 1, so c(v) = d(v) + d_H(v) lands in {2i, 2i + 1} modulo 2k
    for a vertex of class i.
    """
    if not G.is_nice():
        raise NotApplicable("graph has a K2 component")
    if component_count(G) != 1:
        raise Disconnected("graph is disconnected")
    delta = G.min_degree
    if delta < 16:
        raise NotApplicable(f"minimum degree {delta} < 16")
    if classes is None:
        classes = chromatic_partition(G)
    k = len(classes)
    if delta < 8 * k:
        raise NotApplicable(f"minimum degree {delta} < 8 * {k}")
    bounds = choose_degree_bounds(G, classes)
    bounds.check(G)
    H = find_degree_constrained_subgraph(G, bounds, seed=seed, restarts=restarts)
    w = {e: 2 if e in H else 1 for e in G.edges}
    if notes is not None:
        notes["classes"] = k
        notes["factor_edges"] = len(H)
    c = induced_colors(G, w)
    for i, part in enumerate(classes, start=1):
        for v in part:
            if (c[v] - 2 * i) % (2 * k) not in (0, 1):
                raise TheoremViolation(f"vertex {v} of class {i} has sum {c[v]}")
    return _certify(G, w, "chi-bound")


__all__ = [
    "DegreeBounds",
    "lemma_lu_edges",
    "regular_fallback",
    "strategy_chi_bound",
    "strategy_parity",
    "strategy_special_vertex_closed",
    "strategy_special_vertex_open",
    "strategy_three_connected",
]
