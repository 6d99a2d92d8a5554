import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from twoweight.errors import Disconnected, NotApplicable
from twoweight.generators import (
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    random_3connected_nonregular_bipartite,
    random_bipartite,
)
from twoweight.graph import build_graph, component_count, delta_neighborhood, vertex_connectivity
from twoweight.realizer import induced_colors, verify_weighting
from twoweight.strategies import (
    lemma_lu_edges,
    strategy_chi_bound,
    strategy_parity,
    strategy_special_vertex_closed,
    strategy_special_vertex_open,
    strategy_three_connected,
)

from test_graph import q3_fan


def pendant_example():
    """Sides {0,1,2} and {3..7}; vertex 3 hangs off 0."""
    edges = [(0, 3), (0, 4)] + [(u, w) for u in (1, 2) for w in (4, 5, 6, 7)]
    return build_graph(8, edges)


def _valid(G, w):
    return set(w) == set(G.edges) and set(w.values()) <= {1, 2} and verify_weighting(G, w)[0]


def test_parity_on_cycle_and_cube():
    for G in (cycle(8), hypercube(3), complete_bipartite(3, 4)):
        notes = {}
        w = strategy_parity(G, notes)
        assert _valid(G, w)
        odd = set(notes["odd_side"])
        assert len(odd) % 2 == 0
        c = induced_colors(G, w)
        assert all((c[v] % 2 == 1) == (v in odd) for v in range(G.n))


def test_parity_declines_odd_sides():
    assert strategy_parity(complete_bipartite(3, 5)) is None


@pytest.mark.parametrize(
    "G, exc",
    [(cycle(5), NotApplicable), (complete(2), NotApplicable), (build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]), Disconnected)],
)
def test_strategies_reject_inputs(G, exc):
    for f in (strategy_parity, strategy_special_vertex_closed, strategy_special_vertex_open, strategy_three_connected):
        with pytest.raises(exc):
            f(G)


def test_special_vertex_closed_example():
    G = pendant_example()
    notes = {}
    w = strategy_special_vertex_closed(G, notes)
    assert _valid(G, w)
    v = notes["witness"]
    c = induced_colors(G, w)
    assert c[v] == 2 * G.degree(v)
    assert all(c[y] == 2 * G.degree(y) for y in G.adj[v])


def test_special_vertex_closed_min_degree_only():
    G = pendant_example()
    notes = {}
    w = strategy_special_vertex_closed(G, notes, min_degree_only=True)
    assert _valid(G, w) and G.degree(notes["witness"]) == G.min_degree


def test_special_vertex_closed_none_when_regular():
    assert strategy_special_vertex_closed(complete_bipartite(3, 3)) is None


@pytest.mark.parametrize("G", [pendant_example(), complete_bipartite(3, 5), complete_bipartite(5, 7)])
def test_special_vertex_open_examples(G):
    notes = {}
    w = strategy_special_vertex_open(G, notes)
    assert _valid(G, w)
    v = notes["witness"]
    c = induced_colors(G, w)
    assert c[v] == G.min_degree
    assert all(c[y] > G.degree(y) for y in G.adj[v])


def test_lemma_edges_q3_fan():
    G = q3_fan()
    u = next(v for v in range(G.n) if G.degree(v) == 3 and any(G.degree(x) == 4 for x in G.adj[v]))
    chosen = lemma_lu_edges(G, u)
    X = delta_neighborhood(G, u)
    assert len(chosen) == len(X)
    for x, e in zip(X, chosen):
        assert x in e and u not in e
    assert component_count(G, {u}, chosen) == 1


def test_lemma_rejects_low_connectivity_and_regular():
    with pytest.raises(NotApplicable):
        lemma_lu_edges(complete_bipartite(3, 3), 0)
    with pytest.raises(NotApplicable):
        lemma_lu_edges(pendant_example(), 3)


@settings(max_examples=40)
@given(st.integers(7, 14), st.integers(0, 10**6))
def test_lemma_on_random_3connected(n, seed):
    G = random_3connected_nonregular_bipartite(n, seed)
    delta = G.min_degree
    for u in range(G.n):
        if G.degree(u) != delta or len(delta_neighborhood(G, u)) > delta - 1:
            continue
        chosen = lemma_lu_edges(G, u, check_connectivity=False)
        X = delta_neighborhood(G, u)
        assert len(set(chosen)) == len(X)
        assert all(x in e and u not in e for x, e in zip(X, chosen))
        assert component_count(G, {u}, chosen) == 1


@pytest.mark.parametrize("G", [complete_bipartite(3, 5), complete_bipartite(5, 7), q3_fan()])
def test_three_connected_examples(G):
    notes = {}
    w = strategy_three_connected(G, notes)
    if G.bipartition and len(G.bipartition.U) % 2 == 0:
        assert w is None
        return
    assert _valid(G, w) and notes["route"] == "three-connected"
    u = notes["u"]
    c = induced_colors(G, w)
    assert c[u] == G.min_degree
    assert all(c[y] > G.min_degree for y in G.adj[u])


def test_three_connected_regular_goes_to_fallback():
    notes = {}
    w = strategy_three_connected(complete_bipartite(5, 5), notes)
    assert _valid(complete_bipartite(5, 5), w) and notes["route"] == "regular-fallback"


def test_three_connected_rejects_two_connected():
    with pytest.raises(NotApplicable):
        strategy_three_connected(cycle(6))


@settings(max_examples=30)
@given(st.integers(7, 14), st.integers(0, 10**6))
def test_three_connected_on_random(n, seed):
    G = random_3connected_nonregular_bipartite(n, seed)
    assert vertex_connectivity(G) >= 3 and not G.is_regular()
    w = strategy_three_connected(G)
    if w is not None:
        assert _valid(G, w)
    else:
        assert len(G.bipartition.U) % 2 == 0 or len(G.bipartition.W) % 2 == 0


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(1, 6), st.floats(0.3, 1.0), st.integers(0, 10**6))
def test_bipartite_strategies_are_sound(a, b, p, seed):
    G = random_bipartite(a, b, p, seed)
    if component_count(G) != 1 or G.n < 3:
        return
    for f in (strategy_parity, strategy_special_vertex_closed, strategy_special_vertex_open):
        w = f(G)
        if w is not None:
            assert _valid(G, w)


def test_chi_bound_k16():
    G = complete_bipartite(16, 16)
    notes = {}
    w = strategy_chi_bound(G, notes=notes)
    assert _valid(G, w) and notes["classes"] == 2
    c = induced_colors(G, w)
    assert all((c[v] - 2) % 4 in (0, 1) for v in range(16))
    assert all((c[v] - 4) % 4 in (0, 1) for v in range(16, 32))


def test_chi_bound_rejects_low_degree():
    with pytest.raises(NotApplicable):
        strategy_chi_bound(complete_bipartite(8, 8))
    with pytest.raises(NotApplicable):
        strategy_chi_bound(complete(17))  # delta 16 < 8 * 17
