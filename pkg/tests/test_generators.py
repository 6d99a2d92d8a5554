import networkx as nx
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from twoweight.errors import BadSpec
from twoweight.generators import FamilySpec, generate, regular_bipartite, theta
from twoweight.graph import component_count, vertex_connectivity


def _nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


@pytest.mark.parametrize(
    "text, reference",
    [
        ("Kmn:3,5", nx.complete_bipartite_graph(3, 5)),
        ("K:5", nx.complete_graph(5)),
        ("C:6", nx.cycle_graph(6)),
        ("P:4", nx.path_graph(4)),
        ("Q:3", nx.hypercube_graph(3)),
    ],
)
def test_named_families_match_networkx(text, reference):
    assert nx.is_isomorphic(_nx(generate(text)), reference)


def test_parse():
    spec = FamilySpec.parse("regbip:r=3,n=5,seed=2")
    assert spec.family == "regbip" and spec.params == {"r": 3, "n": 5, "seed": 2}
    assert FamilySpec.parse("theta:1,5,5").args == (1, 5, 5)


@pytest.mark.parametrize("text", ["Kmn:3", "C:2", "zzz:1", "regbip:n=4", "theta:1,1,3", "Kmn:a,b", "rand3c:n=5"])
def test_bad_specs(text):
    with pytest.raises(BadSpec):
        generate(text)


def test_theta_shape():
    G = theta(3, 3, 3)
    assert G.n == 8 and G.m == 9
    assert G.degree(0) == G.degree(1) == 3
    assert vertex_connectivity(G) == 2
    assert G.is_bipartite()
    H = theta(1, 5, 5)
    assert H.has_edge(0, 1) and H.n == 10


@settings(max_examples=30)
@given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 1000))
def test_regular_bipartite(r, extra, seed):
    n = r + extra
    G = regular_bipartite(r, n, seed)
    assert G.n == 2 * n and G.is_regular() and G.min_degree == r
    assert G.is_bipartite() and component_count(G) == 1


@settings(max_examples=20)
@given(st.integers(7, 12), st.integers(0, 1000))
def test_rand3c(n, seed):
    G = generate(f"rand3c:n={n},seed={seed}")
    assert G.n == n and not G.is_regular() and G.is_bipartite()
    assert nx.node_connectivity(_nx(G)) >= 3


def test_seeded_generation_is_reproducible():
    assert generate("randbip:m=4,n=5,p=0.5,seed=7") == generate("randbip:m=4,n=5,p=0.5,seed=7")
    G = generate("gnp:n=9,p=0.3,seed=1,connected=1")
    assert component_count(G) == 1
