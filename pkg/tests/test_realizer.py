import itertools
import random

import pytest
from hypothesis import given
import hypothesis.strategies as st

from twoweight.errors import Disconnected, IncompleteWeighting, InfeasibleParity, InfeasibleSum, NotApplicable
from twoweight.generators import complete, cycle, path
from twoweight.graph import build_graph
from twoweight.groups import GroupSpec
from twoweight.realizer import (
    group_colors,
    induced_colors,
    lift_to_12,
    realize_group_coloring,
    realize_parity_bipartite,
    targets_from_json,
    targets_to_json,
    verify_weighting,
)

from conftest import connected_graphs

Z2, Z3 = GroupSpec((2,)), GroupSpec((3,))


def _all_group_weightings(G, group):
    for values in itertools.product(list(group.elements()), repeat=G.m):
        yield dict(zip(G.edges, values))


def test_k3_z3_zero_targets():
    res = realize_group_coloring(complete(3), Z3, {v: (0,) for v in range(3)})
    assert res.rounds == 0
    assert set(res.weight.values()) == {(0,)}


def test_k3_z3_all_ones_matches_enumeration():
    G = complete(3)
    target = [(1,)] * 3
    solutions = [w for w in _all_group_weightings(G, Z3) if group_colors(G, Z3, w) == target]
    assert solutions == [{e: (2,) for e in G.edges}]
    res = realize_group_coloring(G, Z3, dict(enumerate(target)))
    assert res.weight == solutions[0]


def test_c5_z2_example():
    G = cycle(5)
    target = [(1,), (1,), (0,), (0,), (0,)]
    solutions = [w for w in _all_group_weightings(G, Z2) if group_colors(G, Z2, w) == target]
    assert solutions
    res = realize_group_coloring(G, Z2, dict(enumerate(target)))
    assert res.colors(G) == target
    assert res.weight in solutions


def test_group_realizer_errors():
    with pytest.raises(NotApplicable):
        realize_group_coloring(cycle(6), Z3, {v: (0,) for v in range(6)})
    with pytest.raises(InfeasibleSum):
        realize_group_coloring(complete(3), Z2, {0: (1,), 1: (0,), 2: (0,)})
    G = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(Disconnected):
        realize_group_coloring(G, Z3, {v: (0,) for v in range(6)})


@given(connected_graphs(min_n=3, max_n=9), st.sampled_from(["Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z2xZ3"]), st.integers(0, 2**31))
def test_group_realizer_properties(G, gname, seed):
    if G.is_bipartite():
        return
    g = GroupSpec.parse(gname)
    rng = random.Random(seed)
    els = list(g.elements())
    target = [rng.choice(els) for _ in range(G.n - 1)]
    rest = g.total(target)
    h = rng.choice(els)
    target.append(g.sub(g.add(h, h), rest))
    res = realize_group_coloring(G, g, dict(enumerate(target)))
    assert res.colors(G) == target
    assert res.rounds <= G.n
    total = g.total(target)
    assert all(step[3] == total for step in res.trace)
    # the lower endpoint of each round is fixed and never revisited
    fixed = [u for u, _, _, _ in res.trace]
    assert fixed == sorted(fixed) and len(set(fixed)) == len(fixed)


def test_parity_p4_example():
    G = path(4)
    bits = dict(enumerate([1, 0, 1, 0]))
    expected = None
    for values in itertools.product((0, 1), repeat=3):
        w = dict(zip(G.edges, [(b,) for b in values]))
        if [c[0] for c in group_colors(G, Z2, w)] == [1, 0, 1, 0]:
            expected = w
    res = realize_parity_bipartite(G, bits)
    assert res.weight == {(0, 1): (1,), (1, 2): (1,), (2, 3): (0,)} == expected


def test_parity_all_zero():
    res = realize_parity_bipartite(cycle(7), {v: 0 for v in range(7)})
    assert res.rounds == 0 and set(res.weight.values()) == {(0,)}


def test_parity_odd_count_rejected():
    with pytest.raises(InfeasibleParity):
        realize_parity_bipartite(cycle(6), {v: int(v % 2 == 0) for v in range(6)})


def test_parity_disconnected_rejected():
    G = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        realize_parity_bipartite(G, {0: 1, 1: 0, 2: 1, 3: 0})


@given(connected_graphs(min_n=2, max_n=12), st.integers(0, 2**31))
def test_parity_realizer_properties(G, seed):
    rng = random.Random(seed)
    bits = [rng.randint(0, 1) for _ in range(G.n)]
    if sum(bits) % 2:
        bits[rng.randrange(G.n)] ^= 1
    res = realize_parity_bipartite(G, dict(enumerate(bits)))
    assert [c[0] for c in res.colors(G)] == bits
    assert res.rounds == sum(bits) // 2 <= G.n // 2


def test_lift_examples():
    G = path(4)
    w = lift_to_12({(0, 1): (1,), (1, 2): (1,), (2, 3): (0,)})
    assert w == {(0, 1): 1, (1, 2): 1, (2, 3): 2}
    assert induced_colors(G, w) == [1, 2, 3, 2]
    C = cycle(6)
    assert set(induced_colors(C, lift_to_12({e: (0,) for e in C.edges}))) == {4}
    assert set(induced_colors(C, lift_to_12({e: (1,) for e in C.edges}))) == {2}


@given(connected_graphs(max_n=10), st.integers(0, 2**31))
def test_lift_preserves_parity(G, seed):
    rng = random.Random(seed)
    zw = {e: (rng.randint(0, 1),) for e in G.edges}
    colors = induced_colors(G, lift_to_12(zw))
    z = group_colors(G, Z2, zw)
    assert [c % 2 for c in colors] == [c[0] for c in z]


def test_verify_examples():
    ok, conflicts = verify_weighting(path(3), {(0, 1): 1, (1, 2): 2})
    assert ok and conflicts == []
    assert induced_colors(path(3), {(0, 1): 1, (1, 2): 2}) == [1, 3, 2]
    C = cycle(6)
    ok, conflicts = verify_weighting(C, {e: 1 for e in C.edges})
    assert not ok and len(conflicts) == 6
    for w in (1, 2, 3):
        assert not verify_weighting(path(2), {(0, 1): w})[0]


def test_verify_incomplete():
    with pytest.raises(IncompleteWeighting):
        verify_weighting(path(3), {(0, 1): 1})


@given(connected_graphs(max_n=8), st.integers(0, 2**31))
def test_verify_matches_recomputation(G, seed):
    rng = random.Random(seed)
    w = {e: rng.randint(1, 2) for e in G.edges}
    sums = {v: sum(w[e] for e in G.edges if v in e) for v in range(G.n)}
    expected = [e for e in G.edges if sums[e[0]] == sums[e[1]]]
    ok, conflicts = verify_weighting(G, w)
    assert conflicts == expected and ok == (not expected)


def test_targets_json_roundtrip():
    obj = {"group": "Z2", "targets": {"0": [1], "1": [0], "2": [1]}}
    g, t = targets_from_json(obj)
    assert g == Z2 and t == {0: (1,), 1: (0,), 2: (1,)}
    assert targets_to_json(g, t) == obj
