"""Named and seeded random graph families.

Family strings::

    Kmn:3,5            complete bipartite K_{3,5}
    K:5                complete graph
    C:6                cycle
    P:4                path on 4 vertices
    Q:3                hypercube
    theta:3,3,3        two branch vertices joined by paths of these lengths
    regbip:r=3,n=5,seed=7
    randbip:m=3,n=4,p=0.5,seed=1
    rand3c:n=10,seed=1  random 3-connected non-regular bipartite
    gnp:n=8,p=0.4,seed=2[,connected=1]
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import BadSpec, GenerationFailed
from .graph import Graph, build_graph, component_count, vertex_connectivity

MAX_TRIES = 1000


@dataclass(frozen=True)
class FamilySpec:
    family: str
    args: tuple[int, ...] = ()
    params: dict = field(default_factory=dict, compare=False)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        name, _, rest = text.strip().partition(":")
        name = name.strip()
        args: list[int] = []
        params: dict = {}
        for tok in filter(None, (t.strip() for t in rest.split(","))):
            if "=" in tok:
                key, _, val = tok.partition("=")
                try:
                    params[key.strip()] = float(val) if "." in val else int(val)
                except ValueError:
                    raise BadSpec(f"bad value in {tok!r}") from None
            else:
                try:
                    args.append(int(tok))
                except ValueError:
                    raise BadSpec(f"bad argument {tok!r} in {text!r}") from None
        return cls(name, tuple(args), params)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadSpec("complete bipartite sides must be positive")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadSpec("complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadSpec("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise BadSpec("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise BadSpec("hypercube dimension must be >= 1")
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def theta(*lengths: int) -> Graph:
    """Vertices 0 and 1 joined by internally disjoint paths of the given
    lengths; internal vertices are numbered path by path."""
    if len(lengths) < 3:
        raise BadSpec("theta graph needs at least three paths")
    if any(l < 1 for l in lengths):
        raise BadSpec("path lengths must be positive")
    if sum(1 for l in lengths if l == 1) > 1:
        raise BadSpec("two paths of length 1 would be parallel edges")
    edges = []
    nxt = 2
    for l in lengths:
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return build_graph(nxt, edges)


def regular_bipartite(r: int, n: int, seed: int = 0) -> Graph:
    """Connected r-regular bipartite graph on 2n vertices.

    Starts from the circulant i ~ n + (i + j) mod n, j < r, scrambles it with
    random degree-preserving swaps and relabels W at random; retried until
    connected.
    """
    if not 1 <= r <= n:
        raise BadSpec("need 1 <= r <= n")
    if r == 1 and n > 1:
        raise BadSpec("a 1-regular graph on more than 2 vertices is disconnected")
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        edges = {(i, (i + j) % n) for i in range(n) for j in range(r)}
        pool = sorted(edges)
        for _ in range(10 * r * n):
            (a, b), (c, d) = rng.sample(pool, 2)
            if a == c or b == d or (a, d) in edges or (c, b) in edges:
                continue
            edges -= {(a, b), (c, d)}
            edges |= {(a, d), (c, b)}
            pool = sorted(edges)
        perm = list(range(n))
        rng.shuffle(perm)
        G = build_graph(2 * n, [(i, n + perm[j]) for i, j in edges])
        if component_count(G) == 1:
            return G
    raise GenerationFailed(f"no simple connected {r}-regular bipartite graph in {MAX_TRIES} tries")


def random_bipartite(a: int, b: int, p: float, seed: int = 0) -> Graph:
    if a < 1 or b < 1 or not 0 <= p <= 1:
        raise BadSpec("need positive sides and 0 <= p <= 1")
    rng = random.Random(seed)
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b) if rng.random() < p])


def random_3connected_nonregular_bipartite(n: int, seed: int = 0) -> Graph:
    if n < 7:
        raise BadSpec("3-connected non-regular bipartite graphs need n >= 7")
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        a = rng.randint(3, n - 3)
        p = rng.uniform(0.45, 0.95)
        G = random_bipartite(a, n - a, p, seed=rng.randrange(2**32))
        if G.min_degree < 3 or G.is_regular():
            continue
        if vertex_connectivity(G) >= 3:
            return G
    raise GenerationFailed(f"no 3-connected non-regular bipartite graph on {n} vertices")


def gnp(n: int, p: float, seed: int = 0, connected: bool = False) -> Graph:
    rng = random.Random(seed)
    for _ in range(MAX_TRIES):
        G = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if not connected or component_count(G) == 1:
            return G
    raise GenerationFailed(f"no connected G({n}, {p}) sample in {MAX_TRIES} tries")


def _need(spec: FamilySpec, count: int) -> tuple[int, ...]:
    if len(spec.args) != count:
        raise BadSpec(f"{spec.family} takes {count} positional argument(s)")
    return spec.args


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam = spec.family.lower()
    p = spec.params
    try:
        if fam == "kmn":
            G = complete_bipartite(*_need(spec, 2))
        elif fam == "k":
            G = complete(*_need(spec, 1))
        elif fam == "c":
            G = cycle(*_need(spec, 1))
            assert G.is_regular() and G.min_degree == 2
        elif fam == "p":
            G = path(*_need(spec, 1))
        elif fam == "q":
            G = hypercube(*_need(spec, 1))
            assert G.is_bipartite() and G.is_regular()
        elif fam == "theta":
            G = theta(*spec.args)
            assert vertex_connectivity(G) == 2
        elif fam == "regbip":
            G = regular_bipartite(int(p["r"]), int(p["n"]), int(p.get("seed", 0)))
            assert G.is_regular() and G.is_bipartite() and component_count(G) == 1
        elif fam == "randbip":
            G = random_bipartite(int(p["m"]), int(p["n"]), float(p["p"]), int(p.get("seed", 0)))
        elif fam == "rand3c":
            G = random_3connected_nonregular_bipartite(int(p["n"]), int(p.get("seed", 0)))
            assert G.is_bipartite() and not G.is_regular()
        elif fam == "gnp":
            G = gnp(int(p["n"]), float(p["p"]), int(p.get("seed", 0)), bool(p.get("connected", 0)))
        else:
            raise BadSpec(f"unknown family {spec.family!r}")
    except KeyError as exc:
        raise BadSpec(f"{spec.family}: missing parameter {exc}") from None
    except TypeError as exc:
        raise BadSpec(f"{spec.family}: {exc}") from None
    return G
