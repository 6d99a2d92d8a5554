"""Dispatch a graph through the constructive strategies, then the oracle."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BudgetExceeded, InfeasibleBounds, NotApplicable, SearchFailed, TheoremViolation
from .graph import Edge, Graph, components
from .local_search import local_search_weighting
from .oracle import DEFAULT_BUDGET, search_weighting
from .realizer import IntWeighting, induced_colors, verify_weighting
from .strategies import (
    strategy_chi_bound,
    strategy_parity,
    strategy_special_vertex_closed,
    strategy_special_vertex_open,
    strategy_three_connected,
)

log = logging.getLogger(__name__)

SOLVED = "Solved"
NO_WEIGHTING = "NoWeightingExists"
UNKNOWN = "Unknown"

BIPARTITE_PIPELINE = (
    "parity",
    "three-connected",
    "special-vertex-closed",
    "special-vertex-open",
    "chi-bound",
    "oracle",
    "local-search",
)
GENERAL_PIPELINE = ("chi-bound", "oracle", "local-search")
STRATEGY_NAMES = BIPARTITE_PIPELINE


@dataclass
class SolveOptions:
    strategy: Optional[str] = None  # run only this strategy
    oracle_budget: int = DEFAULT_BUDGET
    use_oracle: bool = True
    seed: int = 0
    restarts: int = 200
    flips_per_edge: int = 10
    factor_restarts: int = 50


@dataclass
class SolveReport:
    status: str
    strategy: str
    weights: Optional[IntWeighting] = None
    colors: Optional[dict[int, int]] = None
    notes: dict = field(default_factory=dict)

    @property
    def solved(self) -> bool:
        return self.status == SOLVED

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "strategy": self.strategy,
            "weights": [
                {"u": u, "v": v, "w": w} for (u, v), w in sorted((self.weights or {}).items())
            ],
            "colors": {str(v): c for v, c in sorted((self.colors or {}).items())},
            "notes": self.notes,
        }


def _solved(G: Graph, w: IntWeighting, name: str, notes: dict) -> SolveReport:
    ok, conflicts = verify_weighting(G, w)
    if not ok:
        raise TheoremViolation(f"{name} produced conflicts {conflicts}")
    colors = dict(enumerate(induced_colors(G, w)))
    return SolveReport(SOLVED, name, dict(w), colors, notes)


def _runner(name: str, G: Graph, opts: SolveOptions, notes: dict) -> Callable[[], Optional[IntWeighting]]:
    if name == "parity":
        return lambda: strategy_parity(G, notes)
    if name == "three-connected":
        return lambda: strategy_three_connected(
            G, notes, seed=opts.seed, restarts=opts.restarts, flips_per_edge=opts.flips_per_edge
        )
    if name == "special-vertex-closed":
        return lambda: strategy_special_vertex_closed(G, notes)
    if name == "special-vertex-open":
        return lambda: strategy_special_vertex_open(G, notes)
    if name == "chi-bound":
        return lambda: strategy_chi_bound(G, notes=notes, seed=opts.seed, restarts=opts.factor_restarts)
    if name == "local-search":
        return lambda: local_search_weighting(G, 2, opts.restarts, opts.flips_per_edge, opts.seed)
    raise ValueError(f"unknown strategy {name!r}; choose from {', '.join(STRATEGY_NAMES)}")


def _solve_connected(G: Graph, opts: SolveOptions) -> SolveReport:
    if opts.strategy:
        pipeline = (opts.strategy,)
    elif G.is_bipartite():
        pipeline = BIPARTITE_PIPELINE
    else:
        pipeline = GENERAL_PIPELINE
    attempts: list[dict] = []
    for name in pipeline:
        if name == "oracle":
            if not opts.use_oracle:
                continue
            try:
                res = search_weighting(G, 2, opts.oracle_budget)
            except BudgetExceeded as exc:
                attempts.append({"strategy": name, "outcome": str(exc)})
                continue
            certificate = {"k": 2, "assignments": res.space, "covered": res.covered, "nodes": res.nodes}
            if res.weighting is None:
                return SolveReport(
                    NO_WEIGHTING, name, notes={"attempts": attempts, "certificate": certificate}
                )
            return _solved(G, res.weighting, name, {"attempts": attempts, "certificate": certificate})
        notes: dict = {}
        try:
            w = _runner(name, G, opts, notes)()
        except (NotApplicable, SearchFailed, InfeasibleBounds) as exc:
            attempts.append({"strategy": name, "outcome": f"{type(exc).__name__}: {exc}"})
            continue
        if w is None:
            attempts.append({"strategy": name, "outcome": "no witness"})
            continue
        label = notes.get("route", name)
        notes["attempts"] = attempts
        return _solved(G, w, label, notes)
    return SolveReport(UNKNOWN, "none", notes={"attempts": attempts})


def solve(G: Graph, options: Optional[SolveOptions] = None) -> SolveReport:
    opts = options or SolveOptions()
    comps = [c for c in components(G) if len(c) > 1]
    if any(len(c) == 2 for c in comps):
        return SolveReport(NO_WEIGHTING, "nice-check", notes={"reason": "not nice: graph has a K2 component"})
    if not comps:
        return _solved(G, {}, "trivial", {})
    if len(comps) == 1 and len(comps[0]) == G.n:
        return _solve_connected(G, opts)

    weights: dict[Edge, int] = {}
    names: list[str] = []
    parts = []
    status = SOLVED
    for comp in comps:
        H, labels = G.remove(set(range(G.n)) - set(comp))
        rep = _solve_connected(H, opts)
        parts.append({"vertices": list(labels), "status": rep.status, "strategy": rep.strategy})
        if rep.strategy not in names:
            names.append(rep.strategy)
        if rep.status == NO_WEIGHTING:
            return SolveReport(NO_WEIGHTING, rep.strategy, notes={"components": parts, **rep.notes})
        if rep.status == UNKNOWN:
            status = UNKNOWN
            continue
        for (a, b), w in rep.weights.items():
            weights[(labels[a], labels[b])] = w
    if status == UNKNOWN:
        return SolveReport(UNKNOWN, "+".join(names), notes={"components": parts})
    return _solved(G, weights, "+".join(names), {"components": parts})
