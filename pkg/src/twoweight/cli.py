"""Command-line front end.

Exit status: 0 on Solved / valid / exists, 1 on a certified negative, 2 on
Unknown or any error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .census import census, summary_csv
from .errors import BudgetExceeded, InfeasibleParity, InfeasibleSum, ParseError, WeightingError
from .generators import generate
from .graph import Graph, canon, graph_from_json, parse_edgelist
from .oracle import DEFAULT_BUDGET, search_weighting
from .realizer import (
    group_colors,
    induced_colors,
    realize_group_coloring,
    realize_parity_bipartite,
    targets_from_json,
    verify_weighting,
)
from .solver import NO_WEIGHTING, SOLVED, STRATEGY_NAMES, SolveOptions, solve

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

log = logging.getLogger("twoweight")


@dataclass
class Config:
    command: str
    input: Optional[str] = None
    family: Optional[str] = None
    output: Optional[str] = None
    format: str = "edgelist"
    strategy: Optional[str] = None
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    verbosity: int = 0

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("budget must be positive")


def parse_weights(text: str, G: Graph) -> dict:
    """Lines ``u v w``; every line must name an edge of ``G``."""
    weights = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tok = body.split()
        if len(tok) != 3:
            raise ParseError("weight line must be 'u v w'", lineno)
        try:
            u, v, w = map(int, tok)
        except ValueError:
            raise ParseError("weight line must hold integers", lineno) from None
        e = canon(u, v)
        if not G.has_edge(*e):
            raise ParseError(f"{e} is not an edge of the graph", lineno)
        if e in weights:
            raise ParseError(f"edge {e} weighted twice", lineno)
        weights[e] = w
    return weights


def _load_graph(cfg: Config) -> Graph:
    if (cfg.input is None) == (cfg.family is None):
        raise ValueError("give exactly one of --input or --gen")
    if cfg.family is not None:
        return generate(cfg.family)
    text = Path(cfg.input).read_text(encoding="utf-8")
    if cfg.format == "json":
        return graph_from_json(json.loads(text))
    return parse_edgelist(text)


def _emit(cfg: Config, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_solve(cfg: Config, args) -> int:
    G = _load_graph(cfg)
    opts = SolveOptions(
        strategy=cfg.strategy,
        oracle_budget=cfg.budget,
        seed=cfg.seed,
        restarts=args.restarts,
    )
    report = solve(G, opts)
    _emit(cfg, _dump(report.to_json()))
    return {SOLVED: EXIT_OK, NO_WEIGHTING: EXIT_NEGATIVE}.get(report.status, EXIT_ERROR)


def cmd_verify(cfg: Config, args) -> int:
    G = _load_graph(cfg)
    w = parse_weights(Path(args.weights).read_text(encoding="utf-8"), G)
    ok, conflicts = verify_weighting(G, w)
    colors = induced_colors(G, w)
    _emit(cfg, _dump({
        "valid": ok,
        "conflicts": [list(e) for e in conflicts],
        "colors": {str(v): c for v, c in enumerate(colors)},
    }))
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_realize(cfg: Config, args) -> int:
    G = _load_graph(cfg)
    group, targets = targets_from_json(json.loads(Path(args.targets).read_text(encoding="utf-8")))
    try:
        if G.is_bipartite() and group.moduli == (2,):
            result = realize_parity_bipartite(G, targets)
            method = "parity"
        else:
            result = realize_group_coloring(G, group, targets)
            method = "group"
    except (InfeasibleSum, InfeasibleParity) as exc:
        _emit(cfg, _dump({"realized": False, "reason": str(exc)}))
        return EXIT_NEGATIVE
    colors = group_colors(G, result.group, result.weight)
    _emit(cfg, _dump({
        "realized": True,
        "method": method,
        "group": str(result.group),
        "rounds": result.rounds,
        "weights": [{"u": u, "v": v, "w": list(w)} for (u, v), w in sorted(result.weight.items())],
        "colors": {str(v): list(c) for v, c in enumerate(colors)},
    }))
    return EXIT_OK


def cmd_oracle(cfg: Config, args) -> int:
    G = _load_graph(cfg)
    res = search_weighting(G, args.k, cfg.budget)
    out = {
        "k": args.k,
        "exists": res.exists,
        "assignments": res.space,
        "covered": res.covered,
        "nodes": res.nodes,
    }
    if res.exists:
        out["weights"] = [{"u": u, "v": v, "w": w} for (u, v), w in sorted(res.weighting.items())]
    _emit(cfg, _dump(out))
    return EXIT_OK if res.exists else EXIT_NEGATIVE


def cmd_census(cfg: Config, args) -> int:
    opts = SolveOptions(oracle_budget=cfg.budget, seed=cfg.seed)
    rows = list(census(args.max_n, args.filter, dedup=not args.no_dedup, options=opts, jobs=args.jobs))
    _emit(cfg, "".join(r.to_json() + "\n" for r in rows))
    if args.summary:
        Path(args.summary).write_text(summary_csv(rows), encoding="utf-8")
    return EXIT_OK if all(r.agree for r in rows) else EXIT_ERROR


def cmd_gen(cfg: Config, args) -> int:
    if cfg.family is None:
        raise ValueError("gen needs --gen FAMILY")
    G = generate(cfg.family)
    _emit(cfg, _dump(G.to_json()) if cfg.format == "json" else G.to_edgelist())
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "realize": cmd_realize,
    "oracle": cmd_oracle,
    "census": cmd_census,
    "gen": cmd_gen,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="graph file")
    common.add_argument("--gen", "-g", dest="family", help="graph family, e.g. Kmn:3,5 or C:6")
    common.add_argument("--output", "-o", help="write output here instead of stdout")
    common.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle assignment budget")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--ci", action="store_true", help="refuse to run without an explicit --seed")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="twoweight", description="Vertex-colouring 2-edge-weightings of graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="find a vertex-colouring 2-edge-weighting")
    p.add_argument("--strategy", choices=STRATEGY_NAMES, default=None)
    p.add_argument("--restarts", type=int, default=200)

    p = sub.add_parser("verify", parents=[common], help="check a weighting file (lines 'u v w')")
    p.add_argument("--weights", "-w", required=True)

    p = sub.add_parser("realize", parents=[common], help="realize a target colouring over a group")
    p.add_argument("--targets", "-t", required=True, help='JSON {"group": "Z3", "targets": {...}}')

    p = sub.add_parser("oracle", parents=[common], help="exhaustive k-edge-weighting search")
    p.add_argument("-k", type=int, default=2)

    p = sub.add_parser("census", parents=[common], help="solver vs oracle on small bipartite graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--filter", default="all", help="e.g. 2-regular, 3-connected, odd-sides, even-side")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-dedup", action="store_true", help="keep every labelled graph")
    p.add_argument("--summary", help="write a CSV summary here")

    sub.add_parser("gen", parents=[common], help="write a generated graph")
    return parser


def run(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    if args.ci and args.seed is None:
        print("error: --ci requires an explicit --seed", file=sys.stderr)
        return EXIT_ERROR
    try:
        cfg = Config(
            command=args.command,
            input=args.input,
            family=args.family,
            output=args.output,
            format=args.format,
            strategy=getattr(args, "strategy", None),
            budget=args.budget,
            seed=0 if args.seed is None else args.seed,
            verbosity=args.verbose,
        )
        return COMMANDS[args.command](cfg, args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (WeightingError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
