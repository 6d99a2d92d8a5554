"""Scan theta graphs with bounded path lengths and report the members with
no vertex-colouring 2-edge-weighting."""

import argparse
import itertools

from twoweight.generators import theta
from twoweight.oracle import search_weighting


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=7)
    ap.add_argument("--paths", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--max-edges", type=int, default=22)
    ap.add_argument("--bipartite-only", action="store_true")
    args = ap.parse_args()

    scanned = 0
    for k in args.paths:
        for lengths in itertools.combinations_with_replacement(range(1, args.max_len + 1), k):
            if lengths.count(1) > 1 or sum(lengths) > args.max_edges:
                continue
            G = theta(*lengths)
            if args.bipartite_only and not G.is_bipartite():
                continue
            scanned += 1
            if search_weighting(G, 2).exists:
                continue
            has3 = search_weighting(G, 3, budget=3**args.max_edges).exists
            sides = sorted(map(len, (G.bipartition.U, G.bipartition.W))) if G.is_bipartite() else None
            print(f"theta{lengths}: no 2-weighting, 3-weighting={has3}, sides={sides}")
    print(f"scanned {scanned} theta graphs")


if __name__ == "__main__":
    main()
