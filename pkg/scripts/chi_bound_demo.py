"""High-minimum-degree construction on K_{d,d}: timing, residues and factor
degrees."""

import argparse
import time
from collections import Counter

from twoweight.factors import choose_degree_bounds, chromatic_partition
from twoweight.generators import complete_bipartite
from twoweight.realizer import induced_colors
from twoweight.strategies import strategy_chi_bound


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("sizes", type=int, nargs="*", default=[16, 17, 20, 24])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for d in args.sizes:
        G = complete_bipartite(d, d)
        classes = chromatic_partition(G)
        k = len(classes)
        start = time.perf_counter()
        notes = {}
        w = strategy_chi_bound(G, classes, notes=notes, seed=args.seed)
        elapsed = time.perf_counter() - start
        c = induced_colors(G, w)
        bounds = choose_degree_bounds(G, classes)
        residues = [Counter(c[v] % (2 * k) for v in part) for part in classes]
        print(f"K{d},{d}: {elapsed:.2f}s  factor edges {notes['factor_edges']}  "
              f"bounds {bounds.lower[0]}/{bounds.upper[0]}  residues per class {[dict(r) for r in residues]}")


if __name__ == "__main__":
    main()
