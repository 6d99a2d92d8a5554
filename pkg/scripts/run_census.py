"""Run the bipartite census and print a per-strategy summary.

    python3 scripts/run_census.py --max-n 8 --jobs 4 --out census.jsonl
"""

import argparse
import time
from collections import Counter

from twoweight.census import census, summary_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--filter", default="all")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="write rows as JSON lines")
    args = ap.parse_args()

    start = time.perf_counter()
    rows = list(census(args.max_n, args.filter, jobs=args.jobs))
    elapsed = time.perf_counter() - start

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.writelines(r.to_json() + "\n" for r in rows)
    print(summary_csv(rows), end="")
    per_n = Counter(r.n for r in rows)
    print("graphs per n:", dict(sorted(per_n.items())))
    print(f"disagreements: {sum(not r.agree for r in rows)}  time: {elapsed:.1f}s")


if __name__ == "__main__":
    main()
