#!/usr/bin/env python3
"""Time the isomorphism-class enumeration for each order up to 7."""

from __future__ import annotations

import argparse
import time

from cdgraphs import enumeration
from cdgraphs.enumeration import enumerate_all, enumerate_connected, eligible_catalog


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=7)
    args = ap.parse_args()
    print(f"{'n':>2} {'all':>6} {'connected':>9} {'seconds':>8}")
    for n in range(1, args.max_order + 1):
        enumeration._orbit_representatives.cache_clear()  # time cold runs
        t0 = time.perf_counter()
        total = len(enumerate_all(n))
        conn = len(enumerate_connected(n))
        print(f"{n:>2} {total:>6} {conn:>9} {time.perf_counter() - t0:>8.3f}")
    t0 = time.perf_counter()
    cat = eligible_catalog()
    print(f"eligible 7-vertex graphs: {len(cat)} ({time.perf_counter() - t0:.3f}s)")


if __name__ == "__main__":
    main()
