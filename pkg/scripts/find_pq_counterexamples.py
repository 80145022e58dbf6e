#!/usr/bin/env python3
"""Scan for semiprime dimensions that no clause of the pq classification covers.

    python3 scripts/find_pq_counterexamples.py --max-rank 10 --max-height 6 --cap 1000000
"""

import argparse
import json

from hwbound.classify import semiprime_scan, weight_label
from hwbound.primes import is_semiprime
from hwbound.rootsys import all_types


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-rank", type=int, default=10)
    ap.add_argument("--max-height", type=int, default=6)
    ap.add_argument("--cap", type=int, default=10 ** 6)
    ap.add_argument("--json", action="store_true", help="emit JSON records instead of text")
    args = ap.parse_args()

    hits, odd = 0, []
    for t in all_types(args.max_rank):
        for m in semiprime_scan(t, args.max_height, args.cap):
            hits += 1
            if m.tag == "UNMATCHED" or m.tag.endswith("AMBIGUOUS"):
                odd.append(m)
    if args.json:
        print(json.dumps([m.as_dict() for m in odd], indent=2, sort_keys=True))
        return
    print(f"{hits} semiprime dimensions scanned; {len(odd)} unmatched or ambiguous")
    for m in odd:
        p, q = is_semiprime(m.dim)
        print(f"  {m.lie_type!s:4s} {weight_label(m.weight):12s} dim {m.dim} = {p}*{q}  {m.tag}")


if __name__ == "__main__":
    main()
