"""Tabulate realizable length values, B(n), gaps and interval counts per dimension."""

import argparse
import time
from math import ceil

from alglength.feasibility import b_of_n, b_recurrences_check, gaps, interval_count
from alglength.protoseq import enumerate_sequences, realizable_lengths


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>2} {'seqs':>7} {'values':>6} {'B(n)':>5} {'2^ceil(n/2)':>11}  secs  gaps")
    for n in range(2, args.max_n + 1):
        t = time.perf_counter()
        seqs = enumerate_sequences(n, jobs=args.jobs)
        secs = time.perf_counter() - t
        values = realizable_lengths(n)
        runs = " ".join(f"{a}" if a == b else f"{a}-{b}" for a, b in gaps(n)) or "-"
        print(f"{n:>2} {len(seqs):>7} {len(values):>6} {b_of_n(n):>5} "
              f"{2 ** ceil(n / 2):>11} {secs:5.1f}  {runs}")

    print("\ninterval counts [2^(n-k-1), 2^(n-k)-1]: enumerated / binary-rule bound")
    for n in range(4, args.max_n + 1):
        cells = []
        for k in range(2, n):
            c = interval_count(n, k)
            cells.append(f"k={k}:{c.enumerated}/{c.lower_bound}")
        print(f"n={n}: " + "  ".join(cells))

    print("\nB(n+2) >= 2B(n)+1 and B(n) >= 2^ceil(n/2) checks")
    for n in range(2, args.max_n + 1):
        r = b_recurrences_check(n)
        for name, lhs, rhs, ok in r.checks:
            print(f"  {name}: {lhs} vs {rhs} {'ok' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
