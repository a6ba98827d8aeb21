"""Realize every enumerated sequence and compare char_seq and l(A) with the sequence."""

import argparse
import time

from alglength.protoseq import enumerate_sequences, validate
from alglength.realizer import realize_and_certify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for n in range(2, args.max_n + 1):
        t = time.perf_counter()
        seqs = sorted(enumerate_sequences(n))
        failures = []
        for M in seqs:
            cert = realize_and_certify(M, validate(M), max_dim=args.max_n, jobs=args.jobs)
            if not cert.certified:
                failures.append((M, cert.char_seq, cert.algebra_length))
        print(f"n={n}: {len(seqs)} sequences, {len(failures)} failures "
              f"({time.perf_counter() - t:.1f}s)")
        for f in failures:
            print("  ", f)


if __name__ == "__main__":
    main()
