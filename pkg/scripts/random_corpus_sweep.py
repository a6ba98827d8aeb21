"""Sweep a seeded random corpus: invariants on every generating subspace, max-length equivalence."""

import argparse
import time
from collections import Counter

from alglength.corpus import random_corpus
from alglength.length import algebra_length, char_seq, check_charseq_invariants, generating_subspaces
from alglength.maxlen import find_long_basis
from alglength.protoseq import validate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=2026)
    ap.add_argument("--dims", type=int, nargs="+", default=[4, 5])
    args = ap.parse_args()

    t = time.perf_counter()
    seqs = Counter()
    lengths = Counter()
    violations = mismatches = 0
    for kind, A in random_corpus(args.count, dims=tuple(args.dims), seed=args.seed):
        for V, _ in generating_subspaces(A):
            m = char_seq(A, V.basis)
            seqs[m] += 1
            if validate(m) is None or not check_charseq_invariants(m).ok:
                violations += 1
                print("violation:", kind, m)
        l = algebra_length(A)
        lengths[kind, A.dim, l] += 1
        if (find_long_basis(A) is not None) != (l == 2 ** (A.dim - 2)):
            mismatches += 1
            print("equivalence mismatch:", kind, A.dim, l)

    print(f"{args.count} algebras, {sum(seqs.values())} generating subspaces, "
          f"{len(seqs)} distinct sequences, {time.perf_counter() - t:.1f}s")
    print(f"violations={violations} equivalence mismatches={mismatches}")
    print("\nalgebra lengths by kind and dimension:")
    for (kind, n, l), c in sorted(lengths.items()):
        print(f"  {kind:<15} n={n} l={l}: {c}")


if __name__ == "__main__":
    main()
