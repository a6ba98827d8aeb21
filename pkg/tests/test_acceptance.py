"""Acceptance checks, one test per criterion; each prints a PASS/FAIL line."""

from math import ceil

import pytest

from alglength.algebra import assoc_family
from alglength.corpus import random_corpus
from alglength.feasibility import (
    FEASIBLE,
    INFEASIBLE,
    b_of_n,
    binary_sufficient,
    interval_count,
    top_half_verdict,
)
from alglength.length import algebra_length, char_seq, check_charseq_invariants, generating_subspaces
from alglength.linalg import GF2
from alglength.maxlen import find_long_basis, long_basis_algebra
from alglength.protoseq import (
    append_double,
    append_succ,
    check_witness,
    enumerate_sequences,
    prepend_one,
    realizable_lengths,
    validate,
)
from alglength.realizer import canonical_generators, realize

from oracles import recurrence_dims, word_char_seq

CORPUS_SIZE = 500
CORPUS_SEED = 2026


@pytest.fixture(scope="module")
def corpus():
    return list(random_corpus(CORPUS_SIZE, dims=(4, 5), field=GF2, seed=CORPUS_SEED))


def test_criterion_01_powers_of_two(criterion):
    bad = []
    for n in range(3, 9):
        A = long_basis_algebra(n)
        expected = tuple([0] + [2 ** (h - 1) for h in range(1, n)])
        e1 = A.basis(1)
        if char_seq(A, [e1]) != expected:
            bad.append(n)
        # independent route: word enumeration for the small cases
        if n <= 5 and word_char_seq(A, [e1]) != expected:
            bad.append(("oracle", n))
    assert criterion(1, "char seq of e1 in long algebra is 0,1,2,4,...", not bad,
                     f"n=3..8 failures={bad}")


def test_criterion_02_small_realizable_sets(criterion):
    expected = {2: {1}, 3: {1, 2}, 4: {1, 2, 3, 4}, 5: {1, 2, 3, 4, 5, 6, 8}}
    got = {n: set(realizable_lengths(n)) for n in expected}
    ok = got == expected and 7 not in got[5] and max(got[5]) == 8
    assert criterion(2, "realizable sets for n = 2..5", ok, f"got={got}")


def test_criterion_03_top_half_gaps(criterion):
    bad = []
    for n in range(5, 10):
        half = 2 ** (n - 3)
        top = {v for v in realizable_lengths(n) if v > half}
        expected = {half + 2**p for p in range(n - 2)}
        if top != expected:
            bad.append(n)
        for l in range(half + 1, 2 ** (n - 2) + 1):
            want = FEASIBLE if l in expected else INFEASIBLE
            if top_half_verdict(l, n) != want:
                bad.append((n, l))
    assert criterion(3, "values above 2^(n-3) are 2^(n-3)+2^p", not bad, f"n=5..9 failures={bad}")


def test_criterion_04_b_values(criterion):
    B = {n: b_of_n(n) for n in range(2, 10)}
    verbatim = [B[n] for n in (2, 3, 4, 5)] == [1, 2, 4, 6]
    recur = all(B[n + 2] >= 2 * B[n] + 1 for n in range(2, 8))
    lower = all(B[n] >= 2 ** ceil(n / 2) for n in range(6, 10))
    assert criterion(4, "B(n) values and bounds", verbatim and recur and lower,
                     f"B={[B[n] for n in range(2, 10)]}")


def test_criterion_05_sufficiency_soundness(criterion):
    unsound = [(l, n) for n in range(2, 10) for l in range(1, 2 ** (n - 2) + 1)
               if binary_sufficient(l, n) and l not in realizable_lengths(n)]
    witness = not binary_sufficient(23, 8) and 23 in realizable_lengths(8)
    M = (0, 1, 2, 3, 5, 10, 20, 23)
    w = validate(M)
    witness = witness and w is not None
    if witness:
        A = realize(M, w)
        witness = char_seq(A, canonical_generators(M)) == M
    assert criterion(5, "binary rule is sound; 23 in dim 8 is realizable", not unsound and witness,
                     f"unsound={unsound[:5]} witness_case={witness}")


def test_criterion_06_interval_counts(criterion):
    bad = []
    for n in range(6, 10):
        c = interval_count(n, 2)
        if c.enumerated != n - 2:
            bad.append(("k=2", n, c.enumerated))
        for k in range(2, n):
            c = interval_count(n, k)
            size = c.high - c.low + 1
            if k > ceil(n / 2) and c.enumerated != size:
                bad.append(("full", n, k, c.enumerated, size))
            if c.lower_bound > c.enumerated:
                bad.append(("bound", n, k, c.lower_bound, c.enumerated))
            if c.exact is not None and c.exact != c.enumerated:
                bad.append(("closed", n, k, c.exact, c.enumerated))
    assert criterion(6, "interval counts", not bad, f"n=6..9 failures={bad}")


def test_criterion_07_realization_certified(criterion):
    seq_bad, len_bad, total = [], [], 0
    for n in range(2, 7):
        for M in sorted(enumerate_sequences(n)):
            total += 1
            A = realize(M, validate(M), GF2)
            if char_seq(A, canonical_generators(M)) != M:
                seq_bad.append(M)
            if n <= 5 and algebra_length(A) != M[-1]:
                len_bad.append(M)
    assert criterion(7, "zero-padded realizations certified", not seq_bad and not len_bad,
                     f"sequences={total} char_seq failures={seq_bad} length failures={len_bad}")


def test_criterion_08_transform_laws(criterion):
    bad, total = [], 0
    for n in range(2, 7):
        for M in enumerate_sequences(n):
            w = validate(M)
            for op, expect in [(prepend_one, M[-1]), (append_double, 2 * M[-1]),
                               (append_succ, M[-1] + 1)]:
                total += 1
                M2, w2 = op(M, w)
                if check_witness(M2, w2) or validate(M2) is None or M2[-1] != expect:
                    bad.append((op.__name__, M))
    assert criterion(8, "transforms preserve validity", not bad, f"checks={total} failures={bad}")


def test_criterion_09_invariant_fuzzing(corpus, criterion):
    violations, sequences = [], 0
    for idx, (kind, A) in enumerate(corpus):
        n = A.dim
        for j, (V, chain) in enumerate(generating_subspaces(A)):
            m = char_seq(A, V.basis)
            sequences += 1
            problems = []
            if len(m) != n or m[-1] != chain.length:
                problems.append("shape")
            if validate(m) is None:
                problems.append("not proto-characteristic")
            report = check_charseq_invariants(m)
            problems += [c.name for c in report.checks if not c.passed]
            # the two plain bounds again, written out here
            if any(m[h] > 2 ** (h - 1) for h in range(1, n)):
                problems.append("power bound (direct)")
            if any(m[h + 1] > 2 * m[h] for h in range(1, n - 1)):
                problems.append("doubling bound (direct)")
            # spot-check l(S) against the literal span recurrence
            if j == 0 and idx % 10 == 0:
                L = recurrence_dims(A, V.basis, 2 ** (n - 2))
                first_full = next(k for k, U in enumerate(L) if U.rank == n)
                if first_full != chain.length:
                    problems.append("recurrence mismatch")
            if problems:
                violations.append((idx, kind, m, problems))
    assert criterion(9, "invariant fuzzing over all generating subspaces", not violations,
                     f"algebras={len(corpus)} sequences={sequences} violations={len(violations)}")


def test_criterion_10_max_length_equivalence(corpus, criterion):
    mismatches, maximal = [], 0
    for idx, (kind, A) in enumerate(corpus):
        is_max = algebra_length(A) == 2 ** (A.dim - 2)
        maximal += is_max
        if (find_long_basis(A) is not None) != is_max:
            mismatches.append((idx, kind))
    assoc_bad = [(n, l) for n in range(2, 7) for l in range(1, n)
                 if algebra_length(assoc_family(n, l)) != l]
    ok = not mismatches and not assoc_bad and 0 < maximal < len(corpus)
    assert criterion(10, "long basis exists iff maximal length", ok,
                     f"maximal={maximal}/{len(corpus)} mismatches={mismatches} assoc={assoc_bad}")


def test_criterion_11_associative_baseline(criterion):
    bad = []
    for n in range(2, 7):
        values = {algebra_length(assoc_family(n, l)) for l in range(1, n)}
        if values != set(range(1, n)):
            bad.append((n, sorted(values)))
    assert criterion(11, "associative family attains 1..n-1", not bad, f"n=2..6 failures={bad}")
