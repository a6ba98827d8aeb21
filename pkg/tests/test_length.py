import random

import pytest

from alglength.algebra import (
    assoc_family,
    change_basis,
    from_products,
    random_algebra,
    random_unit_fixing_basis,
    zero_mult,
)
from alglength.length import (
    CAP,
    FULL,
    STABILIZED,
    NotGeneratingError,
    algebra_length,
    char_seq,
    check_charseq_invariants,
    evaluate_word,
    format_word,
    generating_subspaces,
    graded_basis,
    irreducible_word_lengths,
    set_length,
    span_chain,
    word_length,
)
from alglength.linalg import GF, GF2, QQ, matrix_inverse, rref_basis, subspaces_containing
from alglength.maxlen import long_basis_algebra
from alglength.protoseq import validate
from alglength.realizer import canonical_generators, realize

from oracles import brute_algebra_length, recurrence_dims, word_char_seq, word_dims


def e(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def test_span_chain_examples():
    c = span_chain(long_basis_algebra(4), [e(4, 1)])
    assert c.dims == (1, 2, 3, 3, 4) and c.generated and c.stop_reason == FULL
    c = span_chain(zero_mult(3), [e(3, 1)])
    assert c.dims == (1, 2, 2) and not c.generated and c.stop_reason == STABILIZED
    c = span_chain(assoc_family(4, 3), [e(4, 1)])
    assert c.dims == (1, 2, 3, 4) and c.length == 3


def test_span_chain_levels_are_nested():
    c = span_chain(long_basis_algebra(6), [e(6, 1)])
    assert c.levels[0] == rref_basis([e(6, 0)], GF2)
    for a, b in zip(c.levels, c.levels[1:]):
        assert a <= b


def test_char_seq_examples():
    assert char_seq(long_basis_algebra(5), [e(5, 1)]) == (0, 1, 2, 4, 8)
    assert char_seq(zero_mult(4), [e(4, 1), e(4, 2), e(4, 3)]) == (0, 1, 1, 1)
    A = assoc_family(6, 3)
    assert char_seq(A, [e(6, 1), e(6, 4), e(6, 5)]) == (0, 1, 1, 1, 2, 3)


def test_set_length_examples():
    assert set_length(assoc_family(6, 3), [e(6, 1), e(6, 4), e(6, 5)]) == 3
    for n in (2, 3, 6):
        assert set_length(zero_mult(n), [e(n, i) for i in range(1, n)]) == 1
    assert set_length(long_basis_algebra(5), [e(5, 1)]) == 8


def test_non_generating_sets_raise():
    with pytest.raises(NotGeneratingError):
        char_seq(zero_mult(3), [e(3, 1)])
    with pytest.raises(NotGeneratingError):
        set_length(zero_mult(3), [e(3, 0)])
    with pytest.raises(NotGeneratingError):
        graded_basis(zero_mult(3), [e(3, 2)])


def test_algebra_length_examples():
    assert algebra_length(long_basis_algebra(4)) == 4
    assert algebra_length(zero_mult(4)) == 1
    assert algebra_length(assoc_family(5, 2)) == 2
    with pytest.raises(ValueError):
        algebra_length(zero_mult(3, QQ))


def test_algebra_length_parallel_agrees():
    A = long_basis_algebra(5)
    assert algebra_length(A, jobs=2) == algebra_length(A) == 8


def test_irreducible_word_lengths_examples():
    assert irreducible_word_lengths(long_basis_algebra(4), [e(4, 1)]) == (1, 2, 4)
    assert irreducible_word_lengths(zero_mult(3), [e(3, 1), e(3, 2)]) == (1, 1)
    assert irreducible_word_lengths(assoc_family(4, 3), [e(4, 1)]) == (1, 2, 3)


def test_graded_basis_examples():
    G = graded_basis(long_basis_algebra(4), [e(4, 1)])
    assert G.words == ((), 0, (0, 0), ((0, 0), (0, 0)))
    assert G.t1 == G.t2 == {2: 1, 3: 2}
    G = graded_basis(zero_mult(3), [e(3, 1), e(3, 2)])
    assert G.words == ((), 0, 1) and G.t1 == {} and G.t2 == {}
    M = (0, 1, 2, 3, 5, 10, 20, 23)
    w = validate(M)
    A = realize(M, w)
    G = graded_basis(A, canonical_generators(M))
    assert G.t_table() == w.table()
    assert G.t_table() == [(2, 1, 1), (3, 1, 2), (4, 2, 3), (5, 4, 4), (6, 5, 5), (7, 3, 6)]


def test_format_word():
    assert format_word(((0, 0), 1)) == "(a1*a1)*a2"
    assert format_word((), ["x"]) == "1"
    assert word_length(((0, 0), (1, (0, 1)))) == 5


def test_check_charseq_invariants_examples():
    assert check_charseq_invariants((0, 1, 2, 4, 8)).ok
    r = check_charseq_invariants((0, 1, 2, 4, 7))
    assert not r["top_dichotomy"].passed and r["top_dichotomy"].index == 4
    r = check_charseq_invariants((0, 1, 2, 5))
    assert not r["power_bound"].passed and r["power_bound"].index == 3


def _assert_graded_properties(A, S):
    G = graded_basis(A, S)
    n = A.dim
    assert rref_basis(G.vectors, A.field, n).rank == n
    assert G.words[0] == () and G.vectors[0] == A.unit
    m = char_seq(A, S)
    assert G.lengths == m
    for i, w in enumerate(G.words):
        assert word_length(w) == m[i]
        assert evaluate_word(A, S, w) == G.vectors[i]
    for k in G.t1:
        assert A(G.vectors[G.t1[k]], G.vectors[G.t2[k]]) == G.vectors[k]
        assert G.t1[k] < k and G.t2[k] < k
    ks = sorted(G.t1)
    for i, h1 in enumerate(ks):
        for h2 in ks[i + 1:]:
            assert G.t1[h1] < G.t1[h2] or G.t2[h1] < G.t2[h2]
    chain = span_chain(A, S)
    for r, idx in enumerate(G.levels):
        assert rref_basis([G.vectors[i] for i in idx], A.field, n) == chain.levels[r]
    # greedy generator subset keeps input order
    assert list(G.generators) == sorted(G.generators)


def test_span_chain_matches_word_oracle(small_random_algebras):
    r = random.Random(11)
    checked = 0
    for A in small_random_algebras:
        n = A.dim
        elems = list(A.field.elements())
        for _ in range(6):
            S = [tuple(r.choice(elems) for _ in range(n)) for _ in range(r.randint(1, 2))]
            chain = span_chain(A, S)
            oracle = word_dims(A, S)
            if chain.generated:
                assert chain.dims == tuple(oracle[: len(chain.dims)])
                assert word_char_seq(A, S) == char_seq(A, S)
                _assert_graded_properties(A, S)
                checked += 1
            else:
                assert oracle[-1] < n
                assert chain.dims[-1] == oracle[-1]
    assert checked > 20


def test_span_chain_matches_literal_recurrence(small_random_algebras):
    r = random.Random(5)
    for A in small_random_algebras:
        n = A.dim
        elems = list(A.field.elements())
        S = [tuple(r.choice(elems) for _ in range(n))]
        cap = 2 ** (n - 2)
        L = recurrence_dims(A, S, cap)
        full = span_chain(A, S, run_to_cap=True)
        assert full.levels == tuple(L[: len(full.levels)])
        assert span_chain(A, S).levels[-1] == full.levels[-1]


def test_run_to_cap_reports_cap():
    c = span_chain(zero_mult(4), [e(4, 1)], run_to_cap=True)
    assert c.stop_reason == CAP and len(c.levels) == 5


def test_stall_then_growth_is_not_truncated():
    # e1^2 = e2, e2^2 = e3, e3^2 = e4: lengths 1, 2, 4, 8 with stalls at 3, 5, 6, 7
    c = span_chain(long_basis_algebra(5), [e(5, 1)])
    assert c.dims == (1, 2, 3, 3, 4, 4, 4, 4, 5)


@pytest.mark.parametrize("A", [long_basis_algebra(3), long_basis_algebra(4), zero_mult(3),
                               zero_mult(4), assoc_family(4, 2), assoc_family(4, 3)],
                         ids=["long3", "long4", "zero3", "zero4", "assoc42", "assoc43"])
def test_algebra_length_matches_brute_force(A):
    assert algebra_length(A) == brute_algebra_length(A)


def test_algebra_length_brute_force_random(small_random_algebras):
    for A in small_random_algebras:
        if A.dim <= 4 and A.field == GF2:
            assert algebra_length(A) == brute_algebra_length(A)


def test_algebra_length_invariant_under_basis_change(small_random_algebras):
    r = random.Random(9)
    for A in small_random_algebras[:12]:
        B = random_unit_fixing_basis(A.dim, A.field, r)
        assert algebra_length(change_basis(A, B)) == algebra_length(A)


def test_char_seq_depends_only_on_span():
    r = random.Random(2)
    for A in [random_algebra(5, GF2, r), long_basis_algebra(5), random_algebra(4, GF(3), r)]:
        for V in subspaces_containing(A.dim, A.unit, A.field):
            if not span_chain(A, V.basis).generated:
                continue
            # a second basis of V: an invertible recombination of its rows
            k = len(V.basis)
            while True:
                mix = [[r.choice(list(A.field.elements())) for _ in range(k)] for _ in range(k)]
                try:
                    matrix_inverse(A.field, mix)
                    break
                except ValueError:
                    continue
            other = [tuple(A.field(sum(mix[i][j] * V.basis[j][t] for j in range(k)))
                           for t in range(A.dim)) for i in range(k)]
            assert rref_basis(other, A.field, A.dim) == V
            assert char_seq(A, other) == char_seq(A, V.basis)


def test_generated_sequences_validate(small_random_algebras):
    for A in small_random_algebras:
        for V, chain in generating_subspaces(A):
            m = char_seq(A, V.basis)
            assert len(m) == A.dim and m[-1] == chain.length
            assert validate(m) is not None
            assert check_charseq_invariants(m).ok


def test_rational_field_generating_set_length():
    A = assoc_family(5, 4, QQ)
    assert char_seq(A, [(0, 1, 0, 0, 0)]) == (0, 1, 2, 3, 4)
    B = from_products(QQ, 3, {(1, 1): (0, 0, 2)})
    assert char_seq(B, [(5, 3, 0)]) == (0, 1, 2)


def test_dimension_one_algebra():
    A = from_products(GF2, 1)
    c = span_chain(A, [(1,)])
    assert c.generated and c.length == 0
    assert algebra_length(A) == 0
