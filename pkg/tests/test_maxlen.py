import random

import pytest

from alglength.algebra import assoc_family, change_basis, from_products, random_unit_fixing_basis, zero_mult
from alglength.corpus import random_corpus
from alglength.length import algebra_length, char_seq
from alglength.linalg import GF, GF2, QQ, basis_vector
from alglength.maxlen import (
    LongBasis,
    algebra_from_presentation,
    find_long_basis,
    is_max_length,
    long_basis_algebra,
    long_basis_violations,
    presentation,
    random_long_basis_algebra,
    verify_long_basis,
)


def test_long_basis_algebra_lengths():
    assert algebra_length(long_basis_algebra(4)) == 4
    assert algebra_length(long_basis_algebra(3)) == 2
    A = long_basis_algebra(5)
    assert char_seq(A, [A.basis(1)])[-1] == 8
    with pytest.raises(ValueError):
        long_basis_algebra(2)


def test_find_long_basis_examples():
    A = long_basis_algebra(4)
    B = find_long_basis(A)
    assert B is not None and verify_long_basis(A, B.vectors)
    assert find_long_basis(zero_mult(4)) is None
    assert find_long_basis(assoc_family(4, 3)) is None
    with pytest.raises(ValueError):
        find_long_basis(long_basis_algebra(4, QQ))


def test_is_max_length_examples():
    assert is_max_length(long_basis_algebra(5))
    assert not is_max_length(assoc_family(5, 4))
    assert not is_max_length(zero_mult(3))


def test_presentation_examples():
    A = long_basis_algebra(4)
    P = presentation(A, find_long_basis(A))
    assert all(not any(c) for c in P.cross_coeffs.values())
    assert not any(P.top_coeffs)

    n = 4
    products = {(i, i): basis_vector(GF2, n, i + 1) for i in range(1, n - 1)}
    products[2, 1] = basis_vector(GF2, n, 1)
    A = from_products(GF2, n, products)
    assert algebra_length(A) == 4
    basis = LongBasis(tuple(A.basis(i) for i in range(n)))
    P = presentation(A, basis)
    for (p, q), c in P.cross_coeffs.items():
        expected = [0] * (max(p, q) + 1)
        if (p, q) == (2, 1):
            expected[1] = 1
        assert list(c) == expected


def test_presentation_round_trip():
    r = random.Random(4)
    for n in (3, 4, 5):
        A = random_long_basis_algebra(n, GF2, r)
        B = find_long_basis(A)
        rebuilt = algebra_from_presentation(presentation(A, B))
        assert rebuilt == change_basis(A, B.vectors)


def test_presentation_rejects_bad_basis():
    A = long_basis_algebra(4)
    with pytest.raises(ValueError):
        presentation(A, LongBasis(tuple(A.basis(i) for i in (0, 2, 1, 3))))


@pytest.mark.parametrize("n,p,q,r", [(4, 1, 2, 3), (5, 2, 1, 3), (5, 1, 3, 4), (5, 3, 2, 4)])
def test_perturbation_breaks_containment_exactly(n, p, q, r):
    base = long_basis_algebra(n)
    products = {(i, j): base.table[i][j] for i in range(1, n) for j in range(1, n)}
    products[p, q] = basis_vector(GF2, n, r)
    A = from_products(GF2, n, products)
    basis = [A.basis(i) for i in range(n)]
    assert long_basis_violations(A, basis) == [(p, q)]


def test_verify_only_over_rationals():
    A = long_basis_algebra(4, QQ)
    assert verify_long_basis(A, [A.basis(i) for i in range(4)])
    assert not verify_long_basis(A, [A.basis(i) for i in (0, 1, 3, 2)])


def test_long_bases_give_power_sequence():
    for kind, A in random_corpus(40, dims=(4, 5), seed=3):
        B = find_long_basis(A)
        if B is not None:
            n = A.dim
            assert char_seq(A, [B.vectors[1]]) == tuple([0] + [2 ** (h - 1) for h in range(1, n)])


def test_equivalence_small_corpus():
    for kind, A in random_corpus(40, dims=(3, 4, 5), seed=8):
        assert is_max_length(A) == (algebra_length(A) == 2 ** (A.dim - 2)), kind


def test_equivalence_other_field():
    r = random.Random(6)
    A = random_long_basis_algebra(4, GF(3), r)
    assert is_max_length(A) and algebra_length(A) == 4
    B = change_basis(zero_mult(4, GF(3)), random_unit_fixing_basis(4, GF(3), r))
    assert not is_max_length(B)
