"""Concrete algebras realizing proto-characteristic sequences.

The construction is zero-padded: ``e_{t1(k)} e_{t2(k)} = e_k`` for every
witnessed index and all other products of non-unit basis vectors vanish.
Since witness pairs are distinct, every basis vector has a unique shortest
derivation from ``e_1..e_{k1}`` and the filtration reproduces the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, from_products
from .length import algebra_length, char_seq
from .linalg import GF2, Field, basis_vector
from .protoseq import CharSeq, ProtoWitness, check_witness

ORACLE_MAX_DIM = 6


def realize(M: Sequence[int], w: ProtoWitness, field: Field = GF2) -> Algebra:
    m = CharSeq(M)
    problems = check_witness(m, w)
    if problems:
        raise ValueError("invalid witness: " + "; ".join(problems))
    n = len(m)
    products = {}
    for k, a, b in w.table():
        if (a, b) in products:
            raise RuntimeError(f"witness pair {(a, b)} used twice")
        products[a, b] = basis_vector(field, n, k)
    return from_products(field, n, products)


def canonical_generators(M: Sequence[int], field: Field = GF2) -> list:
    """``e_1, ..., e_{k1}`` as vectors."""
    m = CharSeq(M)
    return [basis_vector(field, len(m), i) for i in range(1, m.k1 + 1)]


@dataclass(frozen=True)
class Certificate:
    sequence: CharSeq
    char_seq: CharSeq
    algebra_length: int

    @property
    def char_seq_matches(self) -> bool:
        return self.char_seq == self.sequence

    @property
    def length_matches(self) -> bool:
        return self.algebra_length == self.sequence[-1]

    @property
    def certified(self) -> bool:
        return self.char_seq_matches and self.length_matches


def realize_and_certify(M: Sequence[int], w: ProtoWitness, field: Field = GF2,
                        max_dim: int = ORACLE_MAX_DIM, jobs: int = 1) -> Certificate:
    """Realize ``(M, w)`` and confirm both the sequence and ``l(A) = m_{n-1}``."""
    if not field.is_finite:
        raise ValueError("certification needs a finite field")
    m = CharSeq(M)
    if len(m) > max_dim:
        raise ValueError(f"dimension {len(m)} exceeds the oracle guard {max_dim}")
    A = realize(m, w, field)
    seq = char_seq(A, canonical_generators(m, field))
    return Certificate(m, seq, algebra_length(A, jobs=jobs))
