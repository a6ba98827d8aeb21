"""Algebras of maximal length ``2^{n-2}`` and their long bases.

A long basis is ``e_0 = 1, e_1, ..., e_{n-1}`` with ``e_{i+1} = e_i^2``.
An algebra has maximal length exactly when it has a long basis whose cross
products satisfy ``e_p e_q in <e_0, ..., e_max(p,q)>`` for ``p != q``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import Algebra, change_basis, from_products, random_unit_fixing_basis
from .linalg import GF2, Echelon, Field, basis_vector, coordinates, vector


@dataclass(frozen=True)
class LongBasis:
    vectors: tuple


@dataclass(frozen=True)
class Presentation:
    """Relation coefficients in the long basis.

    ``cross_coeffs[p, q]`` lists ``f^(j)_{p,q}`` for ``j = 0..max(p,q)``;
    ``top_coeffs`` expands ``e_{n-1}^2`` over the whole basis.
    """

    dim: int
    field: Field
    cross_coeffs: dict
    top_coeffs: tuple


def long_basis_algebra(n: int, field: Field = GF2) -> Algebra:
    """``e_i^2 = e_{i+1}`` for ``i < n-1``, ``e_{n-1}^2 = 0``, cross products zero."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return from_products(field, n, {(i, i): basis_vector(field, n, i + 1) for i in range(1, n - 1)})


def square_chain(A: Algebra, e1: Sequence) -> list:
    """``[1, e1, e1^2, (e1^2)^2, ...]`` with ``A.dim`` entries."""
    chain = [A.unit, vector(A.field, e1)]
    while len(chain) < A.dim:
        chain.append(A(chain[-1], chain[-1]))
    return chain


def long_basis_violations(A: Algebra, vectors: Sequence[Sequence]) -> list:
    """Reasons why ``vectors`` is not a valid long basis of A (empty if it is).

    Containment failures are reported as ``(p, q)`` tuples.
    """
    n = A.dim
    f = A.field
    vs = [vector(f, v) for v in vectors]
    if len(vs) != n:
        return ["wrong number of vectors"]
    problems = []
    if vs[0] != A.unit:
        problems.append("e_0 is not the unit")
    for i in range(1, n - 1):
        if A(vs[i], vs[i]) != vs[i + 1]:
            problems.append(f"e_{i}^2 != e_{i + 1}")
    prefixes = []
    ech = Echelon(f, n)
    for v in vs:
        if not ech.add(v):
            return problems + ["vectors are linearly dependent"]
        prefixes.append(ech.copy())
    for p in range(1, n):
        for q in range(1, n):
            if p != q and not prefixes[max(p, q)].contains(A(vs[p], vs[q])):
                problems.append((p, q))
    return problems


def verify_long_basis(A: Algebra, vectors: Sequence[Sequence]) -> bool:
    """Check a user-supplied candidate; works over any field."""
    return not long_basis_violations(A, vectors)


def find_long_basis(A: Algebra) -> LongBasis | None:
    """First valid long basis, scanning ``e_1`` over all vectors lexicographically."""
    if not A.field.is_finite:
        raise ValueError("long-basis search needs a finite field; use verify_long_basis")
    if A.dim < 3:
        raise ValueError("n must be at least 3")
    for e1 in itertools.product(A.field.elements(), repeat=A.dim):
        chain = square_chain(A, e1)
        if verify_long_basis(A, chain):
            return LongBasis(tuple(chain))
    return None


def is_max_length(A: Algebra) -> bool:
    """Whether ``l(A) = 2^{n-2}``, decided through the long-basis criterion."""
    return find_long_basis(A) is not None


def presentation(A: Algebra, basis: LongBasis) -> Presentation:
    problems = long_basis_violations(A, basis.vectors)
    if problems:
        raise ValueError(f"not a long basis: {problems}")
    n = A.dim
    vs = basis.vectors
    cross = {}
    for p in range(1, n):
        for q in range(1, n):
            if p != q:
                c = coordinates(A.field, vs, A(vs[p], vs[q]))
                cross[p, q] = c[: max(p, q) + 1]
    top = coordinates(A.field, vs, A(vs[-1], vs[-1]))
    return Presentation(n, A.field, cross, top)


def algebra_from_presentation(P: Presentation) -> Algebra:
    """Algebra on ``x_0..x_{n-1}`` defined by the relations of ``P``."""
    n, f = P.dim, P.field
    products = {}
    for i in range(1, n - 1):
        products[i, i] = basis_vector(f, n, i + 1)
    products[n - 1, n - 1] = tuple(P.top_coeffs)
    for (p, q), c in P.cross_coeffs.items():
        products[p, q] = tuple(c) + (f.zero,) * (n - len(c))
    return from_products(f, n, products)


def random_long_basis_algebra(n: int, field: Field = GF2, rng: random.Random | None = None,
                              conjugate: bool = True) -> Algebra:
    """Random maximal-length algebra: random admissible relations, then a
    random unit-fixing change of basis so the long basis is hidden."""
    rng = rng or random.Random()
    elems = list(field.elements())
    cross = {
        (p, q): tuple(rng.choice(elems) for _ in range(max(p, q) + 1))
        for p in range(1, n) for q in range(1, n) if p != q
    }
    top = tuple(rng.choice(elems) for _ in range(n))
    A = algebra_from_presentation(Presentation(n, field, cross, top))
    if conjugate:
        A = change_basis(A, random_unit_fixing_basis(n, field, rng))
    return A
