"""Finite-dimensional unital algebras given by structure constants."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .linalg import (
    GF2,
    DimensionError,
    Field,
    Vector,
    basis_vector,
    coordinates,
    matrix_inverse,
    vector,
    zero_vector,
)


class AlgebraError(ValueError):
    """Malformed structure constants or a violated algebra axiom."""


@dataclass(frozen=True)
class Algebra:
    """Algebra with basis ``e_0..e_{dim-1}``; ``table[i][j]`` is ``e_i * e_j``.

    Entries are canonicalized on construction.  The unit axiom is not
    enforced here (see :func:`is_unital`); the constructors below and the
    document loader check it.
    """

    field: Field
    dim: int
    table: tuple
    unit_index: int = 0

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise AlgebraError("dimension must be positive")
        if not 0 <= self.unit_index < n:
            raise AlgebraError(f"unit index {self.unit_index} out of range")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AlgebraError(f"table must be {n}x{n}")
        canon = []
        for row in self.table:
            crow = []
            for entry in row:
                if len(entry) != n:
                    raise AlgebraError(f"table entries must have length {n}")
                crow.append(vector(self.field, entry))
            canon.append(tuple(crow))
        object.__setattr__(self, "table", tuple(canon))

    @property
    def unit(self) -> Vector:
        return basis_vector(self.field, self.dim, self.unit_index)

    def basis(self, i: int) -> Vector:
        return basis_vector(self.field, self.dim, i)

    def __call__(self, x, y) -> Vector:
        return multiply(self, x, y)


def multiply(A: Algebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the multiplication table."""
    n = A.dim
    if len(x) != n or len(y) != n:
        raise DimensionError(f"expected vectors of length {n}")
    out = [0] * n
    table = A.table
    for i, a in enumerate(x):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(y):
            if not b:
                continue
            c = a * b
            for k, t in enumerate(row[j]):
                if t:
                    out[k] += c * t
    f = A.field
    if f.is_finite:
        p = f.p
        return tuple(v % p for v in out)
    return tuple(f(v) for v in out)


def is_unital(A: Algebra) -> bool:
    u = A.unit_index
    for i in range(A.dim):
        e = A.basis(i)
        if A.table[u][i] != e or A.table[i][u] != e:
            return False
    return True


def is_associative(A: Algebra) -> bool:
    """Check ``(e_i e_j) e_k == e_i (e_j e_k)`` on all basis triples."""
    n = A.dim
    for i in range(n):
        for j in range(n):
            ij = A.table[i][j]
            for k in range(n):
                if multiply(A, ij, A.basis(k)) != multiply(A, A.basis(i), A.table[j][k]):
                    return False
    return True


def require_unital(A: Algebra) -> Algebra:
    if not is_unital(A):
        raise AlgebraError(f"e_{A.unit_index} is not a two-sided unit")
    return A


def from_products(field: Field, n: int, products: Mapping | None = None) -> Algebra:
    """Unital algebra with ``e_0 = 1``; non-unit products default to zero.

    ``products`` maps ``(i, j)`` with ``i, j >= 1`` to a coefficient vector.
    """
    table = [[zero_vector(field, n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        table[0][i] = table[i][0] = basis_vector(field, n, i)
    for (i, j), v in (products or {}).items():
        if not (1 <= i < n and 1 <= j < n):
            raise AlgebraError(f"product index ({i}, {j}) out of range")
        if len(v) != n:
            raise AlgebraError(f"product e_{i}e_{j} must have length {n}")
        table[i][j] = vector(field, v)
    return Algebra(field, n, tuple(tuple(r) for r in table))


def assoc_family(n: int, l: int, field: Field = GF2) -> Algebra:
    """Associative algebra with ``e_p e_q = e_{p+q}`` for ``p + q <= l``, else 0."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 1 <= l <= n - 1:
        raise ValueError(f"l must lie in [1, {n - 1}], got {l}")
    products = {
        (p, q): basis_vector(field, n, p + q)
        for p in range(1, n)
        for q in range(1, n)
        if p + q <= l
    }
    return from_products(field, n, products)


def zero_mult(n: int, field: Field = GF2) -> Algebra:
    """Unital algebra in which every product of non-unit basis vectors vanishes."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return from_products(field, n)


def random_algebra(n: int, field: Field = GF2, rng: random.Random | None = None,
                   density: float = 1.0) -> Algebra:
    """Random unital algebra: each non-unit product entry is nonzero w.p. ``density``."""
    rng = rng or random.Random()
    elems = list(field.elements())
    products = {}
    for i in range(1, n):
        for j in range(1, n):
            products[i, j] = [rng.choice(elems) if rng.random() < density else 0 for _ in range(n)]
    return from_products(field, n, products)


def change_basis(A: Algebra, new_basis: Sequence[Sequence]) -> Algebra:
    """Re-express A in ``new_basis`` (rows, in old coordinates).

    The unit must stay put: ``new_basis[unit_index]`` has to be the unit.
    """
    f = A.field
    B = [vector(f, b) for b in new_basis]
    if len(B) != A.dim:
        raise AlgebraError("new basis must have dim elements")
    if B[A.unit_index] != A.unit:
        raise AlgebraError("change of basis must fix the unit")
    inv = matrix_inverse(f, B)
    n = A.dim

    def coords(v):
        # row vector v in old coordinates -> coordinates in B: v = c B, so c = v B^{-1}
        return tuple(f(sum(v[k] * inv[k][j] for k in range(n))) for j in range(n))

    table = tuple(tuple(coords(multiply(A, B[i], B[j])) for j in range(n)) for i in range(n))
    return Algebra(f, n, table, A.unit_index)


def random_unit_fixing_basis(n: int, field: Field = GF2, rng: random.Random | None = None,
                             unit_index: int = 0) -> list[Vector]:
    """Random invertible basis whose ``unit_index`` row is the unit vector."""
    rng = rng or random.Random()
    elems = list(field.elements())
    while True:
        rows = [[rng.choice(elems) for _ in range(n)] for _ in range(n)]
        rows[unit_index] = list(basis_vector(field, n, unit_index))
        try:
            matrix_inverse(field, rows)
        except ValueError:
            continue
        return [vector(field, r) for r in rows]


def in_basis(A: Algebra, basis: Sequence[Sequence], v: Sequence) -> Vector:
    """Coordinates of ``v`` with respect to ``basis``."""
    return coordinates(A.field, basis, v)
