"""Exact linear algebra over prime fields GF(p) and the rationals.

Vectors are plain tuples of canonical scalars (``int`` in ``range(p)`` or
``fractions.Fraction``).  Subspaces are stored as reduced row-echelon
matrices with unit pivots, so equal spans have identical representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

PRIME_FIELD = "prime-field"
RATIONAL = "rational"

Vector = tuple


class DimensionError(ValueError):
    """Vectors or subspaces of different ambient dimension were combined."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Field:
    """Descriptor of the ground field: GF(p) with ``2 <= p <= 251`` or Q."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not _is_prime(self.p) or self.p > 251:
                raise ValueError(f"prime modulus must be a prime <= 251, got {self.p!r}")
        elif self.kind == RATIONAL:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == PRIME_FIELD

    @property
    def zero(self):
        return 0 if self.is_finite else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_finite else Fraction(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction or "a/b" string) to a canonical scalar."""
        if self.is_finite:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            if isinstance(x, str):
                return self(Fraction(x))
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.is_finite:
            return pow(x, -1, self.p)
        return 1 / x

    def elements(self) -> range:
        if not self.is_finite:
            raise ValueError("the rational field cannot be enumerated")
        return range(self.p)

    def __str__(self):
        return f"GF({self.p})" if self.is_finite else "Q"


def GF(p: int) -> Field:
    return Field(PRIME_FIELD, p)


QQ = Field(RATIONAL)
GF2 = GF(2)


def vector(field: Field, entries: Iterable) -> Vector:
    return tuple(field(x) for x in entries)


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def basis_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def add(field: Field, x: Vector, y: Vector) -> Vector:
    if field.is_finite:
        p = field.p
        return tuple((a + b) % p for a, b in zip(x, y))
    return tuple(a + b for a, b in zip(x, y))


def scale(field: Field, c, x: Vector) -> Vector:
    if field.is_finite:
        p = field.p
        return tuple(c * a % p for a in x)
    return tuple(c * a for a in x)


def axpy(field: Field, c, x: Vector, y: Vector) -> Vector:
    """Return ``c*x + y``."""
    if field.is_finite:
        p = field.p
        return tuple((c * a + b) % p for a, b in zip(x, y))
    return tuple(c * a + b for a, b in zip(x, y))


def is_zero(x: Vector) -> bool:
    return not any(x)


class Echelon:
    """Mutable incremental row-echelon basis with unit pivots.

    Rows are kept in insertion order together with their pivot column;
    ``to_subspace`` produces the canonical fully reduced form.
    """

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.rows: list[list] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        if len(v) != self.dim:
            raise DimensionError(f"expected length {self.dim}, got {len(v)}")
        w = list(v)
        f = self.field
        if f.is_finite:
            p = f.p
            for row, c in zip(self.rows, self.pivots):
                a = w[c]
                if a:
                    for j in range(c, self.dim):
                        if row[j]:
                            w[j] = (w[j] - a * row[j]) % p
        else:
            for row, c in zip(self.rows, self.pivots):
                a = w[c]
                if a:
                    for j in range(c, self.dim):
                        if row[j]:
                            w[j] = w[j] - a * row[j]
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True iff the rank increased."""
        w = self.reduce(v)
        for c, a in enumerate(w):
            if a:
                break
        else:
            return False
        inv = self.field.inv(a)
        if self.field.is_finite:
            p = self.field.p
            w = [x * inv % p for x in w]
        else:
            w = [x * inv for x in w]
        self.rows.append(w)
        self.pivots.append(c)
        return True

    def copy(self) -> "Echelon":
        e = Echelon(self.field, self.dim)
        e.rows = [r[:] for r in self.rows]
        e.pivots = self.pivots[:]
        return e

    def to_subspace(self) -> "Subspace":
        return Subspace(self.field, self.dim, _canonical_rows(self.field, self.rows, self.pivots))


def _canonical_rows(field: Field, rows: list[list], pivots: list[int]) -> tuple:
    order = sorted(range(len(rows)), key=pivots.__getitem__)
    rows = [rows[i][:] for i in order]
    piv = [pivots[i] for i in order]
    # back-substitution clears entries above each pivot
    for i in range(len(rows) - 1, -1, -1):
        c = piv[i]
        for r in range(i):
            a = rows[r][c]
            if a:
                rows[r] = list(axpy(field, -a, rows[i], rows[r]))
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F^ambient_dim`` in canonical reduced row-echelon form."""

    field: Field
    ambient_dim: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)

    def echelon(self) -> Echelon:
        e = Echelon(self.field, self.ambient_dim)
        e.rows = [list(r) for r in self.basis]
        e.pivots = list(self.pivots)
        return e

    def __contains__(self, v) -> bool:
        return subspace_contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        _check_same(self, other)
        e = other.echelon()
        return all(e.contains(r) for r in self.basis)


def _check_same(U: Subspace, V: Subspace) -> None:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {U.ambient_dim} vs {V.ambient_dim}")
    if U.field != V.field:
        raise ValueError(f"fields differ: {U.field} vs {V.field}")


def rref_basis(vectors: Iterable[Sequence], field: Field, dim: int | None = None) -> Subspace:
    """Canonical basis of the span of ``vectors``.

    ``dim`` is required when ``vectors`` is empty.
    """
    vectors = [vector(field, v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty spanning set")
        dim = len(vectors[0])
    e = Echelon(field, dim)
    for v in vectors:
        if len(v) != dim:
            raise DimensionError(f"expected length {dim}, got {len(v)}")
        e.add(v)
    return e.to_subspace()


def zero_subspace(field: Field, dim: int) -> Subspace:
    return Subspace(field, dim, ())


def full_space(field: Field, dim: int) -> Subspace:
    return Subspace(field, dim, tuple(basis_vector(field, dim, i) for i in range(dim)))


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_same(U, V)
    e = U.echelon()
    for r in V.basis:
        e.add(r)
    return e.to_subspace()


def subspace_contains(U: Subspace, v: Sequence) -> bool:
    if len(v) != U.ambient_dim:
        raise DimensionError(f"expected length {U.ambient_dim}, got {len(v)}")
    return U.echelon().contains(vector(U.field, v))


def subspace_eq(U: Subspace, V: Subspace) -> bool:
    _check_same(U, V)
    return U.basis == V.basis


def bilinear_image(U: Subspace, V: Subspace, mul: Callable[[Vector, Vector], Vector]) -> Subspace:
    """Span of ``mul(u, v)`` over basis vectors ``u`` of U and ``v`` of V."""
    _check_same(U, V)
    e = Echelon(U.field, U.ambient_dim)
    for u in U.basis:
        for v in V.basis:
            e.add(mul(u, v))
    return e.to_subspace()


def coordinates(field: Field, basis: Sequence[Sequence], v: Sequence) -> Vector:
    """Coordinates of ``v`` in the (linearly independent) ``basis``.

    Raises ValueError if ``v`` is outside the span.
    """
    k = len(basis)
    n = len(v)
    # augmented system: columns are basis vectors, rows are ambient coordinates
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    e = Echelon(field, k + 1)
    for r in rows:
        e.add(vector(field, r))
    sub = e.to_subspace()
    if sub.pivots and sub.pivots[-1] == k:
        raise ValueError("vector is not in the span of the basis")
    if sub.rank != k:
        raise ValueError("basis vectors are linearly dependent")
    return tuple(row[k] for row in sub.basis)


def _rref_matrices(field: Field, n: int, d: int) -> Iterator[tuple]:
    """All d x n RREF matrices of rank d, i.e. all d-dimensional subspaces."""
    elems = list(field.elements())
    for piv in itertools.combinations(range(n), d):
        free = [(r, c) for r in range(d) for c in range(piv[r] + 1, n) if c not in piv]
        for values in itertools.product(elems, repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for r, c in enumerate(piv):
                rows[r][c] = 1
            for (r, c), a in zip(free, values):
                rows[r][c] = a
            yield tuple(tuple(r) for r in rows)


def subspaces_containing(ambient_dim: int, v: Sequence, field: Field) -> Iterator[Subspace]:
    """Yield every subspace of ``F^ambient_dim`` containing ``v`` exactly once.

    Subspaces of the quotient by ``<v>`` are lifted; the order is by
    dimension, then by canonical basis.
    """
    if not field.is_finite:
        raise ValueError("subspace enumeration requires a finite field")
    v = vector(field, v)
    if len(v) != ambient_dim:
        raise DimensionError(f"expected length {ambient_dim}, got {len(v)}")
    if is_zero(v):
        raise ValueError("v must be nonzero")
    c = next(j for j, a in enumerate(v) if a)
    for d in range(ambient_dim):
        batch = []
        for rows in _rref_matrices(field, ambient_dim - 1, d):
            lifted = [v] + [r[:c] + (0,) + r[c:] for r in rows]
            batch.append(rref_basis(lifted, field, ambient_dim))
        batch.sort(key=lambda s: s.basis)
        yield from batch


def count_subspaces(k: int, q: int) -> int:
    """Galois number: total number of subspaces of ``GF(q)^k``."""
    total = 0
    for d in range(k + 1):
        num = den = 1
        for i in range(d):
            num *= q ** (k - i) - 1
            den *= q ** (i + 1) - 1
        total += num // den
    return total


def matrix_inverse(field: Field, rows: Sequence[Sequence]) -> list[Vector]:
    """Inverse of a square matrix given by rows; raises ValueError if singular."""
    n = len(rows)
    aug = [vector(field, list(r) + [field.one if i == j else field.zero for j in range(n)])
           for i, r in enumerate(rows)]
    e = Echelon(field, 2 * n)
    for r in aug:
        e.add(r)
    sub = e.to_subspace()
    if sub.rank != n or sub.pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in sub.basis]
