"""Seeded random algebra corpora for invariant sweeps."""

from __future__ import annotations

import random

from .algebra import Algebra, change_basis, from_products, random_algebra, random_unit_fixing_basis
from .linalg import GF2, Field
from .maxlen import long_basis_algebra, random_long_basis_algebra

KINDS = ("dense", "sparse", "long", "perturbed-long")


def perturbed_long_algebra(n: int, field: Field = GF2, rng: random.Random | None = None) -> Algebra:
    """Long-basis algebra with one random entry flipped anywhere in the table."""
    rng = rng or random.Random()
    A = long_basis_algebra(n, field)
    products = {(i, j): A.table[i][j] for i in range(1, n) for j in range(1, n)}
    i, j, k = rng.randrange(1, n), rng.randrange(1, n), rng.randrange(n)
    entry = list(products[i, j])
    entry[k] = field(entry[k] + rng.randrange(1, field.p))
    products[i, j] = tuple(entry)
    B = from_products(field, n, products)
    return change_basis(B, random_unit_fixing_basis(n, field, rng))


def random_corpus(count: int, dims=(4, 5), field: Field = GF2, seed: int = 0):
    """Yield ``(kind, algebra)`` pairs cycling through :data:`KINDS` and ``dims``.

    Dense tables almost never reach maximal length, so the corpus mixes in
    hidden long-basis algebras and single-entry perturbations of them.
    """
    rng = random.Random(seed)
    for i in range(count):
        kind = KINDS[i % len(KINDS)]
        n = dims[(i // len(KINDS)) % len(dims)]
        if kind == "dense":
            A = random_algebra(n, field, rng)
        elif kind == "sparse":
            A = random_algebra(n, field, rng, density=0.25)
        elif kind == "long":
            A = random_long_basis_algebra(n, field, rng)
        else:
            A = perturbed_long_algebra(n, field, rng)
        yield kind, A
