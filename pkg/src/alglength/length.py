"""Span filtrations, characteristic sequences and lengths.

``L_0 = <1>``, ``L_1 = L_0 + <S>`` and ``L_k`` is spanned by ``L_{k-1}`` and
all products of words whose lengths add up to ``k``.  Growth can stall and
resume (e.g. no new words of length 3 but new ones of length 4), so the
filtration is only declared stable once ``k >= 2 j*`` with ``j*`` the last
level that grew: no product of two earlier words reaches beyond ``2 j*``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, multiply
from .linalg import Echelon, Subspace, subspaces_containing, vector
from .protoseq import CharSeq

FULL = "full"
STABILIZED = "stabilized"
CAP = "cap"


class NotGeneratingError(ValueError):
    """The given set does not generate the algebra."""


# Words: ``()`` is the unit, an int is a generator index, a 2-tuple a product.
Word = object


def word_length(w) -> int:
    if w == ():
        return 0
    if isinstance(w, int):
        return 1
    return word_length(w[0]) + word_length(w[1])


def format_word(w, names: Sequence[str] | None = None) -> str:
    if w == ():
        return "1"
    if isinstance(w, int):
        return names[w] if names else f"a{w + 1}"
    left, right = (format_word(x, names) for x in w)
    if not isinstance(w[0], int):
        left = f"({left})"
    if not isinstance(w[1], int):
        right = f"({right})"
    return f"{left}*{right}"


def evaluate_word(A: Algebra, gens: Sequence[Sequence], w):
    if w == ():
        return A.unit
    if isinstance(w, int):
        return vector(A.field, gens[w])
    return multiply(A, evaluate_word(A, gens, w[0]), evaluate_word(A, gens, w[1]))


def length_cap(n: int) -> int:
    """Upper bound ``2^{n-2}`` on any generating-set length."""
    return 2 ** (n - 2) if n >= 2 else 0


@dataclass
class _Growth:
    levels: list
    stop_reason: str
    words: list
    vectors: list
    lengths: list
    pairs: dict
    gens_used: list

    @property
    def generated(self) -> bool:
        return self.stop_reason == FULL


def _grow(A: Algebra, gens: Sequence[Sequence], run_to_cap: bool = False) -> _Growth:
    n = A.dim
    f = A.field
    gens = [vector(f, g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have length {n}")
    ech = Echelon(f, n)
    ech.add(A.unit)
    g = _Growth([ech.to_subspace()], "", [()], [A.unit], [0], {}, [])
    if ech.rank == n:
        g.stop_reason = FULL
        return g
    for idx, s in enumerate(gens):
        if ech.add(s):
            g.words.append(idx)
            g.vectors.append(s)
            g.lengths.append(1)
            g.gens_used.append(idx)
    g.levels.append(ech.to_subspace())
    last_growth = 1 if len(g.vectors) > 1 else 0
    cap = length_cap(n)
    k = 1
    while True:
        if ech.rank == n:
            g.stop_reason = FULL
            return g
        if not run_to_cap and k >= 2 * last_growth:
            g.stop_reason = STABILIZED
            return g
        if k >= cap:
            g.stop_reason = CAP
            return g
        k += 1
        count = len(g.vectors)
        grew = False
        for a in range(1, count):
            la = g.lengths[a]
            if la >= k:
                continue
            for b in range(1, count):
                if la + g.lengths[b] != k:
                    continue
                prod = multiply(A, g.vectors[a], g.vectors[b])
                if ech.add(prod):
                    g.pairs[len(g.vectors)] = (a, b)
                    g.words.append((g.words[a], g.words[b]))
                    g.vectors.append(prod)
                    g.lengths.append(k)
                    grew = True
        if grew:
            last_growth = k
        g.levels.append(ech.to_subspace())


@dataclass(frozen=True)
class SpanChain:
    levels: tuple
    generated: bool
    stop_reason: str

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(L.rank for L in self.levels)

    @property
    def length(self) -> int | None:
        """``l(S)`` when the set generates, otherwise None."""
        return len(self.levels) - 1 if self.generated else None


def span_chain(A: Algebra, S: Sequence[Sequence], run_to_cap: bool = False) -> SpanChain:
    """Filtration ``L_0 <= L_1 <= ...`` generated by ``S``.

    Stops when the whole algebra is reached, when growth has provably
    ended, or at the ``2^{n-2}`` cap.  ``run_to_cap`` disables the early
    stabilization stop.
    """
    g = _grow(A, S, run_to_cap)
    return SpanChain(tuple(g.levels), g.generated, g.stop_reason)


def _chain_char_seq(chain: SpanChain) -> CharSeq:
    dims = chain.dims
    m = [0]
    for k in range(1, len(dims)):
        m.extend([k] * (dims[k] - dims[k - 1]))
    return CharSeq(m)


def _generating_chain(A, S) -> SpanChain:
    chain = span_chain(A, S)
    if not chain.generated:
        raise NotGeneratingError(f"set does not generate the algebra (dims {chain.dims})")
    return chain


def char_seq(A: Algebra, S: Sequence[Sequence]) -> CharSeq:
    """Characteristic sequence of a generating set; ``n`` terms ending in ``l(S)``."""
    return _chain_char_seq(_generating_chain(A, S))


def set_length(A: Algebra, S: Sequence[Sequence]) -> int:
    return _generating_chain(A, S).length


def _best_length(A: Algebra, bases: list) -> int:
    best = 0
    cap = length_cap(A.dim)
    for basis in bases:
        chain = span_chain(A, basis)
        if chain.generated:
            best = max(best, chain.length)
            if best >= cap:
                break
    return best


def algebra_length(A: Algebra, jobs: int = 1) -> int:
    """Maximum of ``l(S)`` over all generating sets (finite fields only).

    ``l(S)`` only depends on ``<S, 1>``, so one basis per subspace
    containing the unit is enough.
    """
    if not A.field.is_finite:
        raise ValueError("algebra length is only computable over finite fields")
    if A.dim == 1:
        return 0
    bases = [V.basis for V in subspaces_containing(A.dim, A.unit, A.field)]
    if jobs > 1:
        chunks = [bases[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            best = max(pool.map(_best_length, [A] * jobs, chunks))
    else:
        best = _best_length(A, bases)
    if best == 0:
        raise RuntimeError("no subspace generates the algebra")
    return best


@dataclass(frozen=True)
class GradedBasis:
    """Basis of words numbered by length, with the product table ``t1, t2``.

    ``levels[r]`` holds the indices forming a basis of ``L_r``.
    """

    words: tuple
    vectors: tuple
    lengths: CharSeq
    t1: dict = field(default_factory=dict)
    t2: dict = field(default_factory=dict)
    levels: tuple = ()
    generators: tuple = ()

    def t_table(self) -> list[tuple[int, int, int]]:
        return [(k, self.t1[k], self.t2[k]) for k in sorted(self.t1)]


def graded_basis(A: Algebra, S: Sequence[Sequence]) -> GradedBasis:
    """Word basis adapted to the filtration of ``S``.

    Generators are taken greedily (input order) modulo the unit; each later
    level adds products ``e_a e_b`` with ``m_a + m_b = k`` in lexicographic
    ``(a, b)`` order whenever they raise the rank.
    """
    g = _grow(A, S)
    if not g.generated:
        raise NotGeneratingError("set does not generate the algebra")
    lengths = CharSeq(g.lengths)
    levels = tuple(
        tuple(i for i, m in enumerate(lengths) if m <= r) for r in range(len(g.levels))
    )
    return GradedBasis(
        words=tuple(g.words),
        vectors=tuple(g.vectors),
        lengths=lengths,
        t1={k: a for k, (a, _) in g.pairs.items()},
        t2={k: b for k, (_, b) in g.pairs.items()},
        levels=levels,
        generators=tuple(g.gens_used),
    )


def irreducible_word_lengths(A: Algebra, S: Sequence[Sequence]) -> tuple[int, ...]:
    """Lengths of a maximal independent family of irreducible words (sorted)."""
    return tuple(sorted(word_length(w) for w in graded_basis(A, S).words[1:]))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    index: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class InvariantReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)


def _is_pow2(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def check_charseq_invariants(M: Sequence[int]) -> InvariantReport:
    """Evaluate the necessary conditions every characteristic sequence meets.

    Each check reports the first violating index, if any.
    """
    m = list(M)
    n = len(m)
    checks = []

    def first(pred, hs):
        for h in hs:
            if not pred(h):
                return h
        return None

    bad = first(lambda h: m[h] >= m[h - 1], range(1, n))
    shape_ok = n >= 1 and m[0] == 0 and (n == 1 or m[1] == 1) and bad is None
    checks.append(Check("shape", shape_ok, bad, "m_0 = 0, m_1 = 1, non-decreasing"))

    def has_split(h):
        return m[h] < 2 or any(m[a] + m[b] == m[h] for a in range(1, h) for b in range(a, h))

    bad = first(has_split, range(1, n))
    checks.append(Check("sum_decomposition", bad is None, bad,
                        "each m_h >= 2 is m_a + m_b with 0 < a <= b < h"))

    bad = first(lambda h: m[h] <= 2 ** (h - 1), range(1, n))
    checks.append(Check("power_bound", bad is None, bad, "m_h <= 2^(h-1)"))

    bad = first(lambda h: m[h + 1] <= 2 * m[h], range(1, n - 1))
    checks.append(Check("doubling_bound", bad is None, bad, "m_(h+1) <= 2 m_h"))

    # 8 m_h <= 3 * 2^h is m_h <= 3 * 2^(h-3) without fractions
    bad = first(lambda h: m[h] == 2 ** (h - 1) or 8 * m[h] <= 3 * 2**h, range(1, n))
    checks.append(Check("top_dichotomy", bad is None, bad,
                        "m_h = 2^(h-1) or m_h <= 3 * 2^(h-3)"))

    def near_top(h):
        excess = m[h] - 2 ** (h - 2)
        return excess <= 0 or (_is_pow2(excess) and excess <= 2 ** (h - 2))

    bad = first(near_top, range(2, n))
    checks.append(Check("near_top_form", bad is None, bad,
                        "m_h > 2^(h-2) implies m_h = 2^(h-2) + 2^q"))
    return InvariantReport(tuple(checks))


def generating_subspaces(A: Algebra):
    """Yield ``(V, chain)`` for every subspace ``V`` containing 1 that generates A."""
    for V in subspaces_containing(A.dim, A.unit, A.field):
        chain = span_chain(A, V.basis)
        if chain.generated:
            yield V, chain


__all__ = [
    "SpanChain",
    "GradedBasis",
    "InvariantReport",
    "NotGeneratingError",
    "span_chain",
    "char_seq",
    "set_length",
    "algebra_length",
    "graded_basis",
    "irreducible_word_lengths",
    "check_charseq_invariants",
    "generating_subspaces",
    "word_length",
    "format_word",
    "evaluate_word",
    "Subspace",
]
