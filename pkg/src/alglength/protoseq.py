"""Proto-characteristic sequences: validation, enumeration and transforms.

A witness assigns to every index ``k > k1`` an ordered pair ``(t1, t2)`` of
earlier indices with ``m[t1] + m[t2] == m[k]``.  For ``h1 < h2`` the later
pair must beat the earlier one in at least one coordinate, i.e. a new pair
may not lie in the down-set (componentwise ``<=``) of committed pairs.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_ENUM_DIM = 10


class CharSeq(tuple):
    """Non-decreasing integer sequence ``(m_0, ..., m_N)``."""

    def __new__(cls, values: Iterable[int] = ()):
        return super().__new__(cls, (int(v) for v in values))

    @property
    def k1(self) -> int:
        """Number of terms equal to 1."""
        return sum(1 for v in self if v == 1)

    def multiplicity(self, k: int) -> int:
        """``s_k``: how many terms equal ``k``."""
        return sum(1 for v in self if v == k)

    @property
    def last(self) -> int:
        return self[-1]

    def __repr__(self):
        return f"CharSeq({tuple(self)})"


@dataclass(frozen=True)
class ProtoWitness:
    """Pairs ``(t1(k), t2(k))`` for ``k = first, first+1, ...``."""

    first: int
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def domain(self) -> range:
        return range(self.first, self.first + len(self.pairs))

    def t1(self, k: int) -> int:
        return self.pairs[k - self.first][0]

    def t2(self, k: int) -> int:
        return self.pairs[k - self.first][1]

    def table(self) -> list[tuple[int, int, int]]:
        return [(k, a, b) for k, (a, b) in zip(self.domain, self.pairs)]

    @classmethod
    def from_table(cls, first: int, rows: Iterable[Sequence[int]]) -> "ProtoWitness":
        rows = sorted((int(k), int(a), int(b)) for k, a, b in rows)
        ks = [k for k, _, _ in rows]
        if ks != list(range(first, first + len(rows))):
            raise ValueError(f"witness must cover indices {first}.. contiguously, got {ks}")
        return cls(first, tuple((a, b) for _, a, b in rows))


def structural_problems(M: Sequence[int]) -> list[str]:
    """Violations of the non-witness items (start, ones block, monotonicity)."""
    m = list(M)
    problems = []
    if len(m) < 2:
        problems.append("sequence needs at least two terms")
        return problems
    if m[0] != 0:
        problems.append(f"m_0 must be 0, got {m[0]}")
    if m[1] != 1:
        problems.append(f"m_1 must be 1, got {m[1]}")
    for i in range(1, len(m)):
        if m[i] < m[i - 1]:
            problems.append(f"sequence decreases at index {i}")
            break
    if any(v < 0 for v in m):
        problems.append("terms must be non-negative")
    return problems


def _dominated(a: int, b: int, front) -> bool:
    return any(a <= x and b <= y for x, y in front)


def _push(front, a: int, b: int) -> frozenset:
    return frozenset([(x, y) for x, y in front if not (x <= a and y <= b)] + [(a, b)])


def check_witness(M: Sequence[int], w: ProtoWitness) -> list[str]:
    """Problems with ``w`` as a witness for ``M``; empty list means valid."""
    m = CharSeq(M)
    problems = structural_problems(m)
    if problems:
        return problems
    k1 = m.k1
    if w.first != k1 + 1 or len(w.pairs) != len(m) - 1 - k1:
        return [f"witness must cover indices {k1 + 1}..{len(m) - 1}"]
    seen = []
    for k, (a, b) in zip(w.domain, w.pairs):
        if not (1 <= a < k and 1 <= b < k):
            problems.append(f"pair at k={k} must use indices in [1, {k - 1}]")
        elif m[a] + m[b] != m[k]:
            problems.append(f"m_{a} + m_{b} != m_{k}")
        for h, (x, y) in seen:
            if not (x < a or y < b):
                problems.append(f"pairs at k={h} and k={k} violate the increase condition")
        seen.append((k, (a, b)))
    return problems


def validate(M: Sequence[int]) -> ProtoWitness | None:
    """Lexicographically least witness for ``M``, or None if there is none."""
    m = CharSeq(M)
    if structural_problems(m):
        return None
    n = len(m)
    k1 = m.k1
    if any(v == 1 for v in m[k1 + 1:]):
        return None
    dead: set = set()
    chosen: list[tuple[int, int]] = []

    def search(k: int, front: frozenset) -> bool:
        if k == n:
            return True
        if (k, front) in dead:
            return False
        target = m[k]
        for a in range(1, k):
            rest = target - m[a]
            if rest < 1:
                break
            for b in range(1, k):
                if m[b] > rest:
                    break
                if m[b] == rest and not _dominated(a, b, front):
                    chosen.append((a, b))
                    if search(k + 1, _push(front, a, b)):
                        return True
                    chosen.pop()
        dead.add((k, front))
        return False

    if search(k1 + 1, frozenset()):
        return ProtoWitness(k1 + 1, tuple(chosen))
    return None


def is_proto_characteristic(M: Sequence[int]) -> bool:
    return validate(M) is not None


def count_witnesses(M: Sequence[int]) -> int:
    """Number of distinct witnesses of ``M`` (diagnostic only)."""
    m = CharSeq(M)
    if structural_problems(m) or any(v == 1 for v in m[m.k1 + 1:]):
        return 0
    n = len(m)

    @functools.lru_cache(maxsize=None)
    def count(k: int, front: frozenset) -> int:
        if k == n:
            return 1
        total = 0
        for a in range(1, k):
            for b in range(1, k):
                if m[a] + m[b] == m[k] and not _dominated(a, b, front):
                    total += count(k + 1, _push(front, a, b))
        return total

    return count(m.k1 + 1, frozenset())


def _check_dim(n: int) -> None:
    if not 2 <= n <= MAX_ENUM_DIM:
        raise ValueError(f"n must lie in [2, {MAX_ENUM_DIM}], got {n}")


def _extend_block(n: int, k1: int) -> set:
    """All proto-characteristic sequences of length n with exactly k1 ones."""
    prefix = (0,) + (1,) * k1
    if k1 == n - 1:
        return {prefix}
    # each live prefix carries the set of reachable down-set fronts
    frontier = {prefix: {frozenset()}}
    for k in range(k1 + 1, n):
        nxt: dict = {}
        for pre, fronts in frontier.items():
            lo = max(pre[-1], 2)
            for front in fronts:
                for a in range(1, k):
                    for b in range(1, k):
                        v = pre[a] + pre[b]
                        if v < lo or _dominated(a, b, front):
                            continue
                        nxt.setdefault(pre + (v,), set()).add(_push(front, a, b))
        frontier = nxt
    return set(frontier)


def enumerate_sequences(n: int, jobs: int = 1) -> frozenset:
    """Exact set of proto-characteristic sequences of length ``n``."""
    _check_dim(n)
    ks = range(1, n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_extend_block, [n] * len(ks), ks))
    else:
        parts = [_extend_block(n, k1) for k1 in ks]
    return frozenset(CharSeq(s) for part in parts for s in part)


def witness_counts(n: int) -> dict:
    """Map each sequence of length ``n`` to its number of witnesses."""
    return {s: count_witnesses(s) for s in sorted(enumerate_sequences(n))}


@functools.lru_cache(maxsize=None)
def realizable_lengths(n: int) -> frozenset:
    """Last entries of all proto-characteristic sequences of length ``n``."""
    return frozenset(s[-1] for s in enumerate_sequences(n))


def _require(M, w) -> CharSeq:
    m = CharSeq(M)
    problems = check_witness(m, w)
    if problems:
        raise ValueError("invalid witness: " + "; ".join(problems))
    return m


def prepend_one(M: Sequence[int], w: ProtoWitness) -> tuple[CharSeq, ProtoWitness]:
    """``(0, 1, m_1, ..., m_{n-1})`` with every witness index shifted by one."""
    m = _require(M, w)
    out = CharSeq((0, 1) + tuple(m[1:]))
    return out, ProtoWitness(w.first + 1, tuple((a + 1, b + 1) for a, b in w.pairs))


def append_double(M: Sequence[int], w: ProtoWitness) -> tuple[CharSeq, ProtoWitness]:
    """Append ``2 m_{n-1}`` witnessed by ``(n-1, n-1)``."""
    m = _require(M, w)
    last = len(m) - 1
    return CharSeq(tuple(m) + (2 * m[-1],)), ProtoWitness(w.first, w.pairs + ((last, last),))


def append_succ(M: Sequence[int], w: ProtoWitness) -> tuple[CharSeq, ProtoWitness]:
    """Append ``m_{n-1} + 1`` witnessed by ``(1, n-1)``."""
    m = _require(M, w)
    last = len(m) - 1
    return CharSeq(tuple(m) + (m[-1] + 1,)), ProtoWitness(w.first, w.pairs + ((1, last),))
