"""Closed-form realizability rules for length values.

Everything here is integer arithmetic; the enumerator in :mod:`protoseq`
is only consulted by the functions that say so (``b_of_n`` and the
``enumerated`` cross-checks).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .protoseq import MAX_ENUM_DIM, realizable_lengths

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
NOT_APPLICABLE = "not-applicable"
UNKNOWN = "unknown"


def popcount(l: int) -> int:
    return bin(l).count("1")


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def binary_sufficient(l: int, n: int) -> bool:
    """Sufficient condition for ``l`` to be a length in dimension ``n``.

    Either ``l < 2^{n-k}`` with at most ``k`` binary ones for some
    ``1 < k < n``, or ``l = 2^h`` with ``h <= n-2``.
    """
    return bool(sufficiency_rules(l, n))


def sufficiency_rules(l: int, n: int) -> list[str]:
    if l < 1:
        raise ValueError("length must be positive")
    rules = []
    ones = popcount(l)
    if any(l < 2 ** (n - k) and ones <= k for k in range(2, n)):
        rules.append("binary-digits")
    if ones == 1 and l.bit_length() - 1 <= n - 2:
        rules.append("power-of-two")
    return rules


def in_top_half(l: int, n: int) -> bool:
    return n > 4 and l > 2 ** (n - 3)


def top_half_verdict(l: int, n: int) -> str:
    """Exact verdict above ``2^{n-3}``: feasible iff ``l = 2^{n-3} + 2^p``, ``p <= n-3``."""
    if n <= 4:
        raise ValueError("top-half rule needs n > 4")
    if l <= 2 ** (n - 3):
        raise ValueError(f"{l} is not above 2^{n - 3}")
    rest = l - 2 ** (n - 3)
    if rest & (rest - 1) == 0 and rest.bit_length() - 1 <= n - 3:
        return FEASIBLE
    return INFEASIBLE


@dataclass(frozen=True)
class FeasibilityReport:
    l: int
    n: int
    sufficient: bool
    top_half_verdict: str
    verdict: str
    reasons: tuple = ()


def feasibility_report(l: int, n: int, use_enumeration: bool = True) -> FeasibilityReport:
    """Combine the closed-form rules; fall back to enumeration for n <= 10.

    ``verdict`` is feasible, infeasible, or unknown (middle range, large n).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if l < 1:
        raise ValueError("length must be positive")
    reasons = sufficiency_rules(l, n)
    sufficient = bool(reasons)
    top = NOT_APPLICABLE
    if in_top_half(l, n):
        top = top_half_verdict(l, n)
        reasons.append("top-half form" if top == FEASIBLE else "top-half gap")
    if l > 2 ** (n - 2):
        reasons.append("above maximum")
        verdict = INFEASIBLE
    elif sufficient or top == FEASIBLE:
        verdict = FEASIBLE
    elif top == INFEASIBLE:
        verdict = INFEASIBLE
    elif use_enumeration and n <= MAX_ENUM_DIM:
        verdict = FEASIBLE if l in realizable_lengths(n) else INFEASIBLE
        reasons.append("enumeration")
    else:
        verdict = UNKNOWN
    return FeasibilityReport(l, n, sufficient, top, verdict, tuple(reasons))


@dataclass(frozen=True)
class IntervalCount:
    n: int
    k: int
    low: int
    high: int
    lower_bound: int
    exact: int | None
    enumerated: int | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return self.high - self.low + 1


def interval_count(n: int, k: int, cross_check: bool = True) -> IntervalCount:
    """Realizable values in ``[2^{n-k-1}, 2^{n-k} - 1]``.

    ``lower_bound`` counts values certified by the binary-digit rule.
    ``exact`` is filled when a closed form applies; ``enumerated`` is the
    enumerator's count for ``n <= 10``.
    """
    if not 1 < k < n:
        raise ValueError(f"need 1 < k < n, got n={n}, k={k}")
    low, high = 2 ** (n - k - 1), 2 ** (n - k) - 1
    r = n - k - 1
    bound = sum(comb(r, h) for h in range(min(k - 1, r) + 1))
    exact = None
    if k == 2:
        exact = n - 2
    elif k > _ceil_half(n) or bound == high - low + 1:
        exact = high - low + 1
    enumerated = None
    if cross_check and n <= MAX_ENUM_DIM:
        enumerated = sum(1 for v in realizable_lengths(n) if low <= v <= high)
    return IntervalCount(n, k, low, high, bound, exact, enumerated)


def b_of_n(n: int) -> int:
    """Largest ``l`` with every value ``1..l`` realizable in dimension ``n``."""
    values = realizable_lengths(n)
    l = 0
    while l + 1 in values:
        l += 1
    return l


def gaps(n: int) -> list[tuple[int, int]]:
    """Maximal runs of non-realizable values in ``[1, 2^{n-2}]``."""
    values = realizable_lengths(n)
    runs = []
    start = None
    for v in range(1, 2 ** (n - 2) + 2):
        if v not in values and v <= 2 ** (n - 2):
            start = v if start is None else start
        elif start is not None:
            runs.append((start, v - 1))
            start = None
    return runs


@dataclass(frozen=True)
class RecurrenceReport:
    n: int
    checks: tuple  # (description, lhs, rhs, passed)

    @property
    def ok(self) -> bool:
        return all(c[3] for c in self.checks)


def b_recurrences_check(n: int) -> RecurrenceReport:
    """Check ``B(n+2) >= 2 B(n) + 1`` and, for n >= 6, ``B(n) >= 2^ceil(n/2)``."""
    checks = []
    if n + 2 <= MAX_ENUM_DIM:
        lhs, rhs = b_of_n(n + 2), 2 * b_of_n(n) + 1
        checks.append((f"B({n + 2}) >= 2*B({n})+1", lhs, rhs, lhs >= rhs))
    if n >= 6:
        lhs, rhs = b_of_n(n), 2 ** _ceil_half(n)
        checks.append((f"B({n}) >= 2^ceil({n}/2)", lhs, rhs, lhs >= rhs))
    return RecurrenceReport(n, tuple(checks))
