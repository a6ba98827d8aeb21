import random

import pytest

from alglength.algebra import random_algebra
from alglength.linalg import GF, GF2

_CRITERIA: list[tuple[int, str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance verdict; printed in the terminal summary."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> bool:
        _CRITERIA.append((number, title, passed, detail))
        print(f"[criterion {number:2d}] {'PASS' if passed else 'FAIL'}  {title}  {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_CRITERIA):
        terminalreporter.write_line(
            f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {title}  {detail}".rstrip()
        )


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def small_random_algebras():
    """Mixed-density random algebras over GF(2) and GF(3)."""
    r = random.Random(7)
    algebras = []
    for _ in range(20):
        n = r.choice([3, 4, 5])
        algebras.append(random_algebra(n, GF2, r, density=r.choice([0.2, 0.5, 1.0])))
    for _ in range(6):
        n = r.choice([3, 4])
        algebras.append(random_algebra(n, GF(3), r, density=r.choice([0.3, 1.0])))
    return algebras
