import random

import pytest

from fuzzyrough import FuzzyRelation, random_min_equivalence
from published import FIVE_LABELS, FIVE_ROWS, FOUR_LABELS, FOUR_ROWS

RANDOM_SEED = 20201
RANDOM_COUNT = 120

_acceptance_lines: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    _acceptance_lines.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def random_instances(count=RANDOM_COUNT, seed=RANDOM_SEED):
    rng = random.Random(seed)
    return [random_min_equivalence(2 + k % 5, rng) for k in range(count)]


@pytest.fixture(scope="session")
def five():
    return FuzzyRelation.from_rows(FIVE_LABELS, FIVE_ROWS)


@pytest.fixture(scope="session")
def four():
    return FuzzyRelation.from_rows(FOUR_LABELS, FOUR_ROWS)


@pytest.fixture(scope="session")
def instances():
    return random_instances()
