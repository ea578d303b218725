import random
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def rand_rat(rng, lo=-100, hi=100, den=1000):
    """Random rational in [lo, hi] with denominator up to ``den``."""
    d = rng.randint(1, den)
    return Fraction(rng.randint(lo * d, hi * d), d)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def corpus_paths():
    return sorted(CORPUS.glob("*.cert"))


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def record_acceptance(number, ok, detail):
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
