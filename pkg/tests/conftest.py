import random

from fractions import Fraction

import pytest

from cuntzlim import Element, GaussianRational, O, O_INF, mono, zero


def random_word(rng: random.Random, n: int, max_len: int):
    return tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))


def random_scalar(rng: random.Random) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-4, 4), rng.randint(1, 4)),
        Fraction(rng.randint(-2, 2), rng.randint(1, 3)),
    )


def random_element(rng: random.Random, tag, max_terms=4, max_len=3) -> Element:
    n = tag.ngens if tag.is_finite else 6
    e = zero(tag)
    for _ in range(rng.randint(0, max_terms)):
        l = random_word(rng, n, max_len)
        r = random_word(rng, n, max_len)
        e = e + random_scalar(rng) * mono(tag, l, r)
    return e


@pytest.fixture
def rng():
    return random.Random(20260826)


def pytest_terminal_summary(terminalreporter):
    """Emit the acceptance pass/fail lines even under output capture."""
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
