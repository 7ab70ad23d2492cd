import random
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import strategies as st

from tclose import Schema, parse_csv
from tclose.distribution import Distribution, domain_of

DATA = resources.files("tclose") / "data"


def load(name):
    schema = Schema.from_json((DATA / f"{name}.schema.json").read_bytes())
    return parse_csv((DATA / f"{name}.csv").read_bytes(), schema)


@pytest.fixture
def data_dir():
    with resources.as_file(DATA) as path:
        yield path


@pytest.fixture
def incidents():
    return load("incidents")


@pytest.fixture
def salary():
    return load("salary")


@pytest.fixture
def merit():
    return load("merit")


def dist(*probs):
    return Distribution.from_probs(domain_of(len(probs)), [Fraction(p) for p in probs])


def random_weights(rng, m, max_weight=12):
    w = [rng.randint(0, max_weight) for _ in range(m)]
    if not any(w):
        w[rng.randrange(m)] = 1
    return w


def random_pair(rng, m, max_weight=12):
    domain = domain_of(m)
    return tuple(
        Distribution(domain, tuple(w), sum(w))
        for w in (random_weights(rng, m, max_weight), random_weights(rng, m, max_weight))
    )


@st.composite
def distributions(draw, m=None, min_m=2, max_m=64, count=1):
    """``count`` distributions over one shared domain of size ``m``."""
    if m is None:
        m = draw(st.integers(min_m, max_m))
    domain = domain_of(m)
    out = []
    for _ in range(count):
        w = draw(st.lists(st.integers(0, 12), min_size=m, max_size=m).filter(any))
        out.append(Distribution(domain, tuple(w), sum(w)))
    return out[0] if count == 1 else tuple(out)


@pytest.fixture
def rng():
    return random.Random(20240607)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
