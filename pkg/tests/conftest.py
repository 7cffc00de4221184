import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from negmine.example import EXAMPLE_BASKET, example_db
from negmine.measures import Thresholds
from negmine.transactions import TransactionDB


@pytest.fixture(scope="session")
def table1():
    return example_db()


@pytest.fixture(scope="session")
def S(table1):
    """Encode a string of single-letter tokens, e.g. ``S("BD")``."""
    return lambda letters: table1.encode(letters)


@pytest.fixture(scope="session")
def thr1():
    return Thresholds("0.3", "0", "0.07")


@pytest.fixture
def table1_file(tmp_path):
    path = tmp_path / "table1.basket"
    path.write_text(EXAMPLE_BASKET, encoding="utf-8")
    return path


def random_db(rng: random.Random, max_items=6, max_transactions=12) -> TransactionDB:
    n_items = rng.randint(1, max_items)
    n_tx = rng.randint(1, max_transactions)
    density = rng.choice([0.3, 0.5, 0.7])
    baskets = [[f"i{j}" for j in range(n_items) if rng.random() < density] for _ in range(n_tx)]
    # every item occurs at least once so ids stay dense in the token space
    baskets[0] = baskets[0] or ["i0"]
    return TransactionDB.from_baskets(baskets)


def random_thresholds(rng: random.Random) -> Thresholds:
    return Thresholds(Fraction(rng.randint(1, 5), 10), 0, Fraction(rng.randint(1, 15), 100))


@st.composite
def databases(draw, max_items=6, max_transactions=12):
    n_items = draw(st.integers(1, max_items))
    rows = draw(st.lists(st.sets(st.integers(0, n_items - 1)), min_size=1, max_size=max_transactions))
    return TransactionDB.from_baskets([[f"i{j}" for j in sorted(r)] for r in rows])


thresholds = st.builds(
    Thresholds,
    minsprt=st.integers(1, 5).map(lambda n: Fraction(n, 10)),
    minconf=st.integers(0, 10).map(lambda n: Fraction(n, 10)),
    mininterest=st.integers(1, 15).map(lambda n: Fraction(n, 100)),
)


ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
