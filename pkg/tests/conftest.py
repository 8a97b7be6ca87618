from pathlib import Path

import pytest

from eigencont import load_h2_table
from eigencont.subspace import counters

DATA_DIR = Path(__file__).resolve().parents[1] / "data"
H2_TABLE_PATH = DATA_DIR / "h2_coefficients_sample.csv"


@pytest.fixture
def h2_table_path() -> Path:
    return H2_TABLE_PATH


@pytest.fixture
def h2_table() -> dict:
    return load_h2_table(H2_TABLE_PATH)


@pytest.fixture(autouse=True)
def _reset_counters():
    counters.reset()
    yield
