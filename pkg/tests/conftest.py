from pathlib import Path

import pytest

from citeroc import load_corpus, read_records

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / f"{name}.jsonl"


@pytest.fixture
def fixture_corpus():
    return lambda name: load_corpus(FIXTURES / f"{name}.jsonl")


@pytest.fixture
def fixture_records():
    return lambda name: list(read_records(FIXTURES / f"{name}.jsonl"))
