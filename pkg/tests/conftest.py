import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tanglenabla import corpus


@pytest.fixture(scope="session")
def corpus_names():
    return corpus.names()


def load(name):
    return corpus.load(name)


@pytest.fixture
def clasp():
    return load("clasp")


@pytest.fixture
def pretzel():
    return load("pretzel_2m3")
