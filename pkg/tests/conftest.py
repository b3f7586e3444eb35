import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scenetrack.config import load_bundled_word_vectors
from scenetrack.embeddings import LocalHashEmbedder
from scenetrack.similarity import Providers

import oracles

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "scenetrack" / "data"
SCENARIO_DIR = DATA_DIR / "scenarios"


@pytest.fixture(scope="session")
def word_table():
    return load_bundled_word_vectors()


@pytest.fixture(scope="session")
def providers(word_table):
    return Providers(word_vectors=word_table, embedder=LocalHashEmbedder())


@pytest.fixture(scope="session")
def raw_vector_text():
    return (DATA_DIR / "word_vectors.txt").read_text()


@pytest.fixture(scope="session")
def oracle_table(raw_vector_text):
    return oracles.parse_vector_file(raw_vector_text)


@pytest.fixture(scope="session")
def scenario_dir():
    return SCENARIO_DIR


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
