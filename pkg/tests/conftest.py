import os

import pytest

from letterlab import LanguageModel, LetterSequence, builtin_alphabet, normalize

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def read_data(name: str) -> str:
    with open(data_path(name), encoding="utf-8") as fh:
        return fh.read()


@pytest.fixture(scope="session")
def en():
    return builtin_alphabet("en")


@pytest.fixture(scope="session")
def analysis_corpus(en) -> LetterSequence:
    """~26k letters of homogeneous English; see data/README.md."""
    return normalize(read_data("english_analysis.txt"), en, source="analysis corpus")


@pytest.fixture(scope="session")
def training_corpus(en) -> LetterSequence:
    """~155k letters of English, disjoint from the analysis corpus."""
    return normalize(read_data("english_training.txt"), en, source="training corpus")


@pytest.fixture(scope="session")
def training_model(training_corpus) -> LanguageModel:
    return LanguageModel.train(training_corpus)


@pytest.fixture(scope="session")
def solver_plaintext(en) -> LetterSequence:
    """Exactly 2,000 letters of original prose containing all 26 letters."""
    seq = normalize(read_data("solver_plaintext.txt"), en, source="solver plaintext")
    return LetterSequence(en, seq.symbols[:2000], source="solver plaintext")
