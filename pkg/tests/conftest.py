import os
from pathlib import Path

import pytest

from synqa.wordnet import load_wordnet

REPO_ROOT = Path(__file__).resolve().parent.parent
MINI_WORDNET = REPO_ROOT / "data" / "mini_wordnet"
DOMAINS_FILE = REPO_ROOT / "data" / "wordnet_domains.txt"
BASE_DATASET = REPO_ROOT / "data" / "base_dev.json"


@pytest.fixture(scope="session")
def mini_dict_dir() -> Path:
    return MINI_WORDNET


@pytest.fixture(scope="session")
def store():
    """The bundled mini dictionary, domains attached."""
    return load_wordnet(MINI_WORDNET, domains_file=DOMAINS_FILE)


@pytest.fixture(scope="session")
def acceptance_dict_dir() -> Path:
    """A stock WordNet 3.0 dict directory when one is configured, else the
    bundled mini dictionary (same file format, same pinned facts)."""
    return Path(os.environ.get("WORDNET_DICT_DIR", MINI_WORDNET))


@pytest.fixture(scope="session")
def base_dataset_path() -> Path:
    """A SQuAD-2.0-format development file: the real one when configured."""
    return Path(os.environ.get("SQUAD_DEV_PATH", BASE_DATASET))
