"""WordNet 3.0 dictionary parsing and lookup."""

from .parse import WordNetLoadError
from .store import (
    DomainLabel,
    DomainsReport,
    DomainsUnavailableError,
    LexicalStore,
    PartOfSpeech,
    RelationKind,
    Synset,
    load_wordnet,
    normalize_lemma,
)

__all__ = [
    "DomainLabel",
    "DomainsReport",
    "DomainsUnavailableError",
    "LexicalStore",
    "PartOfSpeech",
    "RelationKind",
    "Synset",
    "WordNetLoadError",
    "load_wordnet",
    "normalize_lemma",
]
