"""Lesk-style word sense ranking against a context window.

Each sense is scored by the overlap between its signature (gloss words, usage
examples, its own lemmas and, optionally, the gloss material of directly
related senses) and a bag of context words drawn from the question alone or
from the question plus its paragraph. Scores use exact integer arithmetic in
the default configuration; ties fall back to WordNet sense order, so an empty
context always selects the most frequent sense.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .textprep import CandidateToken, default_stopwords, tokenize
from .wordnet import LexicalStore, PartOfSpeech, RelationKind, Synset

_NORMALIZE_POS = (
    PartOfSpeech.NOUN,
    PartOfSpeech.VERB,
    PartOfSpeech.ADJECTIVE,
    PartOfSpeech.ADVERB,
)


class Scope(str, enum.Enum):
    QUESTION_ONLY = "question_only"
    QUESTION_PLUS_PARAGRAPH = "question_plus_paragraph"


@dataclass(frozen=True)
class ContextWindow:
    """Normalized context bag for one target token."""

    scope: Scope
    bag: Counter

    def __contains__(self, lemma: str) -> bool:
        return self.bag[lemma] > 0


@dataclass(frozen=True)
class SenseScore:
    synset: Synset
    score: float
    rank: int


@dataclass(frozen=True)
class DisambiguationResult:
    target: CandidateToken
    chosen: Synset
    all_scores: tuple[SenseScore, ...]
    window_used: Scope


class WordVectors:
    """Optional word-embedding table for soft signature matching.

    File format: one ``word v1 v2 ... vd`` row per line; the dimension is
    inferred from the first row.
    """

    def __init__(self, words: dict[str, int], matrix: np.ndarray):
        self._row = words
        norms = np.linalg.norm(matrix, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        self._unit = matrix / norms

    @classmethod
    def load(cls, path: Path | str) -> "WordVectors":
        words: dict[str, int] = {}
        rows = []
        dim = None
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            parts = line.split()
            if not parts:
                continue
            word, values = parts[0], [float(v) for v in parts[1:]]
            if dim is None:
                dim = len(values)
            if len(values) != dim or word in words:
                continue
            words[word] = len(rows)
            rows.append(values)
        if not rows:
            raise ValueError(f"no vectors found in {path}")
        return cls(words, np.asarray(rows, dtype=np.float64))

    def __contains__(self, word: str) -> bool:
        return word in self._row

    def cosine(self, a: str, b: str) -> float:
        if a not in self._row or b not in self._row:
            return 0.0
        return float(self._unit[self._row[a]] @ self._unit[self._row[b]])


@dataclass(frozen=True)
class LeskConfig:
    scope: Scope = Scope.QUESTION_PLUS_PARAGRAPH
    expansion: frozenset[RelationKind] = frozenset(
        {RelationKind.HYPERNYM, RelationKind.HYPONYM}
    )
    include_examples: bool = True
    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    vectors: WordVectors | None = None
    vector_threshold: float = 0.6


def normalize_context_token(word: str, store: LexicalStore) -> str:
    """First dictionary base form across the parts of speech, else the
    lowercased surface form."""
    lowered = word.lower()
    for pos in _NORMALIZE_POS:
        bases = store.morphy(lowered, pos)
        if bases:
            return bases[0]
    return lowered


def _context_words(text: str, stopwords: frozenset[str]):
    for token in tokenize(text):
        if token.is_word and token.text.lower() not in stopwords:
            yield token.text


def build_window(
    question: str,
    paragraph: str,
    target: CandidateToken,
    scope: Scope,
    store: LexicalStore,
    stopwords: frozenset[str] | None = None,
) -> ContextWindow:
    """Bag of normalized context words, excluding the target's own base form."""
    stopwords = default_stopwords() if stopwords is None else stopwords
    texts = [question]
    if scope is Scope.QUESTION_PLUS_PARAGRAPH:
        texts.append(paragraph)
    bag: Counter = Counter()
    for text in texts:
        for word in _context_words(text, stopwords):
            lemma = normalize_context_token(word, store)
            if lemma != target.base_form:
                bag[lemma] += 1
    return ContextWindow(scope=scope, bag=bag)


def _signature_words(text: str, stopwords: frozenset[str]):
    for token in tokenize(text):
        if token.is_word and token.text.lower() not in stopwords:
            yield token.text.lower()


def sense_signature(
    synset: Synset,
    store: LexicalStore,
    expansion: frozenset[RelationKind] = frozenset(),
    include_examples: bool = True,
    stopwords: frozenset[str] | None = None,
) -> Counter:
    """Lowercased, stopword-filtered material describing one sense.

    Gloss words and example words stay in surface form; multiword lemmas
    contribute their component words.
    """
    stopwords = default_stopwords() if stopwords is None else stopwords
    signature: Counter = Counter()

    def absorb(member: Synset, with_examples: bool):
        signature.update(_signature_words(member.gloss, stopwords))
        if with_examples:
            for example in member.examples:
                signature.update(_signature_words(example, stopwords))
        for lemma in member.lemmas:
            for word in lemma.lower().split("_"):
                if word and word not in stopwords:
                    signature[word] += 1

    absorb(synset, include_examples)
    for kind in sorted(expansion, key=lambda k: k.value):
        for related in store.related(synset, kind):
            absorb(related, include_examples)
    return signature


def _overlap(signature: Counter, window: ContextWindow, config: LeskConfig) -> float:
    exact = sum(min(count, signature[lemma]) for lemma, count in window.bag.items())
    if config.vectors is None:
        return exact
    soft = 0.0
    for lemma, count in window.bag.items():
        unmatched = count - min(count, signature[lemma])
        if unmatched <= 0 or lemma not in config.vectors:
            continue
        best = max(
            (config.vectors.cosine(lemma, sig) for sig in signature if sig != lemma),
            default=0.0,
        )
        if best >= config.vector_threshold:
            soft += unmatched * best
    return round(exact + soft, 6)


def lesk_rank(
    target: CandidateToken,
    window: ContextWindow,
    store: LexicalStore,
    config: LeskConfig | None = None,
) -> DisambiguationResult:
    """Rank the target's senses; ties resolve to the lower sense number."""
    config = config or LeskConfig()
    scored = []
    for position, sense in enumerate(target.senses):
        signature = sense_signature(
            sense,
            store,
            expansion=config.expansion,
            include_examples=config.include_examples,
            stopwords=config.stopwords,
        )
        scored.append((_overlap(signature, window, config), position, sense))
    scored.sort(key=lambda item: (-item[0], item[1]))
    all_scores = tuple(
        SenseScore(synset=sense, score=score, rank=i + 1)
        for i, (score, _, sense) in enumerate(scored)
    )
    return DisambiguationResult(
        target=target,
        chosen=all_scores[0].synset,
        all_scores=all_scores,
        window_used=window.scope,
    )


def disambiguate_question(
    question: str,
    paragraph: str,
    candidates: list[CandidateToken],
    store: LexicalStore,
    config: LeskConfig | None = None,
) -> list[DisambiguationResult]:
    """Independently disambiguate every candidate of one question."""
    config = config or LeskConfig()
    results = []
    for target in candidates:
        window = build_window(
            question, paragraph, target, config.scope, store, config.stopwords
        )
        results.append(lesk_rank(target, window, store, config))
    return results
