"""Question tokenization and candidate-token selection.

A question token qualifies for synonym substitution only after it survives
the exclusion filters: stopwords, numbers, proper nouns, punctuation and
fixed prepositional phrases. Surviving tokens become candidates when their
base form has at least one sense in the lexical store.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .wordnet import LexicalStore, PartOfSpeech, Synset

# digit-grouping numbers first, then words (hyphens/apostrophes kept inside)
_TOKEN = re.compile(r"\d+(?:[,.]\d+)+|[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*|\S")
_NUMBER = re.compile(r"\d+(?:[,.]\d+)*(?:st|nd|rd|th)?", re.IGNORECASE)
_WORD = re.compile(r"[A-Za-z0-9]")

# fixed tie-break order when several parts of speech offer senses
_POS_PRIORITY = {
    PartOfSpeech.NOUN: 0,
    PartOfSpeech.VERB: 1,
    PartOfSpeech.ADJECTIVE: 2,
    PartOfSpeech.ADVERB: 3,
}


@dataclass(frozen=True)
class Token:
    """A question token with its character span and exclusion flags."""

    text: str
    start: int
    end: int
    is_stopword: bool = False
    is_number: bool = False
    is_proper_noun: bool = False
    is_punctuation: bool = False

    @property
    def is_word(self) -> bool:
        return not self.is_punctuation

    @property
    def excluded(self) -> bool:
        return self.is_stopword or self.is_number or self.is_proper_noun or self.is_punctuation


@dataclass(frozen=True)
class CandidateToken:
    """A substitutable token with its base form and retrieved senses."""

    token: Token
    base_form: str
    pos: PartOfSpeech
    senses: tuple[Synset, ...]


def load_wordlist(path: Path | str) -> list[str]:
    """Read a UTF-8 word/phrase list, one entry per line, '#' comments."""
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


def _packaged(name: str) -> list[str]:
    text = resources.files("synqa.data").joinpath(name).read_text(encoding="utf-8")
    return [l.strip() for l in text.splitlines() if l.strip() and not l.startswith("#")]


def default_stopwords() -> frozenset[str]:
    return frozenset(w.lower() for w in _packaged("stopwords.txt"))


def default_phrases() -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(p.lower().split()) for p in _packaged("fixed_phrases.txt"))


@dataclass(frozen=True)
class TextPrepConfig:
    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    phrases: tuple[tuple[str, ...], ...] = field(default_factory=default_phrases)
    pos_whitelist: tuple[PartOfSpeech, ...] = (PartOfSpeech.NOUN,)

    def with_extra_stopwords(self, words) -> "TextPrepConfig":
        return replace(self, stopwords=self.stopwords | {w.lower() for w in words})


def tokenize(question: str) -> list[Token]:
    """Whitespace/punctuation tokenization with exact character offsets."""
    tokens = []
    for m in _TOKEN.finditer(question):
        text = m.group()
        tokens.append(
            Token(
                text=text,
                start=m.start(),
                end=m.end(),
                is_punctuation=not _WORD.search(text),
            )
        )
    return tokens


def _capitalized_mid_sentence(text: str, paragraph: str) -> bool:
    """True when ``text`` occurs capitalized in the paragraph at a position
    that does not open a sentence."""
    for m in re.finditer(re.escape(text), paragraph):
        i = m.start() - 1
        while i >= 0 and paragraph[i] in " \t\"'“‘(":
            i -= 1
        if i >= 0 and paragraph[i] not in ".!?":
            return True
    return False


def _has_entry(store: LexicalStore, word: str) -> bool:
    return any(store.morphy(word, pos) for pos in _POS_PRIORITY)


def flag_tokens(
    tokens: list[Token],
    stopwords: frozenset[str],
    phrase_list: tuple[tuple[str, ...], ...] = (),
    *,
    store: LexicalStore | None = None,
    paragraph: str | None = None,
) -> list[Token]:
    """Apply the exclusion flags to a token list.

    Proper-noun detection is purely orthographic: capitalized non-initial
    tokens are proper nouns; a capitalized question-initial token counts only
    when it has no dictionary entry in lowercase but recurs capitalized
    mid-sentence in the paragraph.
    """
    flagged = []
    first_word_index = next((i for i, t in enumerate(tokens) if t.is_word), None)
    for i, tok in enumerate(tokens):
        if tok.is_punctuation:
            flagged.append(tok)
            continue
        is_stop = tok.text.lower() in stopwords
        is_num = bool(_NUMBER.fullmatch(tok.text))
        is_proper = False
        if tok.text[0].isupper():
            if i != first_word_index:
                is_proper = True
            elif store is not None and paragraph:
                is_proper = not _has_entry(store, tok.text.lower()) and _capitalized_mid_sentence(
                    tok.text, paragraph
                )
        flagged.append(
            replace(tok, is_stopword=is_stop, is_number=is_num, is_proper_noun=is_proper)
        )

    # words inside a fixed phrase are excluded like stopwords
    words = [(i, t) for i, t in enumerate(flagged) if t.is_word]
    lowered = [t.text.lower() for _, t in words]
    in_phrase = set()
    for phrase in phrase_list:
        n = len(phrase)
        for at in range(len(lowered) - n + 1):
            if tuple(lowered[at:at + n]) == tuple(phrase):
                in_phrase.update(words[at + k][0] for k in range(n))
    return [
        replace(t, is_stopword=True) if i in in_phrase else t
        for i, t in enumerate(flagged)
    ]


def _candidate_for(token: Token, store: LexicalStore, whitelist) -> CandidateToken | None:
    options = []
    for pos in whitelist:
        for base in store.morphy(token.text, pos):
            senses = store.synsets_for(base, pos)
            if senses:
                options.append((len(senses), pos, base, senses))
                break
    if not options:
        return None
    options.sort(key=lambda o: (-o[0], _POS_PRIORITY[o[1]]))
    _, pos, base, senses = options[0]
    return CandidateToken(token=token, base_form=base, pos=pos, senses=tuple(senses))


def candidates(
    question: str,
    store: LexicalStore,
    config: TextPrepConfig | None = None,
    *,
    paragraph: str | None = None,
) -> list[CandidateToken]:
    """Substitutable tokens of a question, in token order."""
    config = config or TextPrepConfig()
    tokens = flag_tokens(
        tokenize(question),
        config.stopwords,
        config.phrases,
        store=store,
        paragraph=paragraph,
    )
    found = []
    for token in tokens:
        if token.excluded:
            continue
        candidate = _candidate_for(token, store, config.pos_whitelist)
        if candidate is not None:
            found.append(candidate)
    return found
