"""Adversarial question generation by synonym substitution.

Two strategies: one variant per renderable synonym of each candidate's chosen
sense ("single"), and one variant replacing every substitutable candidate at
once ("all"). Replacements mirror the original token's casing and inflection
with naive rules; tokens whose inflection cannot be mirrored are skipped.
Substitution records keep the origin offsets, so every generated question can
be reverted to its origin byte-for-byte.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, replace

from .textprep import TextPrepConfig, Token, candidates
from .wordnet import LexicalStore
from .wsd import DisambiguationResult, LeskConfig, disambiguate_question

_VOWELS = "aeiou"


@dataclass(frozen=True)
class Substitution:
    """One token replacement with full provenance."""

    original_token: Token
    original_base: str
    synset_id: str
    replacement: str
    source: str = "wsd"  # or "worker_added"


@dataclass(frozen=True)
class AdversarialQuestion:
    id: str
    origin_id: str
    text: str
    substitutions: tuple[Substitution, ...]
    strategy: str  # "single" or "all"
    status: str = "candidate"  # "candidate", "verified" or "rejected"

    def with_status(self, status: str) -> "AdversarialQuestion":
        return replace(self, status=status)


# -- inflection mirroring ---------------------------------------------------


def _ends_cvc(word: str) -> bool:
    return (
        len(word) >= 3
        and word[-1] not in _VOWELS + "wxy"
        and word[-2] in _VOWELS
        and word[-3] not in _VOWELS
    )


def _plural_forms(base: str) -> list[str]:
    forms = []
    if base.endswith(("s", "x", "z", "ch", "sh")):
        forms.append(base + "es")
    if base.endswith("y") and len(base) > 1 and base[-2] not in _VOWELS:
        forms.append(base[:-1] + "ies")
    forms.append(base + "s")
    return forms


def _past_forms(base: str) -> list[str]:
    forms = []
    if base.endswith("e"):
        forms.append(base + "d")
    if base.endswith("y") and len(base) > 1 and base[-2] not in _VOWELS:
        forms.append(base[:-1] + "ied")
    forms.append(base + "ed")
    if _ends_cvc(base):
        forms.append(base + base[-1] + "ed")
    return forms


def _gerund_forms(base: str) -> list[str]:
    forms = [base + "ing"]
    if base.endswith("e") and len(base) > 2 and not base.endswith("ee"):
        forms.append(base[:-1] + "ing")
    if _ends_cvc(base):
        forms.append(base + base[-1] + "ing")
    return forms


_CATEGORIES = (
    ("plural", _plural_forms),
    ("past", _past_forms),
    ("gerund", _gerund_forms),
)


def _inflection_of(surface: str, base: str) -> str | None:
    """Name the inflection that maps base -> surface, if any rule does."""
    if surface == base:
        return "none"
    for name, rule in _CATEGORIES:
        if surface in rule(base):
            return name
    return None


def _inflect(word: str, category: str) -> str:
    if category == "none":
        return word
    if category == "plural":
        if word.endswith(("s", "x", "z", "ch", "sh")):
            return word + "es"
        if word.endswith("y") and len(word) > 1 and word[-2] not in _VOWELS:
            return word[:-1] + "ies"
        return word + "s"
    if category == "past":
        if word.endswith("e"):
            return word + "d"
        if word.endswith("y") and len(word) > 1 and word[-2] not in _VOWELS:
            return word[:-1] + "ied"
        if _ends_cvc(word) and len(word) <= 4:
            return word + word[-1] + "ed"
        return word + "ed"
    if category == "gerund":
        if word.endswith("e") and len(word) > 2 and not word.endswith("ee"):
            return word[:-1] + "ing"
        if _ends_cvc(word) and len(word) <= 4:
            return word + word[-1] + "ing"
        return word + "ing"
    raise ValueError(f"unknown inflection category {category!r}")


def _match_case(rendered: str, original: str) -> str:
    if original.isupper() and len(original) > 1:
        return rendered.upper()
    if original[:1].isupper():
        return rendered[:1].upper() + rendered[1:]
    return rendered


def render_replacement(original: Token, synonym_lemma: str, original_base: str) -> str | None:
    """Surface string for a synonym in place of ``original``, or None when
    the original's casing/inflection cannot be mirrored."""
    category = _inflection_of(original.text.lower(), original_base.lower())
    if category is None:
        return None
    words = synonym_lemma.lower().split("_")
    words[-1] = _inflect(words[-1], category)
    rendered = _match_case(" ".join(words), original.text)
    if rendered.lower() == original.text.lower():
        return None
    return rendered


# -- substitution application ------------------------------------------------


def apply_substitutions(question: str, substitutions: Iterable[Substitution]) -> str:
    """Insert replacements right-to-left so earlier offsets stay valid."""
    text = question
    for sub in sorted(substitutions, key=lambda s: s.original_token.start, reverse=True):
        tok = sub.original_token
        assert question[tok.start:tok.end] == tok.text
        text = text[:tok.start] + sub.replacement + text[tok.end:]
    return text


def revert_substitutions(adversarial: AdversarialQuestion) -> str:
    """Undo the recorded substitutions, reproducing the origin question."""
    spans = []
    delta = 0
    for sub in sorted(adversarial.substitutions, key=lambda s: s.original_token.start):
        start = sub.original_token.start + delta
        spans.append((start, start + len(sub.replacement), sub.original_token.text))
        delta += len(sub.replacement) - len(sub.original_token.text)
    text = adversarial.text
    for start, end, original in reversed(spans):
        text = text[:start] + original + text[end:]
    return text


# -- generation ---------------------------------------------------------------


class _IdSequence:
    def __init__(self, origin_id: str, start: int = 1):
        self.origin_id = origin_id
        self.next_ordinal = start

    def take(self) -> str:
        ordinal = self.next_ordinal
        self.next_ordinal += 1
        return f"{self.origin_id}-syn-{ordinal:03d}"


def generate_single(
    item,
    results: list[DisambiguationResult],
    store: LexicalStore,
    _ids: _IdSequence | None = None,
) -> list[AdversarialQuestion]:
    """One variant per renderable synonym of each candidate's chosen sense."""
    ids = _ids or _IdSequence(item.id)
    variants = []
    for result in results:
        cand = result.target
        for lemma in store.synonyms_of(result.chosen, cand.base_form):
            rendered = render_replacement(cand.token, lemma, cand.base_form)
            if rendered is None:
                continue
            sub = Substitution(
                original_token=cand.token,
                original_base=cand.base_form,
                synset_id=result.chosen.id,
                replacement=rendered,
            )
            variants.append(
                AdversarialQuestion(
                    id=ids.take(),
                    origin_id=item.id,
                    text=apply_substitutions(item.question, [sub]),
                    substitutions=(sub,),
                    strategy="single",
                )
            )
    return variants


def generate_all(
    item,
    results: list[DisambiguationResult],
    store: LexicalStore,
    _ids: _IdSequence | None = None,
) -> AdversarialQuestion | None:
    """One variant replacing every candidate that has a renderable synonym."""
    ids = _ids or _IdSequence(item.id)
    subs = []
    for result in results:
        cand = result.target
        for lemma in store.synonyms_of(result.chosen, cand.base_form):
            rendered = render_replacement(cand.token, lemma, cand.base_form)
            if rendered is not None:
                subs.append(
                    Substitution(
                        original_token=cand.token,
                        original_base=cand.base_form,
                        synset_id=result.chosen.id,
                        replacement=rendered,
                    )
                )
                break
    if not subs:
        return None
    return AdversarialQuestion(
        id=ids.take(),
        origin_id=item.id,
        text=apply_substitutions(item.question, subs),
        substitutions=tuple(subs),
        strategy="all",
    )


def build_adversarial_set(
    pairs,
    store: LexicalStore,
    *,
    lesk: LeskConfig | None = None,
    textprep: TextPrepConfig | None = None,
    strategies: tuple[str, ...] = ("single", "all"),
) -> list[AdversarialQuestion]:
    """Candidate adversarial set over (item, paragraph) pairs.

    Answers and paragraphs stay untouched; only question text changes. The
    output is deterministic for fixed inputs and configuration.
    """
    lesk = lesk or LeskConfig()
    textprep = textprep or TextPrepConfig()
    unknown = set(strategies) - {"single", "all"}
    if unknown:
        raise ValueError(f"unknown strategies: {sorted(unknown)}")
    generated = []
    for item, paragraph in pairs:
        found = candidates(item.question, store, textprep, paragraph=paragraph)
        results = disambiguate_question(item.question, paragraph, found, store, lesk)
        ids = _IdSequence(item.id)
        if "single" in strategies:
            generated.extend(generate_single(item, results, store, ids))
        if "all" in strategies:
            variant = generate_all(item, results, store, ids)
            if variant is not None:
                generated.append(variant)
    return generated
