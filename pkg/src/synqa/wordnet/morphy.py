"""WordNet's rule-plus-exception morphological analyzer."""

from __future__ import annotations

from collections.abc import Callable

# Standard suffix detachment rules per part of speech: (suffix, replacement).
DETACHMENT_RULES: dict[str, tuple[tuple[str, str], ...]] = {
    "n": (
        ("s", ""),
        ("ses", "s"),
        ("ves", "f"),
        ("xes", "x"),
        ("zes", "z"),
        ("ches", "ch"),
        ("shes", "sh"),
        ("men", "man"),
        ("ies", "y"),
    ),
    "v": (
        ("s", ""),
        ("ies", "y"),
        ("es", "e"),
        ("es", ""),
        ("ed", "e"),
        ("ed", ""),
        ("ing", "e"),
        ("ing", ""),
    ),
    "a": (
        ("er", ""),
        ("est", ""),
        ("er", "e"),
        ("est", "e"),
    ),
    "r": (),
}


def base_forms(
    word: str,
    pos: str,
    exceptions: dict[str, tuple[str, ...]],
    in_index: Callable[[str], bool],
) -> list[str]:
    """Candidate base forms of ``word`` for one part of speech.

    Order: the word itself (when it is already a headword), exception-list
    bases, then rule-derived forms. Every candidate is checked against the
    index via ``in_index``; duplicates are dropped.
    """
    word = word.lower()
    candidates: list[str] = []
    if in_index(word):
        candidates.append(word)
    for base in exceptions.get(word, ()):
        if in_index(base):
            candidates.append(base)
    for suffix, replacement in DETACHMENT_RULES[pos]:
        if word.endswith(suffix) and len(word) > len(suffix):
            form = word[: len(word) - len(suffix)] + replacement
            if form and in_index(form):
                candidates.append(form)
    seen: set[str] = set()
    unique = []
    for form in candidates:
        if form not in seen:
            seen.add(form)
            unique.append(form)
    return unique
