"""Exact-match scoring and base-vs-adversarial paired reports.

Answer normalization follows the official SQuAD convention: lowercase,
strip punctuation, drop the articles a/an/the, collapse whitespace.
Unanswerable questions match only an empty prediction. Accuracy is kept as
an exact rational and rendered to two decimals.
"""

from __future__ import annotations

import json
import re
import string
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .generate import AdversarialQuestion

_ARTICLES = re.compile(r"\b(a|an|the)\b")
_PUNCT = set(string.punctuation)


class ProvenanceError(Exception):
    """Adversarial ids in a report are missing from the provenance sidecar."""

    def __init__(self, ids: list[str]):
        super().__init__(f"unresolvable ids: {', '.join(sorted(ids))}")
        self.ids = sorted(ids)


def normalize_answer(s: str) -> str:
    s = s.lower()
    s = "".join(ch for ch in s if ch not in _PUNCT)
    s = _ARTICLES.sub(" ", s)
    return " ".join(s.split())


def exact_match(predicted: str, golds: list[str], is_impossible: bool) -> bool:
    normalized = normalize_answer(predicted)
    if is_impossible:
        return normalized == ""
    return any(normalized == normalize_answer(g) for g in golds)


@dataclass(frozen=True)
class QuestionOutcome:
    match: bool
    predicted: str | None  # None when the prediction file had no entry
    golds: tuple[str, ...]


def _two_decimals(value: Fraction) -> str:
    return str(
        (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
            Decimal("0.01"), rounding=ROUND_HALF_UP
        )
    )


@dataclass(frozen=True)
class EvalReport:
    dataset: str
    n_questions: int
    n_exact_match: int
    per_question: dict[str, QuestionOutcome]
    missing_ids: tuple[str, ...]  # dataset ids absent from the predictions
    extra_ids: tuple[str, ...]  # prediction ids absent from the dataset

    @property
    def accuracy(self) -> Fraction:
        return Fraction(100 * self.n_exact_match, self.n_questions)

    @property
    def accuracy_str(self) -> str:
        return _two_decimals(self.accuracy)

    def row(self) -> str:
        return "\t".join(
            (self.dataset, str(self.n_questions), str(self.n_exact_match),
             self.accuracy_str)
        )

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "n_questions": self.n_questions,
            "n_exact_match": self.n_exact_match,
            "accuracy": self.accuracy_str,
            "missing_predictions": list(self.missing_ids),
            "unknown_prediction_ids": list(self.extra_ids),
            "per_question": {
                qid: {
                    "match": out.match,
                    "predicted": out.predicted,
                    "golds": list(out.golds),
                }
                for qid, out in self.per_question.items()
            },
        }


def score(items, predictions: dict[str, str], dataset: str = "dataset") -> EvalReport:
    """Exact-match report over a dataset. Items missing from the prediction
    mapping count as wrong; prediction ids outside the dataset are listed as
    warnings, never failures."""
    if not items:
        raise ValueError("empty dataset")
    per_question: dict[str, QuestionOutcome] = {}
    missing = []
    matches = 0
    for item in items:
        golds = tuple(text for text, _ in item.answers)
        if item.id in predictions:
            predicted = predictions[item.id]
            matched = exact_match(predicted, list(golds), item.is_impossible)
        else:
            predicted = None
            matched = False
            missing.append(item.id)
        matches += matched
        per_question[item.id] = QuestionOutcome(
            match=matched, predicted=predicted, golds=golds
        )
    extra = tuple(sorted(set(predictions) - set(per_question)))
    return EvalReport(
        dataset=dataset,
        n_questions=len(per_question),
        n_exact_match=matches,
        per_question=per_question,
        missing_ids=tuple(missing),
        extra_ids=extra,
    )


def render_table(reports: list[EvalReport]) -> str:
    lines = ["dataset\tn\texact_match\taccuracy"]
    lines.extend(report.row() for report in reports)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PairedReport:
    """Per-origin pairing of the base outcome with its variants' outcomes."""

    pairs: dict[str, tuple[bool, tuple[tuple[str, bool], ...]]]
    fragility: Fraction
    lucky_hit_candidates: tuple[str, ...]

    @property
    def fragility_str(self) -> str:
        return _two_decimals(100 * self.fragility)

    def to_dict(self) -> dict:
        return {
            "fragility": self.fragility_str,
            "lucky_hit_candidates": list(self.lucky_hit_candidates),
            "pairs": {
                origin: {
                    "base_match": base,
                    "variants": [{"id": vid, "match": m} for vid, m in variants],
                }
                for origin, (base, variants) in self.pairs.items()
            },
        }


def paired_report(
    base_report: EvalReport,
    adv_report: EvalReport,
    provenance: list[AdversarialQuestion],
) -> PairedReport:
    """Pair every adversarial outcome with its origin's outcome.

    Fragility: among origins answered correctly in base form (and having at
    least one scored variant), the fraction with at least one incorrect
    variant. Those origins are the lucky-hit candidates.
    """
    origin_of = {adv.id: adv.origin_id for adv in provenance}
    unresolvable = [qid for qid in adv_report.per_question if qid not in origin_of]
    unresolvable += [
        qid for qid in adv_report.per_question
        if qid in origin_of and origin_of[qid] not in base_report.per_question
    ]
    if unresolvable:
        raise ProvenanceError(unresolvable)

    grouped: dict[str, list[tuple[str, bool]]] = {}
    for qid, outcome in adv_report.per_question.items():
        grouped.setdefault(origin_of[qid], []).append((qid, outcome.match))

    pairs = {}
    fragile = []
    correct_with_variants = 0
    for origin, variants in grouped.items():
        base_match = base_report.per_question[origin].match
        pairs[origin] = (base_match, tuple(sorted(variants)))
        if base_match:
            correct_with_variants += 1
            if any(not match for _, match in variants):
                fragile.append(origin)
    fragility = (
        Fraction(len(fragile), correct_with_variants)
        if correct_with_variants
        else Fraction(0)
    )
    return PairedReport(
        pairs=pairs,
        fragility=fragility,
        lucky_hit_candidates=tuple(sorted(fragile)),
    )


def read_predictions(path) -> dict[str, str]:
    """Standard predictions file: one JSON object mapping id -> answer."""
    raw = json.loads(open(path, encoding="utf-8").read())
    if not isinstance(raw, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in raw.items()
    ):
        raise ValueError(f"{path}: predictions must map question ids to strings")
    return raw
