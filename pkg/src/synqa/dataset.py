"""SQuAD-2.0-format reading and writing, provenance sidecars and splits.

Serialization is canonical: sorted JSON keys, articles in input order,
paragraphs by index, questions sorted by id. Reading and re-writing a valid
file preserves its semantic content. Adversarial datasets are emitted in the
same schema so stock evaluators consume them; substitution provenance lives
in a JSON-lines sidecar next to the dataset.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .generate import AdversarialQuestion, Substitution
from .textprep import Token


class SquadSchemaError(Exception):
    """Input does not follow the SQuAD 2.0 schema; carries the node path."""


class SquadWriteError(Exception):
    """An item references a paragraph that is not being written."""


@dataclass(frozen=True)
class Article:
    title: str
    paragraphs: tuple[str, ...]


@dataclass(frozen=True)
class QAItem:
    id: str
    question: str
    paragraph_ref: tuple[str, int]  # (article title, paragraph index)
    answers: tuple[tuple[str, int], ...]  # (text, answer_start)
    is_impossible: bool


@dataclass
class SquadData:
    version: str
    articles: list[Article]
    items: list[QAItem]
    issues: list[str] = field(default_factory=list)

    def __post_init__(self):
        self._contexts = {
            (a.title, i): p for a in self.articles for i, p in enumerate(a.paragraphs)
        }

    def context_of(self, item: QAItem) -> str:
        return self._contexts[item.paragraph_ref]

    def pairs(self):
        """(item, paragraph) tuples in item order."""
        return [(item, self.context_of(item)) for item in self.items]

    def by_id(self) -> dict[str, QAItem]:
        return {item.id: item for item in self.items}


def _require(node, key, path):
    if not isinstance(node, dict) or key not in node:
        raise SquadSchemaError(f"missing {key!r} at {path}")
    return node[key]


def read_squad(path: Path | str) -> SquadData:
    """Load a SQuAD 2.0 file; answer-offset violations are reported, not fatal.

    Files without ``is_impossible`` (the 1.1 schema) load with the flag set
    to false on every question.
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SquadSchemaError(f"not JSON: {path} ({err})") from err

    articles: list[Article] = []
    items: list[QAItem] = []
    issues: list[str] = []
    data = _require(raw, "data", "$")
    if not isinstance(data, list):
        raise SquadSchemaError("'data' is not an array at $")
    for ai, art in enumerate(data):
        art_path = f"$.data[{ai}]"
        title = _require(art, "title", art_path)
        paragraphs = _require(art, "paragraphs", art_path)
        contexts = []
        for pi, para in enumerate(paragraphs):
            para_path = f"{art_path}.paragraphs[{pi}]"
            context = _require(para, "context", para_path)
            contexts.append(context)
            for qi, qa in enumerate(_require(para, "qas", para_path)):
                qa_path = f"{para_path}.qas[{qi}]"
                qid = _require(qa, "id", qa_path)
                question = _require(qa, "question", qa_path)
                answers_raw = _require(qa, "answers", qa_path)
                impossible = bool(qa.get("is_impossible", False))
                answers = []
                for an in answers_raw:
                    text = _require(an, "text", qa_path + ".answers")
                    start = _require(an, "answer_start", qa_path + ".answers")
                    answers.append((text, int(start)))
                    if context[int(start):int(start) + len(text)] != text:
                        issues.append(f"{qid}: answer offset {start} does not match {text!r}")
                if impossible and answers:
                    issues.append(f"{qid}: is_impossible with gold answers")
                if not impossible and not answers:
                    issues.append(f"{qid}: answerable without gold answers")
                items.append(
                    QAItem(
                        id=str(qid),
                        question=question,
                        paragraph_ref=(title, pi),
                        answers=tuple(answers),
                        is_impossible=impossible,
                    )
                )
        articles.append(Article(title=title, paragraphs=tuple(contexts)))
    return SquadData(
        version=str(raw.get("version", "v2.0")),
        articles=articles,
        items=items,
        issues=issues,
    )


def write_squad(articles: list[Article], items: list[QAItem], path: Path | str,
                version: str = "v2.0") -> None:
    """Canonical SQuAD 2.0 serialization (stable key and item order)."""
    grouped: dict[tuple[str, int], list[QAItem]] = {}
    known = {(a.title, i) for a in articles for i in range(len(a.paragraphs))}
    for item in items:
        if item.paragraph_ref not in known:
            raise SquadWriteError(f"{item.id}: unknown paragraph {item.paragraph_ref}")
        grouped.setdefault(item.paragraph_ref, []).append(item)

    data = []
    for article in articles:
        paragraphs = []
        for pi, context in enumerate(article.paragraphs):
            qas = [
                {
                    "id": item.id,
                    "question": item.question,
                    "answers": [
                        {"text": text, "answer_start": start}
                        for text, start in item.answers
                    ],
                    "is_impossible": item.is_impossible,
                }
                for item in sorted(grouped.get((article.title, pi), []), key=lambda i: i.id)
            ]
            paragraphs.append({"context": context, "qas": qas})
        data.append({"title": article.title, "paragraphs": paragraphs})
    payload = {"version": version, "data": data}
    Path(path).write_text(
        json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def adversarial_to_items(
    adversarials: list[AdversarialQuestion], base_items: dict[str, QAItem]
) -> list[QAItem]:
    """SQuAD items for generated questions: answers and paragraph come from
    the origin untouched, so answerability is preserved by construction."""
    items = []
    for adv in adversarials:
        if adv.origin_id not in base_items:
            raise SquadWriteError(f"{adv.id}: origin {adv.origin_id} not in base dataset")
        origin = base_items[adv.origin_id]
        items.append(
            QAItem(
                id=adv.id,
                question=adv.text,
                paragraph_ref=origin.paragraph_ref,
                answers=origin.answers,
                is_impossible=origin.is_impossible,
            )
        )
    return items


# -- provenance sidecar -------------------------------------------------------


def write_provenance(adversarials: list[AdversarialQuestion], path: Path | str) -> None:
    """One JSON record per generated question, sorted by id."""
    lines = []
    for adv in sorted(adversarials, key=lambda a: a.id):
        record = {
            "id": adv.id,
            "origin_id": adv.origin_id,
            "strategy": adv.strategy,
            "status": adv.status,
            "text": adv.text,
            "substitutions": [
                {
                    "start": sub.original_token.start,
                    "end": sub.original_token.end,
                    "original": sub.original_token.text,
                    "base": sub.original_base,
                    "synset_id": sub.synset_id,
                    "replacement": sub.replacement,
                    "source": sub.source,
                }
                for sub in adv.substitutions
            ],
        }
        lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def read_provenance(path: Path | str) -> list[AdversarialQuestion]:
    adversarials = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        record = json.loads(line)
        subs = tuple(
            Substitution(
                original_token=Token(
                    text=s["original"], start=s["start"], end=s["end"]
                ),
                original_base=s["base"],
                synset_id=s["synset_id"],
                replacement=s["replacement"],
                source=s["source"],
            )
            for s in record["substitutions"]
        )
        adversarials.append(
            AdversarialQuestion(
                id=record["id"],
                origin_id=record["origin_id"],
                text=record["text"],
                substitutions=subs,
                strategy=record["strategy"],
                status=record["status"],
            )
        )
    return adversarials


# -- seeded splits -------------------------------------------------------------


@dataclass(frozen=True)
class DatasetSplit:
    seed: int
    parts: dict[str, float]
    assignment: dict[str, str]  # question id -> part name

    def ids_of(self, part: str) -> list[str]:
        return [qid for qid, name in self.assignment.items() if name == part]


def split(items: list[QAItem], fractions: dict[str, float], seed: int) -> DatasetSplit:
    """Seeded shuffle then contiguous cut; sizes by largest remainder."""
    if not fractions:
        raise ValueError("no split fractions given")
    if any(f <= 0 for f in fractions.values()):
        raise ValueError("split fractions must be positive")
    if not math.isclose(sum(fractions.values()), 1.0, abs_tol=1e-9):
        raise ValueError(f"split fractions sum to {sum(fractions.values())}, not 1")

    n = len(items)
    names = list(fractions)
    base = {name: int(n * fractions[name]) for name in names}
    remainder = n - sum(base.values())
    by_remainder = sorted(
        names, key=lambda name: (-(n * fractions[name] - base[name]), names.index(name))
    )
    for name in by_remainder[:remainder]:
        base[name] += 1

    ids = [item.id for item in items]
    random.Random(seed).shuffle(ids)
    assignment = {}
    cursor = 0
    for name in names:
        for qid in ids[cursor:cursor + base[name]]:
            assignment[qid] = name
        cursor += base[name]
    return DatasetSplit(seed=seed, parts=dict(fractions), assignment=assignment)
