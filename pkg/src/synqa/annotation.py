"""Human verification workflow over generated questions.

Covers block assignment for crowd workers, spreadsheet-style review file
export/import, seeded quality-control sampling, the per-worker completion
gate, domain identification for question sets, and the final application of
verdicts that turns candidates into the verified dataset.
"""

from __future__ import annotations

import enum
import json
import math
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path

from .generate import (
    AdversarialQuestion,
    Substitution,
    render_replacement,
    revert_substitutions,
)
from .textprep import default_stopwords, tokenize
from .wordnet import LexicalStore


class ReviewSchemaError(Exception):
    """Review file header or layout does not match the export schema."""


class ReviewValidationError(Exception):
    """Rows violate the annotation record rules; carries row numbers."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


class ReviewReferenceError(Exception):
    """Records reference question ids that do not exist."""

    def __init__(self, ids: list[str]):
        super().__init__(f"unknown question ids: {', '.join(sorted(ids))}")
        self.ids = sorted(ids)


class Verdict(str, enum.Enum):
    SYNONYM_CORRECT = "synonym_correct"
    SYNONYM_INCORRECT = "synonym_incorrect"
    UNREVIEWED = "unreviewed"


# annotation cases (i)-(v), in review-file column order
FLAG_NAMES = (
    "q_wrong",
    "idiomatic",
    "fixed_phrase",
    "multiword_entity",
    "improper_sentence",
)

REVIEW_HEADER = (
    "question_id", "origin_question", "paragraph", "original_token",
    "proposed_synonym", "gloss", "verdict",
    "flag_i", "flag_ii", "flag_iii", "flag_iv", "flag_v", "added_synonyms",
)

PARAGRAPH_SNIPPET_LIMIT = 1000


@dataclass(frozen=True)
class AnnotationRecord:
    question_id: str
    verdict: Verdict = Verdict.UNREVIEWED
    flags: frozenset[str] = frozenset()
    added_synonyms: tuple[str, ...] = ()
    worker_id: str = ""
    original_token: str = ""  # row linkage for multi-substitution questions
    valid: bool = True

    def __post_init__(self):
        unknown = self.flags - set(FLAG_NAMES)
        if unknown:
            raise ReviewValidationError([f"unknown flags: {sorted(unknown)}"])
        if self.valid and self.verdict is Verdict.UNREVIEWED and (
            self.flags or self.added_synonyms
        ):
            raise ReviewValidationError(
                [f"{self.question_id}: unreviewed row cannot carry flags or synonyms"]
            )

    @property
    def properly_completed(self) -> bool:
        return self.valid and self.verdict is not Verdict.UNREVIEWED

    @property
    def rejects(self) -> bool:
        return self.verdict is Verdict.SYNONYM_INCORRECT or bool(self.flags)


@dataclass(frozen=True)
class ReviewBlock:
    block_id: str
    question_ids: tuple[str, ...]
    assigned_domains: tuple[str, ...] = ()
    worker_id: str | None = None


@dataclass(frozen=True)
class DomainProfile:
    question_set_id: str
    sampled_ids: tuple[str, ...]
    ranked: tuple[tuple[str, int], ...]
    top2: tuple[str, ...]


# -- block assignment ----------------------------------------------------------


def make_blocks(
    questions: list[AdversarialQuestion],
    seed: int,
    article_of=None,
    min_size: int = 2000,
    max_size: int = 2200,
) -> list[ReviewBlock]:
    """Partition candidates into review blocks of 2000-2200 questions.

    Questions are interleaved round-robin across their source articles (in a
    seed-shuffled article order) so every block mixes articles; the final
    block absorbs the remainder and may be smaller.
    """
    if not questions:
        raise ValueError("no questions to assign")
    if not (0 < min_size <= max_size):
        raise ValueError(f"bad block size bounds [{min_size}, {max_size}]")

    keyed: dict[str, list[str]] = {}
    for q in questions:
        key = article_of(q) if article_of is not None else ""
        keyed.setdefault(key, []).append(q.id)
    articles = list(keyed)
    random.Random(seed).shuffle(articles)

    interleaved: list[str] = []
    queues = [deque(keyed[a]) for a in articles]
    while queues:
        remaining = []
        for queue in queues:
            interleaved.append(queue.popleft())
            if queue:
                remaining.append(queue)
        queues = remaining

    blocks = []
    for i in range(0, len(interleaved), max_size):
        blocks.append(
            ReviewBlock(
                block_id=f"block-{len(blocks) + 1:03d}",
                question_ids=tuple(interleaved[i:i + max_size]),
            )
        )
    return blocks


# -- domain identification -------------------------------------------------------


def _question_text(q) -> str:
    return q.text if hasattr(q, "text") else q.question


def identify_domains(
    questions,
    store: LexicalStore,
    seed: int,
    sample_n: int = 100,
    set_id: str = "question-set",
    stopwords: frozenset[str] | None = None,
) -> DomainProfile:
    """Top domains of a question set, from a seeded sample of its questions.

    Every non-stopword token contributes the domain labels of its first
    sense; ties in the occurrence ranking break alphabetically.
    """
    stopwords = default_stopwords() if stopwords is None else stopwords
    rng = random.Random(seed)
    pool = list(questions)
    sampled = rng.sample(pool, sample_n) if len(pool) > sample_n else pool
    counts: Counter = Counter()
    for q in sampled:
        for token in tokenize(_question_text(q)):
            if not token.is_word or token.text.lower() in stopwords:
                continue
            sense = None
            for pos in ("n", "v", "a", "r"):
                for base in store.morphy(token.text, pos):
                    senses = store.synsets_for(base, pos)
                    if senses:
                        sense = senses[0]
                        break
                if sense is not None:
                    break
            if sense is None:
                continue
            for label in store.domains_of(sense):
                counts[label.label] += 1
    ranked = tuple(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))
    return DomainProfile(
        question_set_id=set_id,
        sampled_ids=tuple(getattr(q, "id") for q in sampled),
        ranked=ranked,
        top2=tuple(label for label, _ in ranked[:2]),
    )


# -- review file export / import -------------------------------------------------


def _clean_cell(text: str) -> str:
    return text.replace("\t", " ").replace("\n", " ").replace("\r", " ")


def _snippet(paragraph: str) -> str:
    if len(paragraph) <= PARAGRAPH_SNIPPET_LIMIT:
        return paragraph
    return paragraph[:PARAGRAPH_SNIPPET_LIMIT] + "…"


def export_review(
    block: ReviewBlock,
    candidates: dict[str, AdversarialQuestion],
    path: Path | str,
    *,
    store: LexicalStore | None = None,
    paragraph_of=None,
) -> int:
    """Write one tab-delimited row per (question, substitution); returns the
    row count. Unknown block members abort the export."""
    missing = [qid for qid in block.question_ids if qid not in candidates]
    if missing:
        raise ReviewReferenceError(missing)

    lines = ["\t".join(REVIEW_HEADER)]
    for qid in block.question_ids:
        adv = candidates[qid]
        origin_question = revert_substitutions(adv)
        paragraph = paragraph_of(adv) if paragraph_of is not None else ""
        for sub in adv.substitutions:
            gloss = ""
            if store is not None:
                try:
                    gloss = store.synset(sub.synset_id).gloss
                except KeyError:
                    gloss = ""
            row = (
                qid,
                _clean_cell(origin_question),
                _clean_cell(_snippet(paragraph)),
                sub.original_token.text,
                sub.replacement,
                _clean_cell(gloss),
                "",  # verdict
                "", "", "", "", "",  # flags (i)-(v)
                "",  # added synonyms
            )
            lines.append("\t".join(row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines) - 1


_VERDICT_CELLS = {
    "correct": Verdict.SYNONYM_CORRECT,
    "incorrect": Verdict.SYNONYM_INCORRECT,
    "": Verdict.UNREVIEWED,
}


def import_verdicts(
    path: Path | str,
    known_ids=None,
    worker: str = "",
    strict: bool = True,
) -> list[AnnotationRecord]:
    """Parse a filled review file back into annotation records.

    With ``strict`` (the default) malformed cells raise a validation error
    listing the row numbers; otherwise the offending rows come back as
    records marked invalid, which the worker gate counts as not properly
    completed.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = [line for line in text.split("\n") if line != ""]
    if not lines or tuple(lines[0].split("\t")) != REVIEW_HEADER:
        raise ReviewSchemaError(f"unexpected header in {path}")

    records: list[AnnotationRecord] = []
    problems: list[str] = []
    unknown_ids: list[str] = []
    for row_no, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != len(REVIEW_HEADER):
            problems.append(f"row {row_no}: expected {len(REVIEW_HEADER)} cells, got {len(cells)}")
            records.append(AnnotationRecord(question_id=f"row-{row_no}", valid=False))
            continue
        qid, _origin, _para, original_token, _syn, _gloss, verdict_cell = cells[:7]
        flag_cells = cells[7:12]
        added_cell = cells[12]
        row_ok = True
        if known_ids is not None and qid not in known_ids:
            unknown_ids.append(qid)
        if verdict_cell not in _VERDICT_CELLS:
            problems.append(f"row {row_no}: bad verdict {verdict_cell!r}")
            row_ok = False
        bad_flags = [c for c in flag_cells if c not in ("", "x")]
        if bad_flags:
            problems.append(f"row {row_no}: bad flag cells {bad_flags}")
            row_ok = False
        verdict = _VERDICT_CELLS.get(verdict_cell, Verdict.UNREVIEWED)
        flags = frozenset(
            name for name, cell in zip(FLAG_NAMES, flag_cells) if cell == "x"
        )
        added = tuple(s.strip() for s in added_cell.split(",") if s.strip())
        if verdict is Verdict.UNREVIEWED and (flags or added):
            problems.append(f"row {row_no}: blank verdict with flags or added synonyms")
            row_ok = False
        records.append(
            AnnotationRecord(
                question_id=qid,
                verdict=verdict if row_ok else Verdict.UNREVIEWED,
                flags=flags if row_ok else frozenset(),
                added_synonyms=added if row_ok else (),
                worker_id=worker,
                original_token=original_token,
                valid=row_ok,
            )
        )
    if unknown_ids:
        raise ReviewReferenceError(unknown_ids)
    if strict and problems:
        raise ReviewValidationError(problems)
    return records


# -- quality control ---------------------------------------------------------------


QC_RATE_BOUNDS = (0.15, 0.20)


def qc_sample(records: list[AnnotationRecord], rate: float, seed: int) -> list[AnnotationRecord]:
    """Seeded audit sample of ceil(rate * N) records, rate within 15-20%."""
    low, high = QC_RATE_BOUNDS
    if not (low <= rate <= high):
        raise ValueError(f"audit rate {rate} outside [{low}, {high}]")
    k = math.ceil(rate * len(records))
    indices = list(range(len(records)))
    random.Random(seed).shuffle(indices)
    return [records[i] for i in indices[:k]]


@dataclass(frozen=True)
class WorkerReport:
    worker_id: str
    total: int
    completed: int

    @property
    def ratio(self) -> float:
        return self.completed / self.total

    @property
    def passed(self) -> bool:
        return self.ratio >= 0.90


def worker_pass(records: list[AnnotationRecord]) -> WorkerReport:
    """Completion gate: at least 90% of a worker's rows properly completed."""
    if not records:
        raise ValueError("no records for worker")
    workers = {r.worker_id for r in records}
    if len(workers) > 1:
        raise ValueError(f"records span multiple workers: {sorted(workers)}")
    completed = sum(1 for r in records if r.properly_completed)
    return WorkerReport(
        worker_id=next(iter(workers)), total=len(records), completed=completed
    )


# -- verdict application ---------------------------------------------------------


@dataclass
class ApplyResult:
    final: list[AdversarialQuestion]
    rejected: list[AdversarialQuestion]
    unreviewed_ids: list[str]
    worker_added: list[AdversarialQuestion] = field(default_factory=list)
    flag_counts: Counter = field(default_factory=Counter)

    @property
    def improper_sentence_rate(self) -> float:
        reviewed = len(self.final) + len(self.rejected)
        if reviewed == 0:
            return 0.0
        return self.flag_counts["improper_sentence"] / reviewed


def apply_verdicts(
    candidates: list[AdversarialQuestion],
    records: list[AnnotationRecord],
    store: LexicalStore | None = None,
) -> ApplyResult:
    """Fold verdicts into the final dataset.

    A question is verified only when every one of its rows says the synonym
    is correct; any rejecting row rejects it. A case (i) flag poisons every
    variant of the same origin question. Worker-added synonyms on clean rows
    spawn new verified questions when renderable, skipping duplicates.
    """
    by_id = {c.id: c for c in candidates}
    dangling = [r.question_id for r in records if r.question_id not in by_id]
    if dangling:
        raise ReviewReferenceError(dangling)

    grouped: dict[str, list[AnnotationRecord]] = {}
    for record in records:
        grouped.setdefault(record.question_id, []).append(record)

    poisoned_origins = {
        by_id[r.question_id].origin_id for r in records if "q_wrong" in r.flags
    }

    final: list[AdversarialQuestion] = []
    rejected: list[AdversarialQuestion] = []
    unreviewed: list[str] = []
    flag_counts: Counter = Counter()
    for candidate in candidates:
        rows = grouped.get(candidate.id, [])
        for row in rows:
            flag_counts.update(row.flags)
        if candidate.origin_id in poisoned_origins:
            rejected.append(candidate.with_status("rejected"))
        elif any(row.rejects for row in rows):
            rejected.append(candidate.with_status("rejected"))
        elif rows and all(
            row.properly_completed and row.verdict is Verdict.SYNONYM_CORRECT
            for row in rows
        ):
            final.append(candidate.with_status("verified"))
        else:
            unreviewed.append(candidate.id)

    # worker-added synonyms: spawned from rows without case flags, for
    # origins that were not poisoned
    next_ordinal: dict[str, int] = {}
    for candidate in candidates:
        ordinal = int(candidate.id.rsplit("-", 1)[1])
        next_ordinal[candidate.origin_id] = max(
            next_ordinal.get(candidate.origin_id, 0), ordinal
        )
    seen_texts = {(c.origin_id, c.text) for c in final}
    worker_added: list[AdversarialQuestion] = []
    for record in records:
        if record.flags or not record.valid or not record.added_synonyms:
            continue
        candidate = by_id[record.question_id]
        if candidate.origin_id in poisoned_origins:
            continue
        origin_question = revert_substitutions(candidate)
        for lemma in record.added_synonyms:
            normalized = lemma.strip().lower().replace(" ", "_")
            for sub in candidate.substitutions:
                if record.original_token and sub.original_token.text != record.original_token:
                    continue
                rendered = render_replacement(
                    sub.original_token, normalized, sub.original_base
                )
                if rendered is None:
                    continue
                new_sub = Substitution(
                    original_token=sub.original_token,
                    original_base=sub.original_base,
                    synset_id=sub.synset_id,
                    replacement=rendered,
                    source="worker_added",
                )
                text = origin_question[:sub.original_token.start] + rendered + \
                    origin_question[sub.original_token.end:]
                if (candidate.origin_id, text) in seen_texts:
                    continue
                seen_texts.add((candidate.origin_id, text))
                next_ordinal[candidate.origin_id] += 1
                worker_added.append(
                    AdversarialQuestion(
                        id=f"{candidate.origin_id}-syn-{next_ordinal[candidate.origin_id]:03d}",
                        origin_id=candidate.origin_id,
                        text=text,
                        substitutions=(new_sub,),
                        strategy="single",
                        status="verified",
                    )
                )
                break

    return ApplyResult(
        final=final + worker_added,
        rejected=rejected,
        unreviewed_ids=unreviewed,
        worker_added=worker_added,
        flag_counts=flag_counts,
    )


# -- persistence -------------------------------------------------------------------


def save_blocks(blocks: list[ReviewBlock], path: Path | str, seed: int | None = None) -> None:
    payload = {
        "seed": seed,
        "blocks": [
            {
                "block_id": b.block_id,
                "question_ids": list(b.question_ids),
                "assigned_domains": list(b.assigned_domains),
                "worker_id": b.worker_id,
            }
            for b in blocks
        ],
    }
    Path(path).write_text(
        json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_blocks(path: Path | str) -> list[ReviewBlock]:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return [
        ReviewBlock(
            block_id=b["block_id"],
            question_ids=tuple(b["question_ids"]),
            assigned_domains=tuple(b.get("assigned_domains", ())),
            worker_id=b.get("worker_id"),
        )
        for b in payload["blocks"]
    ]
