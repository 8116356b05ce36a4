"""Local HTTP service exposing the review workflow to the browser UI.

State is the fold of an append-only JSON-lines verdict log: every accepted
submission is appended (and fsynced) before it is acknowledged, so replaying
the log after a crash reconstructs the exact state. A torn trailing line
(the expected crash artifact) is dropped on startup; a malformed line in the
body of the log is corruption and refuses to start. Submissions are
idempotent per (question_id, worker_id): the latest record wins.

Every response carries the dataset version hash so stale clients can detect
a swapped candidate set.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .annotation import (
    FLAG_NAMES,
    AnnotationRecord,
    ReviewBlock,
    Verdict,
    ReviewValidationError,
)
from .generate import AdversarialQuestion, revert_substitutions
from .wordnet import LexicalStore


class VerdictLogError(Exception):
    """The verdict log is corrupt beyond the torn-tail crash case."""


_VERDICT_CELLS = {"correct": Verdict.SYNONYM_CORRECT,
                  "incorrect": Verdict.SYNONYM_INCORRECT,
                  "": Verdict.UNREVIEWED}
_CELL_OF = {v: k for k, v in _VERDICT_CELLS.items()}


def record_to_json(record: AnnotationRecord, block_id: str = "") -> str:
    return json.dumps(
        {
            "question_id": record.question_id,
            "verdict": _CELL_OF[record.verdict],
            "flags": sorted(record.flags),
            "added_synonyms": list(record.added_synonyms),
            "worker_id": record.worker_id,
            "original_token": record.original_token,
            "block_id": block_id,
        },
        sort_keys=True,
    )


def record_from_dict(payload: dict) -> AnnotationRecord:
    verdict_cell = payload.get("verdict", "")
    if verdict_cell not in _VERDICT_CELLS:
        raise ReviewValidationError([f"bad verdict {verdict_cell!r}"])
    flags = frozenset(payload.get("flags", ()))
    return AnnotationRecord(
        question_id=str(payload["question_id"]),
        verdict=_VERDICT_CELLS[verdict_cell],
        flags=flags,
        added_synonyms=tuple(
            s.strip() for s in payload.get("added_synonyms", ()) if str(s).strip()
        ),
        worker_id=str(payload.get("worker_id", "")),
        original_token=str(payload.get("original_token", "")),
    )


class VerdictLog:
    """Append-only newline-delimited record log with torn-tail recovery."""

    def __init__(self, path: Path | str):
        self.path = Path(path)
        self.records: list[tuple[AnnotationRecord, str]] = []
        if self.path.exists():
            self._replay()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._fh = open(self.path, "a", encoding="utf-8")

    def _replay(self) -> None:
        raw = self.path.read_bytes().decode("utf-8")
        if not raw:
            return
        complete = raw.endswith("\n")
        lines = raw.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        for i, line in enumerate(lines):
            last = i == len(lines) - 1
            try:
                payload = json.loads(line)
                record = record_from_dict(payload)
            except (json.JSONDecodeError, KeyError, ReviewValidationError) as err:
                if last and not complete:
                    break  # torn tail from a crash mid-append
                raise VerdictLogError(
                    f"{self.path}:{i + 1}: corrupt verdict log ({err})"
                ) from err
            self.records.append((record, str(payload.get("block_id", ""))))

    def append(self, record: AnnotationRecord, block_id: str) -> None:
        self._fh.write(record_to_json(record, block_id) + "\n")
        self._fh.flush()
        os.fsync(self._fh.fileno())
        self.records.append((record, block_id))

    def close(self) -> None:
        self._fh.close()


@dataclass
class ReviewState:
    candidates: dict[str, AdversarialQuestion]
    blocks: list[ReviewBlock]
    version: str
    paragraphs: dict[str, str]  # question id -> paragraph text
    store: LexicalStore | None = None


class ReviewService:
    """Protocol-level review operations, independent of the HTTP layer."""

    def __init__(self, state: ReviewState, log: VerdictLog):
        self.state = state
        self.log = log
        self._lock = threading.Lock()
        self._records: dict[str, AnnotationRecord] = {}
        for record, _ in log.records:
            self._records[record.question_id] = record
        self._block_of = {
            qid: block.block_id
            for block in state.blocks
            for qid in block.question_ids
        }

    # -- queries -------------------------------------------------------------

    def records(self) -> list[AnnotationRecord]:
        with self._lock:
            return list(self._records.values())

    def _reviewed_in(self, block: ReviewBlock) -> int:
        return sum(
            1
            for qid in block.question_ids
            if qid in self._records
            and self._records[qid].verdict is not Verdict.UNREVIEWED
        )

    def list_blocks(self) -> dict:
        with self._lock:
            return {
                "version": self.state.version,
                "blocks": [
                    {
                        "block_id": b.block_id,
                        "size": len(b.question_ids),
                        "reviewed": self._reviewed_in(b),
                        "assigned_domains": list(b.assigned_domains),
                        "worker_id": b.worker_id,
                    }
                    for b in self.state.blocks
                ],
            }

    def _find_block(self, block_id: str) -> ReviewBlock | None:
        for block in self.state.blocks:
            if block.block_id == block_id:
                return block
        return None

    def _row(self, qid: str, ordinal: int) -> dict:
        adv = self.state.candidates[qid]
        record = self._records.get(qid)
        glosses = {}
        if self.state.store is not None:
            for sub in adv.substitutions:
                try:
                    glosses[sub.synset_id] = self.state.store.synset(sub.synset_id).gloss
                except KeyError:
                    glosses[sub.synset_id] = ""
        return {
            "ordinal": ordinal,
            "question_id": qid,
            "origin_question": revert_substitutions(adv),
            "generated_question": adv.text,
            "paragraph": self.state.paragraphs.get(qid, ""),
            "strategy": adv.strategy,
            "substitutions": [
                {
                    "original": sub.original_token.text,
                    "start": sub.original_token.start,
                    "end": sub.original_token.end,
                    "replacement": sub.replacement,
                    "gloss": glosses.get(sub.synset_id, ""),
                }
                for sub in adv.substitutions
            ],
            "verdict": _CELL_OF[record.verdict] if record else "",
            "flags": sorted(record.flags) if record else [],
            "added_synonyms": list(record.added_synonyms) if record else [],
        }

    def block_rows(self, block_id: str) -> dict | None:
        block = self._find_block(block_id)
        if block is None:
            return None
        with self._lock:
            return {
                "version": self.state.version,
                "block_id": block_id,
                "rows": [
                    self._row(qid, i + 1) for i, qid in enumerate(block.question_ids)
                ],
            }

    def next_unreviewed(self, block_id: str) -> dict | None:
        block = self._find_block(block_id)
        if block is None:
            return None
        with self._lock:
            for i, qid in enumerate(block.question_ids):
                record = self._records.get(qid)
                if record is None or record.verdict is Verdict.UNREVIEWED:
                    return {
                        "version": self.state.version,
                        "complete": False,
                        "card": self._row(qid, i + 1),
                        "reviewed": self._reviewed_in(block),
                        "total": len(block.question_ids),
                    }
            return {
                "version": self.state.version,
                "complete": True,
                "card": None,
                "reviewed": self._reviewed_in(block),
                "total": len(block.question_ids),
            }

    def progress(self, block_id: str) -> dict | None:
        block = self._find_block(block_id)
        if block is None:
            return None
        with self._lock:
            reviewed = self._reviewed_in(block)
            total = len(block.question_ids)
            return {
                "version": self.state.version,
                "block_id": block_id,
                "reviewed": reviewed,
                "total": total,
                "percent": round(100.0 * reviewed / total, 2) if total else 0.0,
            }

    # -- mutations -----------------------------------------------------------

    def submit(self, payload: dict) -> dict:
        record = record_from_dict(payload)
        if record.question_id not in self.state.candidates:
            raise KeyError(record.question_id)
        if record.verdict is Verdict.UNREVIEWED:
            raise ReviewValidationError(
                [f"{record.question_id}: a submission needs a verdict"]
            )
        bad = record.flags - set(FLAG_NAMES)
        if bad:
            raise ReviewValidationError([f"unknown flags {sorted(bad)}"])
        block_id = self._block_of.get(record.question_id, "")
        with self._lock:
            self.log.append(record, block_id)
            self._records[record.question_id] = record
            block = self._find_block(block_id)
            reviewed = self._reviewed_in(block) if block else 0
            total = len(block.question_ids) if block else 0
        return {
            "version": self.state.version,
            "ok": True,
            "question_id": record.question_id,
            "block_id": block_id,
            "reviewed": reviewed,
            "total": total,
        }


def dataset_version(*payloads: bytes) -> str:
    digest = hashlib.sha256()
    for payload in payloads:
        digest.update(payload)
    return digest.hexdigest()[:12]


class _Handler(BaseHTTPRequestHandler):
    service: ReviewService = None  # type: ignore[assignment]
    ui_dir: Path | None = None

    def log_message(self, *args):  # silence default stderr chatter
        pass

    def _send_json(self, payload, status=200):
        if "version" not in payload:
            payload = {**payload, "version": self.service.state.version}
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        parts = [p for p in self.path.split("?")[0].split("/") if p]
        if parts == ["api", "version"]:
            return self._send_json({"version": self.service.state.version})
        if parts == ["api", "blocks"]:
            return self._send_json(self.service.list_blocks())
        if len(parts) == 4 and parts[:2] == ["api", "blocks"]:
            block_id, leaf = parts[2], parts[3]
            handler = {
                "rows": self.service.block_rows,
                "next": self.service.next_unreviewed,
                "progress": self.service.progress,
            }.get(leaf)
            if handler is not None:
                payload = handler(block_id)
                if payload is None:
                    return self._send_json({"error": f"no block {block_id}"}, 404)
                return self._send_json(payload)
        if self.ui_dir is not None:
            return self._send_static(parts)
        self._send_json({"error": "not found"}, 404)

    def _send_static(self, parts):
        name = "/".join(parts) if parts else "index.html"
        target = (self.ui_dir / name).resolve()
        if not str(target).startswith(str(self.ui_dir.resolve())) or not target.is_file():
            return self._send_json({"error": "not found"}, 404)
        types = {".html": "text/html", ".js": "text/javascript",
                 ".css": "text/css", ".map": "application/json"}
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", types.get(target.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self):
        if self.path.split("?")[0] != "/api/verdicts":
            return self._send_json({"error": "not found"}, 404)
        length = int(self.headers.get("Content-Length", 0))
        try:
            payload = json.loads(self.rfile.read(length).decode("utf-8"))
            result = self.service.submit(payload)
        except ReviewValidationError as err:
            return self._send_json({"error": str(err)}, 422)
        except KeyError as err:
            return self._send_json({"error": f"unknown question id {err}"}, 404)
        except (json.JSONDecodeError, TypeError) as err:
            return self._send_json({"error": f"bad request: {err}"}, 400)
        self._send_json(result)


def make_server(
    service: ReviewService,
    bind: str = "127.0.0.1:0",
    ui_dir: Path | str | None = None,
) -> ThreadingHTTPServer:
    """Bound (but not yet serving) HTTP server; port 0 picks a free port."""
    host, _, port = bind.partition(":")
    handler = type(
        "BoundHandler",
        (_Handler,),
        {"service": service, "ui_dir": Path(ui_dir) if ui_dir else None},
    )
    return ThreadingHTTPServer((host or "127.0.0.1", int(port or 0)), handler)
