"""Review service: log replay, idempotency, protocol endpoints."""

import json
import threading
import urllib.error
import urllib.request

import pytest

from synqa.annotation import ReviewBlock, ReviewValidationError, Verdict
from synqa.generate import AdversarialQuestion, Substitution
from synqa.serve import (
    ReviewService,
    ReviewState,
    VerdictLog,
    VerdictLogError,
    dataset_version,
    make_server,
    record_from_dict,
    record_to_json,
)
from synqa.textprep import Token


def make_candidates(n=10):
    out = {}
    for i in range(n):
        qid = f"q{i:02d}-syn-001"
        sub = Substitution(Token("house", 0, 5), "house", "house.n.01", "dwelling")
        out[qid] = AdversarialQuestion(
            id=qid, origin_id=f"q{i:02d}", text=f"dwelling {i}?",
            substitutions=(sub,), strategy="single",
        )
    return out


def make_service(tmp_path, n=10, log_name="verdicts.jsonl"):
    candidates = make_candidates(n)
    blocks = [ReviewBlock("block-001", tuple(sorted(candidates)))]
    state = ReviewState(
        candidates=candidates,
        blocks=blocks,
        version=dataset_version(b"fixture"),
        paragraphs={qid: f"paragraph {qid}" for qid in candidates},
    )
    return ReviewService(state, VerdictLog(tmp_path / log_name))


def submit(service, qid, verdict="correct", worker="w1", **extra):
    return service.submit(
        {"question_id": qid, "verdict": verdict, "worker_id": worker,
         "flags": extra.get("flags", []),
         "added_synonyms": extra.get("added_synonyms", [])}
    )


class TestVerdictLog:
    def test_round_trip(self, tmp_path):
        log = VerdictLog(tmp_path / "log.jsonl")
        record = record_from_dict(
            {"question_id": "q1", "verdict": "correct", "worker_id": "w"}
        )
        log.append(record, "block-001")
        log.close()
        replayed = VerdictLog(tmp_path / "log.jsonl")
        assert replayed.records == [(record, "block-001")]
        replayed.close()

    def test_torn_tail_is_dropped(self, tmp_path):
        path = tmp_path / "log.jsonl"
        record = record_from_dict({"question_id": "q1", "verdict": "correct"})
        path.write_text(record_to_json(record, "b") + "\n" + '{"question_id": "q2", "ver')
        log = VerdictLog(path)
        assert [r.question_id for r, _ in log.records] == ["q1"]
        log.close()

    def test_corrupt_body_refuses_to_start(self, tmp_path):
        path = tmp_path / "log.jsonl"
        record = record_to_json(
            record_from_dict({"question_id": "q1", "verdict": "correct"}), "b"
        )
        path.write_text("not json at all\n" + record + "\n")
        with pytest.raises(VerdictLogError, match="log.jsonl:1"):
            VerdictLog(path)

    def test_complete_bad_last_line_is_corruption(self, tmp_path):
        path = tmp_path / "log.jsonl"
        path.write_text('{"bad": "record"}\n')
        with pytest.raises(VerdictLogError):
            VerdictLog(path)


class TestReviewService:
    def test_next_returns_lowest_unreviewed_ordinal(self, tmp_path):
        service = make_service(tmp_path)
        first = service.next_unreviewed("block-001")
        assert first["card"]["ordinal"] == 1
        submit(service, "q00-syn-001")
        submit(service, "q01-syn-001")
        after = service.next_unreviewed("block-001")
        assert after["card"]["ordinal"] == 3
        service.log.close()

    def test_completing_a_block_reports_full_progress(self, tmp_path):
        service = make_service(tmp_path, n=10)
        for qid in sorted(service.state.candidates):
            submit(service, qid, verdict="incorrect" if qid.endswith("5-syn-001") else "correct")
        progress = service.progress("block-001")
        assert progress["reviewed"] == 10 and progress["percent"] == 100.0
        final = service.next_unreviewed("block-001")
        assert final["complete"] is True and final["card"] is None
        service.log.close()

    def test_verdicts_survive_restart(self, tmp_path):
        service = make_service(tmp_path)
        submit(service, "q03-syn-001", verdict="incorrect", flags=["idiomatic"])
        service.log.close()
        reborn = make_service(tmp_path)
        records = reborn.records()
        assert len(records) == 1
        assert records[0].question_id == "q03-syn-001"
        assert records[0].flags == frozenset({"idiomatic"})
        assert reborn.progress("block-001")["reviewed"] == 1
        reborn.log.close()

    def test_resubmission_replaces_not_duplicates(self, tmp_path):
        service = make_service(tmp_path)
        submit(service, "q00-syn-001", verdict="incorrect")
        submit(service, "q00-syn-001", verdict="correct")
        records = service.records()
        assert len(records) == 1
        assert records[0].verdict is Verdict.SYNONYM_CORRECT
        assert service.progress("block-001")["reviewed"] == 1
        service.log.close()

    def test_unknown_question_rejected(self, tmp_path):
        service = make_service(tmp_path)
        with pytest.raises(KeyError):
            submit(service, "ghost")
        service.log.close()

    def test_blank_verdict_rejected(self, tmp_path):
        service = make_service(tmp_path)
        with pytest.raises(ReviewValidationError):
            submit(service, "q00-syn-001", verdict="")
        service.log.close()

    def test_rows_carry_review_material(self, tmp_path):
        service = make_service(tmp_path)
        rows = service.block_rows("block-001")["rows"]
        assert len(rows) == 10
        row = rows[0]
        assert row["origin_question"] == "house 0?"
        assert row["generated_question"] == "dwelling 0?"
        assert row["paragraph"].startswith("paragraph")
        assert row["substitutions"][0]["replacement"] == "dwelling"
        service.log.close()

    def test_unknown_block(self, tmp_path):
        service = make_service(tmp_path)
        assert service.block_rows("block-404") is None
        assert service.next_unreviewed("block-404") is None
        assert service.progress("block-404") is None
        service.log.close()


@pytest.fixture
def http_service(tmp_path):
    service = make_service(tmp_path)
    ui = tmp_path / "ui"
    ui.mkdir()
    (ui / "index.html").write_text("<html>review ui</html>")
    server = make_server(service, bind="127.0.0.1:0", ui_dir=ui)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield service, f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()
    service.log.close()


def http_get(url):
    with urllib.request.urlopen(url) as response:
        return response.status, json.loads(response.read())


def http_post(url, payload):
    req = urllib.request.Request(
        url, data=json.dumps(payload).encode(), headers={"Content-Type": "application/json"}
    )
    with urllib.request.urlopen(req) as response:
        return response.status, json.loads(response.read())


class TestHttpLayer:
    def test_every_response_carries_the_version(self, http_service):
        service, root = http_service
        for path in ("/api/blocks", "/api/blocks/block-001/rows",
                     "/api/blocks/block-001/next", "/api/blocks/block-001/progress"):
            status, payload = http_get(root + path)
            assert status == 200
            assert payload["version"] == service.state.version

    def test_submit_and_progress(self, http_service):
        service, root = http_service
        _, nxt = http_get(root + "/api/blocks/block-001/next")
        status, ack = http_post(root + "/api/verdicts", {
            "question_id": nxt["card"]["question_id"],
            "verdict": "correct", "worker_id": "w1",
            "flags": [], "added_synonyms": [],
        })
        assert status == 200 and ack["ok"] is True
        _, progress = http_get(root + "/api/blocks/block-001/progress")
        assert progress["reviewed"] == 1

    def test_validation_error_is_422(self, http_service):
        _, root = http_service
        with pytest.raises(urllib.error.HTTPError) as err:
            http_post(root + "/api/verdicts", {
                "question_id": "q00-syn-001", "verdict": "",
                "worker_id": "w1", "flags": [], "added_synonyms": [],
            })
        assert err.value.code == 422

    def test_unknown_id_is_404(self, http_service):
        _, root = http_service
        with pytest.raises(urllib.error.HTTPError) as err:
            http_post(root + "/api/verdicts", {
                "question_id": "ghost", "verdict": "correct",
                "worker_id": "w1", "flags": [], "added_synonyms": [],
            })
        assert err.value.code == 404

    def test_static_ui_served(self, http_service):
        _, root = http_service
        with urllib.request.urlopen(root + "/") as response:
            assert b"review ui" in response.read()

    def test_path_traversal_blocked(self, http_service):
        _, root = http_service
        with pytest.raises(urllib.error.HTTPError) as err:
            urllib.request.urlopen(root + "/../secrets.txt")
        assert err.value.code == 404
