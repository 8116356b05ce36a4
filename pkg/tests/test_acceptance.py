"""Acceptance suite: one test per release criterion.

Runs against the bundled dictionary and corpus by default; set
WORDNET_DICT_DIR and/or SQUAD_DEV_PATH to point the same criteria at a
stock WordNet 3.0 installation and the real development file. Every pinned
fact holds in both.
"""

import time
from fractions import Fraction

import pytest

from synqa.annotation import (
    identify_domains,
    make_blocks,
    qc_sample,
    worker_pass,
)
from synqa.cli import main
from synqa.dataset import read_squad, split
from synqa.evaluate import exact_match, render_table, score
from synqa.generate import build_adversarial_set, revert_substitutions
from synqa.textprep import candidates
from synqa.wordnet import PartOfSpeech, RelationKind, load_wordnet
from synqa.wsd import LeskConfig, Scope, build_window, lesk_rank

from tests.fixtures import (
    ASSEMBLY_GLOSS,
    DRIFT_QUESTION,
    DRIFT_VARIANT,
    WSD_SAMPLE_PARAGRAPH,
    WSD_SAMPLE_QUESTION,
)
from tests.test_annotation import FIXTURE_QUESTIONS, make_questions
from tests.test_dataset_io import make_items
from tests.test_evaluate import ORACLE_TABLE, make_item
from tests.test_wsd import candidate_for, gold_accuracy


def passed(name: str):
    print(f"ACCEPTANCE PASS: {name}")


@pytest.fixture(scope="module")
def acceptance_store(acceptance_dict_dir):
    return load_wordnet(acceptance_dict_dir)


@pytest.fixture(scope="module")
def corpus(base_dataset_path):
    return read_squad(base_dataset_path)


def test_wordnet_fidelity(acceptance_dict_dir):
    started = time.monotonic()
    store = load_wordnet(acceptance_dict_dir)
    elapsed = time.monotonic() - started
    senses = store.synsets_for("house")
    assert len(senses) == 14, f"house has {len(senses)} senses, wanted 14"
    nouns = store.synsets_for("house", PartOfSpeech.NOUN)
    assert nouns[0].id == "house.n.01"
    assert "living quarters" in nouns[0].gloss
    assert elapsed < 5.0, f"load took {elapsed:.2f}s"
    passed(f"wordnet-fidelity (loaded {len(store)} synsets in {elapsed:.2f}s)")


def test_relation_goldens(acceptance_store):
    store = acceptance_store

    def related_lemmas(word, pos, kind):
        out = set()
        for sense in store.synsets_for(word, pos):
            for target in store.related(sense, kind):
                out.update(target.lemmas)
        return out

    assert "furniture" in related_lemmas("bed", "n", RelationKind.HYPERNYM)
    chair_parts = related_lemmas("chair", "n", RelationKind.PART_MERONYM)
    assert "back" in chair_parts and "seat" in chair_parts
    assert "pay" in related_lemmas("buy", "v", RelationKind.ENTAILMENT)
    assert "dry" in related_lemmas("wet", "a", RelationKind.ANTONYM)
    passed("relation-goldens (bed/chair/buy/wet)")


def test_worked_example_wsd(acceptance_store):
    store = acceptance_store
    target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
    config = LeskConfig()  # default: paragraph scope, hypernym+hyponym, examples
    window = build_window(
        WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
        Scope.QUESTION_PLUS_PARAGRAPH, store, config.stopwords,
    )
    chosen = lesk_rank(target, window, store, config).chosen
    assert chosen.gloss.lower() == ASSEMBLY_GLOSS.lower()
    passed("worked-example-wsd (house -> legislative assembly sense)")


def test_context_scope_property(store):
    question_only = gold_accuracy(store, Scope.QUESTION_ONLY)
    with_paragraph = gold_accuracy(store, Scope.QUESTION_PLUS_PARAGRAPH)
    assert with_paragraph >= question_only
    passed(
        "context-scope-property "
        f"(question-only {question_only:.2f} <= paragraph {with_paragraph:.2f})"
    )


@pytest.fixture(scope="module")
def generated(corpus, acceptance_store):
    return build_adversarial_set(corpus.pairs(), acceptance_store)


def test_generator_reversibility(corpus, generated):
    assert len(generated) >= 1000, f"only {len(generated)} generated questions"
    origin = corpus.by_id()
    for adv in generated:
        assert revert_substitutions(adv) == origin[adv.origin_id].question
        assert adv.text != origin[adv.origin_id].question
    passed(f"generator-reversibility ({len(generated)} questions, byte-exact)")


def test_drift_example_end_to_end(acceptance_store):
    store = acceptance_store
    from synqa.generate import generate_single
    from synqa.wsd import disambiguate_question

    class Item:
        id = "intro-q1"
        question = DRIFT_QUESTION

    found = candidates(DRIFT_QUESTION, store)
    results = disambiguate_question(DRIFT_QUESTION, "", found, store)
    variants = generate_single(Item(), results, store)
    assert DRIFT_VARIANT in [v.text for v in variants]
    passed("drift-example-end-to-end (direction -> way)")


def test_workflow_arithmetic(store):
    # block sizing, with the final-block exception
    for n, expected in ((4400, [2200, 2200]), (500, [500])):
        blocks = make_blocks(make_questions(n), seed=3)
        assert [len(b.question_ids) for b in blocks] == expected
    sizes = [len(b.question_ids) for b in make_blocks(make_questions(6300), seed=3)]
    assert all(2000 <= s <= 2200 for s in sizes[:-1]) and sum(sizes) == 6300

    # audit sampling bounds and size
    records = [r for r in _records_for_gate(100, 100)]
    assert len(qc_sample(records, 0.15, seed=1)) == 15
    for rate in (0.14, 0.21):
        with pytest.raises(ValueError):
            qc_sample(records, rate, seed=1)

    # inclusive completion threshold
    assert worker_pass(_records_for_gate(100, 90)).passed
    assert not worker_pass(_records_for_gate(100, 89)).passed

    # domain identification against the hand-counted fixture
    import dataclasses

    wrapped = [
        dataclasses.make_dataclass("Q", ["id", "question"])(f"q{i}", text)
        for i, text in enumerate(FIXTURE_QUESTIONS)
    ]
    profile = identify_domains(wrapped, store, seed=5)
    assert profile.top2 == ("politics", "gastronomy")
    assert profile.ranked[0] == ("politics", 4)
    passed("workflow-arithmetic (blocks, qc bounds, 90% gate, domain top-2)")


def _records_for_gate(total, completed):
    from synqa.annotation import AnnotationRecord, Verdict

    return [
        AnnotationRecord(
            f"q{i}",
            Verdict.SYNONYM_CORRECT if i < completed else Verdict.UNREVIEWED,
            worker_id="w",
        )
        for i in range(total)
    ]


def test_split_determinism():
    items = make_items(5000)
    first = split(items, {"train": 0.8, "test": 0.2}, seed=41)
    second = split(items, {"train": 0.8, "test": 0.2}, seed=41)
    assert first == second
    train, test = set(first.ids_of("train")), set(first.ids_of("test"))
    assert len(train) == 4000 and len(test) == 1000
    assert not (train & test)
    assert train | test == {i.id for i in items}
    passed("split-determinism (5000 -> 4000/1000, seed-stable)")


def test_scorer_oracle():
    for predicted, golds, impossible, expected in ORACLE_TABLE:
        assert exact_match(predicted, golds, impossible) is expected

    items = [make_item(f"q{i}") for i in range(50)]
    items += [make_item(f"imp{i}", impossible=True) for i in range(10)]
    gold_as_predictions = {
        item.id: (item.answers[0][0] if item.answers else "") for item in items
    }
    assert score(items, gold_as_predictions).accuracy_str == "100.00"

    rows = []
    for name, matches in (("fixture-small", 406), ("fixture-base", 443),
                          ("fixture-large", 445)):
        part = [make_item(f"{name}-{i}") for i in range(2000)]
        predictions = {
            item.id: ("four years" if i < matches else "miss")
            for i, item in enumerate(part)
        }
        rows.append(score(part, predictions, dataset=name))
    rendered = render_table(rows)
    for cell in ("20.30", "22.15", "22.25"):
        assert cell in rendered
    assert rows[0].accuracy == Fraction(2030, 100)
    passed("scorer-oracle (20-case table, gold=100.00, two-decimal rendering)")


def test_full_pipeline_determinism(base_dataset_path, acceptance_dict_dir, tmp_path):
    started = time.monotonic()
    outputs = []
    for run in ("one", "two"):
        out = tmp_path / f"adv-{run}.json"
        sidecar = tmp_path / f"adv-{run}.prov.jsonl"
        code = main([
            "generate",
            "--wordnet-dir", str(acceptance_dict_dir),
            "--input", str(base_dataset_path),
            "--output", str(out),
            "--sidecar", str(sidecar),
            "--strategy", "both",
        ])
        assert code == 0
        outputs.append((out.read_bytes(), sidecar.read_bytes()))
    elapsed = time.monotonic() - started
    assert outputs[0] == outputs[1], "reruns are not byte-identical"
    assert elapsed < 900, f"two full runs took {elapsed:.0f}s"
    passed(f"full-pipeline-determinism (two byte-identical runs in {elapsed:.1f}s)")
