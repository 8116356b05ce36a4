"""Replacement rendering, substitution strategies and provenance."""

import pytest

from synqa.dataset import QAItem
from synqa.generate import (
    apply_substitutions,
    build_adversarial_set,
    generate_all,
    generate_single,
    render_replacement,
    revert_substitutions,
)
from synqa.textprep import Token, candidates
from synqa.wsd import disambiguate_question

from tests.fixtures import (
    DRIFT_QUESTION,
    DRIFT_VARIANT,
    WSD_SAMPLE_PARAGRAPH,
    WSD_SAMPLE_QUESTION,
)


def tok(text, start=0):
    return Token(text=text, start=start, end=start + len(text))


def make_item(question, qid="q1"):
    return QAItem(
        id=qid, question=question, paragraph_ref=("t", 0), answers=(), is_impossible=True
    )


def pipeline(store, question, paragraph=""):
    item = make_item(question)
    found = candidates(question, store, paragraph=paragraph or None)
    results = disambiguate_question(question, paragraph, found, store)
    return item, results


class TestRenderReplacement:
    def test_lowercase_base_form(self):
        assert render_replacement(tok("direction"), "way", "direction") == "way"

    def test_title_case_plural(self):
        assert render_replacement(tok("Houses"), "dwelling", "house") == "Dwellings"

    def test_irregular_inflection_skips(self):
        assert render_replacement(tok("went"), "travel", "go") is None

    def test_underscores_become_spaces(self):
        out = render_replacement(tok("furniture"), "piece_of_furniture", "furniture")
        assert out == "piece of furniture"

    def test_multiword_inflects_last_word(self):
        out = render_replacement(tok("cars"), "railroad_train", "car")
        assert out == "railroad trains"

    def test_all_caps(self):
        assert render_replacement(tok("HOUSES"), "dwelling", "house") == "DWELLINGS"

    def test_es_plural(self):
        assert render_replacement(tok("benches"), "match", "bench") == "matches"

    def test_y_to_ies(self):
        assert render_replacement(tok("cities"), "century", "city") == "centuries"

    def test_past_tense(self):
        assert render_replacement(tok("walked"), "travel", "walk") == "traveled"

    def test_gerund_with_e_drop(self):
        assert render_replacement(tok("making"), "create", "make") == "creating"

    def test_identity_replacement_skips(self):
        assert render_replacement(tok("Way"), "way", "way") is None


class TestGenerateSingle:
    def test_drift_example_produces_the_way_variant(self, store):
        item, results = pipeline(store, DRIFT_QUESTION)
        variants = generate_single(item, results, store)
        assert [v.text for v in variants] == [DRIFT_VARIANT]
        assert variants[0].strategy == "single"
        assert len(variants[0].substitutions) == 1

    def test_single_lemma_synsets_produce_nothing(self, store):
        item, results = pipeline(store, "Where is the council?")
        assert generate_single(item, results, store) == []

    def test_sample_question_variant_counts(self, store):
        item, results = pipeline(store, WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH)
        variants = generate_single(item, results, store)
        per_base = {}
        for v in variants:
            per_base.setdefault(v.substitutions[0].original_base, []).append(v)
        # house.n.05 has no co-lemmas, so no house variant can exist
        assert "house" not in per_base
        # member.n.01 is {member, fellow_member}
        assert [v.text for v in per_base["member"]] == [
            "What is the term of office for each house fellow member?"
        ]

    def test_ids_are_ordinal_and_unique(self, store):
        item, results = pipeline(store, WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH)
        variants = generate_single(item, results, store)
        assert [v.id for v in variants] == [
            f"q1-syn-{n:03d}" for n in range(1, len(variants) + 1)
        ]

    def test_no_variant_equals_its_origin(self, store):
        item, results = pipeline(store, WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH)
        for v in generate_single(item, results, store):
            assert v.text != item.question


class TestGenerateAll:
    def test_one_candidate_degenerates_to_single(self, store):
        question = "Which direction did they walk?"
        item, results = pipeline(store, question)
        singles = generate_single(item, results, store)
        combined = generate_all(item, results, store)
        assert combined is not None
        assert combined.strategy == "all"
        assert combined.text == singles[0].text
        assert combined.substitutions == singles[0].substitutions

    def test_zero_renderable_candidates(self, store):
        item, results = pipeline(store, "Where is the council?")
        assert generate_all(item, results, store) is None

    def test_two_candidates_both_replaced_and_reversible(self, store):
        question = "Which doctor bought the bread?"
        item, results = pipeline(store, question)
        combined = generate_all(item, results, store)
        assert combined.text == "Which doc bought the breadstuff?"
        assert len(combined.substitutions) == 2
        assert revert_substitutions(combined) == question

    def test_first_renderable_co_lemma_in_synset_order(self, store):
        item, results = pipeline(store, "Who cleaned the illness ward?")
        combined = generate_all(item, results, store)
        # illness.n.01 lemma order: illness, unwellness, malady, sickness
        assert combined.substitutions[0].replacement == "unwellness"


class TestSubstitutionMechanics:
    def test_apply_right_to_left(self):
        from synqa.generate import Substitution

        question = "the house near the bank"
        s1 = Substitution(tok("house", 4), "house", "x", "dwelling")
        s2 = Substitution(tok("bank", 19), "bank", "y", "slope")
        assert (
            apply_substitutions(question, [s1, s2])
            == "the dwelling near the slope"
        )

    def test_apply_validates_offsets(self):
        from synqa.generate import Substitution

        bad = Substitution(tok("house", 0), "house", "x", "dwelling")
        with pytest.raises(AssertionError):
            apply_substitutions("the house", [bad])


class TestBuildQads:
    def test_deterministic(self, store):
        items = [
            (make_item("Which doctor bought the bread?", "q1"), "ctx"),
            (make_item(DRIFT_QUESTION, "q2"), "ctx"),
        ]
        a = build_adversarial_set(items, store)
        b = build_adversarial_set(items, store)
        assert [(x.id, x.text) for x in a] == [(x.id, x.text) for x in b]

    def test_empty_dataset(self, store):
        assert build_adversarial_set([], store) == []

    def test_strategies_filter(self, store):
        items = [(make_item("Which doctor bought the bread?"), "ctx")]
        only_single = build_adversarial_set(items, store, strategies=("single",))
        only_all = build_adversarial_set(items, store, strategies=("all",))
        assert all(v.strategy == "single" for v in only_single)
        assert all(v.strategy == "all" for v in only_all)
        assert len(only_all) == 1

    def test_unknown_strategy_rejected(self, store):
        with pytest.raises(ValueError):
            build_adversarial_set([], store, strategies=("both",))

    def test_ids_continue_across_strategies(self, store):
        items = [(make_item("Which doctor bought the bread?", "q9"), "ctx")]
        generated = build_adversarial_set(items, store)
        singles = [v for v in generated if v.strategy == "single"]
        combined = [v for v in generated if v.strategy == "all"]
        assert combined[0].id == f"q9-syn-{len(singles) + 1:03d}"

    def test_provenance_totality_and_reversibility(self, store):
        items = [
            (make_item("Which doctor bought the bread?", "q1"), "ctx"),
            (make_item("Where is the nearest hospital?", "q2"), "ctx"),
            (make_item(DRIFT_QUESTION, "q3"), "ctx"),
        ]
        by_id = {item.id: item for item, _ in items}
        for adv in build_adversarial_set(items, store):
            assert adv.origin_id in by_id
            assert revert_substitutions(adv) == by_id[adv.origin_id].question
            assert adv.text != by_id[adv.origin_id].question
            assert adv.status == "candidate"
