"""Context windows, sense signatures and Lesk ranking."""

import json
import random
from collections import Counter
from pathlib import Path

import pytest

from synqa.textprep import CandidateToken, candidates
from synqa.wordnet import RelationKind
from synqa.wsd import (
    ContextWindow,
    LeskConfig,
    Scope,
    WordVectors,
    build_window,
    disambiguate_question,
    lesk_rank,
    sense_signature,
)

from tests.fixtures import ASSEMBLY_GLOSS, WSD_SAMPLE_PARAGRAPH, WSD_SAMPLE_QUESTION

GOLD_SET = json.loads((Path(__file__).parent / "data" / "wsd_gold.json").read_text())


def candidate_for(store, question, word, paragraph=None) -> CandidateToken:
    for c in candidates(question, store, paragraph=paragraph):
        if c.base_form == word:
            return c
    raise AssertionError(f"{word!r} is not a candidate in {question!r}")


class TestBuildWindow:
    def test_paragraph_scope_carries_context_words(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_PLUS_PARAGRAPH, store,
        )
        assert window.bag["legislative"] == 2
        assert "parliament" in window

    def test_bag_excludes_stopwords_and_target(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_PLUS_PARAGRAPH, store,
        )
        assert "the" not in window.bag
        assert "house" not in window.bag  # target base form, "houses" included
        assert "member" in window.bag  # inflected "members" normalized

    def test_question_only_scope_is_small(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_ONLY, store,
        )
        assert set(window.bag) == {"term", "office", "member"}

    def test_window_nesting(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        small = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_ONLY, store,
        )
        big = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_PLUS_PARAGRAPH, store,
        )
        for lemma, count in small.bag.items():
            assert big.bag[lemma] >= count


class TestSenseSignature:
    def test_assembly_sense_material(self, store):
        sense = store.synset("house.n.05")
        sig = sense_signature(sense, store, expansion=frozenset(), include_examples=True)
        for word in ("legislative", "assembly", "houses"):
            assert sig[word] > 0

    def test_without_examples_only_gloss_and_lemmas(self, store):
        sense = store.synset("house.n.05")
        sig = sense_signature(sense, store, expansion=frozenset(), include_examples=False)
        assert sig["bicameral"] == 0
        assert sig["legislative"] > 0
        assert sig["house"] > 0

    def test_hypernym_expansion_adds_furniture(self, store):
        bed = store.synsets_for("bed", "n")[0]
        bare = sense_signature(bed, store, expansion=frozenset(), include_examples=False)
        expanded = sense_signature(
            bed, store, expansion=frozenset({RelationKind.HYPERNYM}),
            include_examples=False,
        )
        assert bare["furniture"] > 0  # occurs in the gloss itself
        assert expanded["furniture"] > bare["furniture"]

    def test_expansion_never_removes_material(self, store):
        sense = store.synset("house.n.05")
        bare = sense_signature(sense, store, expansion=frozenset())
        expanded = sense_signature(
            sense, store,
            expansion=frozenset({RelationKind.HYPERNYM, RelationKind.HYPONYM}),
        )
        for word, count in bare.items():
            assert expanded[word] >= count


class TestLeskRank:
    def rank(self, store, scope=Scope.QUESTION_PLUS_PARAGRAPH, **kwargs):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target, scope, store
        )
        return lesk_rank(target, window, store, LeskConfig(scope=scope, **kwargs))

    def test_sample_selects_the_assembly_sense(self, store):
        result = self.rank(store)
        assert result.chosen.gloss == ASSEMBLY_GLOSS

    def test_scores_sorted_and_ranked(self, store):
        result = self.rank(store)
        scores = [s.score for s in result.all_scores]
        assert scores == sorted(scores, reverse=True)
        assert [s.rank for s in result.all_scores] == list(range(1, len(scores) + 1))
        assert result.chosen == result.all_scores[0].synset

    def test_single_sense_target(self, store):
        target = candidate_for(store, "Where is the member?", "member")
        window = build_window("Where is the member?", "", target, Scope.QUESTION_ONLY, store)
        result = lesk_rank(target, window, store)
        assert result.chosen == target.senses[0]
        assert len(result.all_scores) == 1

    def test_empty_window_falls_back_to_first_sense(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = ContextWindow(scope=Scope.QUESTION_ONLY, bag=Counter())
        result = lesk_rank(target, window, store)
        assert result.chosen.id == "house.n.01"
        assert all(s.score == 0 for s in result.all_scores)

    def test_tie_break_is_stable_under_permutation(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        window = ContextWindow(scope=Scope.QUESTION_ONLY, bag=Counter())
        rng = random.Random(7)
        for _ in range(5):
            shuffled = list(target.senses)
            rng.shuffle(shuffled)
            permuted = CandidateToken(
                token=target.token, base_form=target.base_form,
                pos=target.pos, senses=tuple(sorted(shuffled, key=target.senses.index)),
            )
            assert lesk_rank(permuted, window, store).chosen.id == "house.n.01"

    def test_score_monotonicity_when_bag_grows(self, store):
        target = candidate_for(store, WSD_SAMPLE_QUESTION, "house")
        base_window = build_window(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, target,
            Scope.QUESTION_PLUS_PARAGRAPH, store,
        )
        grown = ContextWindow(
            scope=base_window.scope, bag=base_window.bag + Counter({"legislative": 1})
        )
        before = {s.synset.id: s.score for s in lesk_rank(target, base_window, store).all_scores}
        after = {s.synset.id: s.score for s in lesk_rank(target, grown, store).all_scores}
        for sid, score in before.items():
            assert after[sid] >= score

    def test_expansion_monotonicity(self, store):
        no_exp = self.rank(store, expansion=frozenset())
        full = self.rank(
            store, expansion=frozenset({RelationKind.HYPERNYM, RelationKind.HYPONYM})
        )
        before = {s.synset.id: s.score for s in no_exp.all_scores}
        after = {s.synset.id: s.score for s in full.all_scores}
        for sid, score in before.items():
            assert after[sid] >= score


class TestDisambiguateQuestion:
    def test_sample_question(self, store):
        found = candidates(WSD_SAMPLE_QUESTION, store, paragraph=WSD_SAMPLE_PARAGRAPH)
        results = disambiguate_question(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, found, store
        )
        assert len(results) == len(found)
        by_base = {r.target.base_form: r for r in results}
        assert by_base["house"].chosen.gloss == ASSEMBLY_GLOSS

    def test_empty_candidates(self, store):
        assert disambiguate_question("What is it?", "context", [], store) == []

    def test_results_preserve_candidate_order(self, store):
        found = candidates(WSD_SAMPLE_QUESTION, store, paragraph=WSD_SAMPLE_PARAGRAPH)
        results = disambiguate_question(
            WSD_SAMPLE_QUESTION, WSD_SAMPLE_PARAGRAPH, found, store
        )
        assert [r.target for r in results] == found


def gold_accuracy(store, scope: Scope) -> float:
    config = LeskConfig(scope=scope)
    hits = 0
    for item in GOLD_SET:
        target = candidate_for(store, item["question"], item["target"])
        window = build_window(
            item["question"], item["paragraph"], target, scope, store, config.stopwords
        )
        chosen = lesk_rank(target, window, store, config).chosen
        if item["gold_gloss"] in chosen.gloss:
            hits += 1
    return hits / len(GOLD_SET)


class TestGoldSet:
    def test_gold_glosses_identify_real_senses(self, store):
        for item in GOLD_SET:
            target = candidate_for(store, item["question"], item["target"])
            matching = [s for s in target.senses if item["gold_gloss"] in s.gloss]
            assert len(matching) == 1, item["target"]

    def test_paragraph_context_is_not_worse(self, store):
        q_acc = gold_accuracy(store, Scope.QUESTION_ONLY)
        p_acc = gold_accuracy(store, Scope.QUESTION_PLUS_PARAGRAPH)
        assert p_acc >= q_acc

    def test_paragraph_context_is_strong(self, store):
        assert gold_accuracy(store, Scope.QUESTION_PLUS_PARAGRAPH) >= 0.9


class TestWordVectors:
    def make_vectors(self, tmp_path) -> WordVectors:
        path = tmp_path / "vectors.txt"
        path.write_text(
            "election 1.0 0.0 0.0\n"
            "vote 0.9 0.1 0.0\n"
            "dwelling 0.0 1.0 0.0\n"
            "cabin 0.1 0.95 0.0\n"
            "unrelated 0.0 0.0 1.0\n"
        )
        return WordVectors.load(path)

    def test_cosine(self, tmp_path):
        vectors = self.make_vectors(tmp_path)
        assert vectors.cosine("election", "vote") > 0.9
        assert vectors.cosine("election", "unrelated") < 0.1
        assert vectors.cosine("election", "missing") == 0.0

    def test_soft_matching_scores_near_synonyms(self, store, tmp_path):
        vectors = self.make_vectors(tmp_path)
        target = candidate_for(store, "Where is the house?", "house")
        window = ContextWindow(scope=Scope.QUESTION_ONLY, bag=Counter({"cabin": 1}))
        exact = lesk_rank(target, window, store, LeskConfig())
        soft = lesk_rank(
            target, window, store, LeskConfig(vectors=vectors, vector_threshold=0.6)
        )
        exact_top = {s.synset.id: s.score for s in exact.all_scores}
        soft_top = {s.synset.id: s.score for s in soft.all_scores}
        # "cabin" is close to "dwelling", which appears in house.n.01's gloss
        assert exact_top["house.n.01"] == 0
        assert soft_top["house.n.01"] > 0
        assert soft.chosen.id == "house.n.01"

    def test_vector_scores_are_rounded(self, store, tmp_path):
        vectors = self.make_vectors(tmp_path)
        target = candidate_for(store, "Where is the house?", "house")
        window = ContextWindow(scope=Scope.QUESTION_ONLY, bag=Counter({"cabin": 2}))
        result = lesk_rank(target, window, store, LeskConfig(vectors=vectors))
        for s in result.all_scores:
            assert s.score == round(s.score, 6)

    def test_empty_vector_file_rejected(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("\n")
        with pytest.raises(ValueError):
            WordVectors.load(path)
