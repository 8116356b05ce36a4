"""Tokenization, exclusion flags and candidate selection."""

from hypothesis import given, strategies as st

from synqa.textprep import (
    TextPrepConfig,
    candidates,
    default_phrases,
    default_stopwords,
    flag_tokens,
    load_wordlist,
    tokenize,
)
from synqa.wordnet import PartOfSpeech

from tests.fixtures import DRIFT_QUESTION, WSD_SAMPLE_PARAGRAPH, WSD_SAMPLE_QUESTION

STOPWORDS = default_stopwords()
PHRASES = default_phrases()


class TestTokenize:
    def test_sample_question_token_shape(self):
        tokens = tokenize(WSD_SAMPLE_QUESTION)
        words = [t for t in tokens if t.is_word]
        assert len(words) == 10
        assert tokens[-1].text == "?" and tokens[-1].is_punctuation
        assert len(tokens) == 11

    def test_empty_string(self):
        assert tokenize("") == []

    def test_offsets_are_contiguous_and_nonoverlapping(self):
        tokens = tokenize("in favor of")
        assert [t.text for t in tokens] == ["in", "favor", "of"]
        for a, b in zip(tokens, tokens[1:]):
            assert a.end <= b.start

    def test_offsets_recover_the_surface(self):
        q = "The total number of upper house members was reduced from 44 to 40."
        for t in tokenize(q):
            assert q[t.start:t.end] == t.text

    def test_hyphenated_tokens_stay_whole(self):
        texts = [t.text for t in tokenize("a multi-member two-member system")]
        assert "multi-member" in texts and "two-member" in texts

    def test_digit_grouping_is_one_token(self):
        tokens = tokenize("about 384,400 kilometers")
        assert [t.text for t in tokens] == ["about", "384,400", "kilometers"]

    def test_punctuation_is_emitted_separately(self):
        texts = [t.text for t in tokenize("houses, gears; and bets.")]
        assert texts == ["houses", ",", "gears", ";", "and", "bets", "."]

    @given(st.text(max_size=200))
    def test_reconstruction_property(self, s):
        for t in tokenize(s):
            assert s[t.start:t.end] == t.text


class TestFlags:
    def flag(self, question, paragraph=None, store=None):
        return flag_tokens(
            tokenize(question), STOPWORDS, PHRASES, store=store, paragraph=paragraph
        )

    def test_stopword(self):
        tokens = self.flag("What is the term?")
        by_text = {t.text: t for t in tokens}
        assert by_text["the"].is_stopword
        assert not by_text["term"].is_stopword

    def test_number(self):
        tokens = self.flag("In November 2006 the 2nd house met")
        by_text = {t.text: t for t in tokens}
        assert by_text["2006"].is_number
        assert by_text["2nd"].is_number
        assert not by_text["November"].is_number

    def test_number_words_are_not_numbers(self):
        by_text = {t.text: t for t in self.flag("four years and one day")}
        assert not by_text["four"].is_number
        assert not by_text["one"].is_number

    def test_capitalized_non_initial_is_proper(self):
        by_text = {t.text: t for t in self.flag(DRIFT_QUESTION)}
        assert by_text["Romans"].is_proper_noun
        assert by_text["Rhine"].is_proper_noun
        assert not by_text["direction"].is_proper_noun

    def test_question_initial_word_needs_paragraph_evidence(self, store):
        paragraph = "The army of Velora held the bridge. Later Velora fell."
        tokens = flag_tokens(
            tokenize("Velora held the bridge?"),
            STOPWORDS,
            store=store,
            paragraph=paragraph,
        )
        assert tokens[0].is_proper_noun

    def test_question_initial_dictionary_word_is_not_proper(self, store):
        tokens = flag_tokens(
            tokenize("Houses in the town were wet?"),
            STOPWORDS,
            store=store,
            paragraph="Many Houses stood there.",
        )
        assert not tokens[0].is_proper_noun

    def test_fixed_phrase_members_are_excluded(self):
        tokens = self.flag("Who voted in favor of the new law?")
        by_text = {t.text: t for t in tokens}
        assert by_text["favor"].is_stopword
        # "in" and "of" are stopwords anyway
        assert by_text["law"].is_stopword is False

    def test_phrase_matching_is_case_insensitive(self):
        tokens = self.flag("According to the report, who won?")
        assert tokens[0].is_stopword  # "According"


class TestCandidates:
    def test_sample_question_candidates(self, store):
        found = candidates(
            WSD_SAMPLE_QUESTION, store, paragraph=WSD_SAMPLE_PARAGRAPH
        )
        names = [c.base_form for c in found]
        assert "house" in names
        assert "member" in names
        assert "the" not in names and "for" not in names and "?" not in names
        assert all(c.pos is PartOfSpeech.NOUN for c in found)

    def test_stopword_only_question(self, store):
        assert candidates("What is it?", store) == []

    def test_proper_nouns_are_not_candidates(self, store):
        found = candidates(DRIFT_QUESTION, store)
        names = [c.base_form for c in found]
        assert "direction" in names
        assert "roman" not in names and "romans" not in names
        assert "rhine" not in names

    def test_candidates_are_sound_and_ordered(self, store):
        found = candidates(WSD_SAMPLE_QUESTION, store, paragraph=WSD_SAMPLE_PARAGRAPH)
        positions = [c.token.start for c in found]
        assert positions == sorted(positions)
        for c in found:
            assert c.senses
            assert not c.token.excluded
            assert store.synsets_for(c.base_form, c.pos)

    def test_pos_policy_prefers_most_senses(self, store):
        # "house": 12 noun senses vs 2 verb senses
        config = TextPrepConfig(
            pos_whitelist=(PartOfSpeech.VERB, PartOfSpeech.NOUN)
        )
        found = candidates("Where is the house?", store, config)
        assert [c.pos for c in found] == [PartOfSpeech.NOUN]

    def test_verb_whitelist_picks_up_verbs(self, store):
        config = TextPrepConfig(pos_whitelist=(PartOfSpeech.VERB,))
        found = candidates("Who bought the bread?", store, config)
        assert [(c.base_form, c.pos) for c in found] == [("buy", PartOfSpeech.VERB)]

    def test_inflected_candidate_uses_base_form(self, store):
        found = candidates("Where were the houses?", store)
        assert [c.base_form for c in found] == ["house"]
        assert found[0].token.text == "houses"

    def test_stopword_growth_never_adds_candidates(self, store):
        config = TextPrepConfig()
        base = candidates(WSD_SAMPLE_QUESTION, store, config)
        grown = candidates(
            WSD_SAMPLE_QUESTION, store, config.with_extra_stopwords(["office", "term"])
        )
        assert {c.token.text for c in grown} <= {c.token.text for c in base}
        assert len(grown) <= len(base)

    @given(st.sets(st.sampled_from(["term", "office", "house", "member"])))
    def test_stopword_monotonicity_property(self, store, extra):
        config = TextPrepConfig()
        base = candidates(WSD_SAMPLE_QUESTION, store, config)
        grown = candidates(WSD_SAMPLE_QUESTION, store, config.with_extra_stopwords(extra))
        assert len(grown) == len(base) - len(extra)


def test_load_wordlist_skips_comments(tmp_path):
    listing = tmp_path / "words.txt"
    listing.write_text("# comment\nalpha\n\nbeta\n")
    assert load_wordlist(listing) == ["alpha", "beta"]
