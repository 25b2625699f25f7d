import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import analogon
from analogon.corpus import (
    NOUN, VERB, ADJ, OTHER,
    Lemmatizer, PosTagger, default_analyzer, load_corpus, lemmatize,
    pos_tag, segment_sentences, tokenize,
)
from analogon.errors import DuplicateIdError, FormatError

from conftest import TESTS_DATA, write_jsonl

SOAPY_TEXT = ("Unique 2 piece horizontal soap dish with a slide. "
              "extendable for different sizes of soap bars. "
              "it removes soapy water away from the bar of soap keeping it dryer to last longer. "
              "the soap dries quickly and lasts longer.")


class TestSegmentation:
    def test_empty_text(self):
        assert segment_sentences("") == []

    def test_two_terminals(self):
        assert segment_sentences("A b. C d.") == ["A b.", "C d."]

    def test_soapy_slider_four_sentences(self):
        # Hand segmentation of the demo seed product: 4 sentences, the
        # second being the size-adjustment one.
        sentences = segment_sentences(SOAPY_TEXT)
        assert len(sentences) == 4
        assert sentences[1] == "extendable for different sizes of soap bars."

    def test_abbreviations_do_not_split(self):
        assert segment_sentences("Use it e.g. on soap. Works well.") == \
            ["Use it e.g. on soap.", "Works well."]

    def test_no_empty_sentences(self):
        assert segment_sentences("One.  Two!   ") == ["One.", "Two!"]

    def test_trailing_text_without_terminal(self):
        assert segment_sentences("No terminal here") == ["No terminal here"]


class TestTokenize:
    def test_hyphenated_words_kept_whole(self):
        assert tokenize("an all-in-one maker") == ["an", "all-in-one", "maker"]

    def test_punctuation_split(self):
        assert tokenize("soap, bars; and (knives)!") == ["soap", "bars", "and", "knives"]

    @given(st.lists(st.from_regex(r"[A-Za-z0-9]+(-[A-Za-z0-9]+)?", fullmatch=True),
                    min_size=0, max_size=20))
    def test_round_trip(self, surfaces):
        # Joining token surfaces with single spaces and re-tokenizing is stable.
        assert tokenize(" ".join(surfaces)) == surfaces


class TestPosTagger:
    def test_lexicon_lookup(self):
        assert pos_tag(["soap"]) == [NOUN]

    def test_suffix_rule_able(self):
        # "extendable" is deliberately absent from the lexicon.
        assert "extendable" not in PosTagger().lexicon
        assert pos_tag(["extendable"]) == [ADJ]

    def test_empty_input(self):
        assert pos_tag([]) == []

    def test_unknown_defaults_to_noun(self):
        assert pos_tag(["zorkmid"]) == [NOUN]

    def test_non_alphabetic_is_other(self):
        assert pos_tag(["42", "--"]) == [OTHER, OTHER]

    def test_suffix_rules(self):
        assert pos_tag(["famous", "hopeful", "crystallize", "%%"]) == \
            [ADJ, ADJ, VERB, OTHER]

    @given(st.lists(st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789-'",
                            min_size=1, max_size=12), max_size=30))
    def test_output_length_matches_input(self, surfaces):
        assert len(pos_tag(surfaces)) == len(surfaces)


class TestLemmatizer:
    def test_plural_noun(self):
        assert lemmatize("sizes", NOUN) == "size"

    def test_identity_noun(self):
        assert lemmatize("soap", NOUN) == "soap"

    def test_verb_s_detachment(self):
        assert lemmatize("removes", VERB) == "remove"

    def test_verb_ing(self):
        assert lemmatize("keeping", VERB) == "keep"

    def test_adjective_comparative(self):
        assert lemmatize("longer", ADJ) == "long"

    def test_other_is_lowercased_surface(self):
        assert lemmatize("Away", OTHER) == "away"

    def test_exception_table(self):
        assert lemmatize("knives", NOUN) == "knife"

    def test_unattested_candidate_falls_back(self):
        # "glas" is not attested, so "glass" survives.
        assert lemmatize("glass", NOUN) == "glass"

    def test_unknown_pos_rejected(self):
        with pytest.raises(ValueError):
            lemmatize("soap", "ADVERB")

    @given(st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=12),
           st.sampled_from([NOUN, VERB, ADJ, OTHER]))
    @settings(max_examples=300)
    def test_idempotent(self, word, pos):
        lemma = lemmatize(word, pos)
        assert lemmatize(lemma, pos) == lemma

    def test_custom_vocabulary_extends_attestation(self):
        custom = Lemmatizer(vocabulary={"zorp"})
        assert custom.lemmatize("zorps", NOUN) == "zorp"


class TestLoadCorpus:
    def test_six_product_fixture(self):
        corpus = load_corpus(TESTS_DATA / "corpus6.jsonl")
        assert len(corpus) == 6

    def test_order_preserved(self):
        corpus = load_corpus(TESTS_DATA / "corpus6.jsonl")
        assert corpus.ids[0] == "soapy-slider"
        assert corpus.ids[1] == "knife-rolodex"

    def test_duplicate_id_rejected(self, tmp_path):
        path = write_jsonl(tmp_path / "dup.jsonl", [
            {"id": "p1", "title": "A", "text": "One."},
            {"id": "p1", "title": "B", "text": "Two."},
        ])
        with pytest.raises(DuplicateIdError):
            load_corpus(path)

    def test_soapy_slider_sentence(self, demo_corpus):
        doc = demo_corpus.get("soapy-slider")
        raws = [s.raw for s in doc.sentences]
        assert "extendable for different sizes of soap bars." in raws

    def test_malformed_json_reports_line(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text('{"id": "a", "title": "A", "text": "x."}\n{broken\n')
        with pytest.raises(FormatError) as info:
            load_corpus(path)
        assert info.value.line == 2

    def test_missing_field_reports_line(self, tmp_path):
        path = write_jsonl(tmp_path / "missing.jsonl", [{"id": "a", "title": "A"}])
        with pytest.raises(FormatError) as info:
            load_corpus(path)
        assert info.value.line == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_corpus(tmp_path / "nope.jsonl")

    def test_byte_identical_text_reserialization(self, demo_corpus):
        raw_lines = analogon.data_path("demo_corpus.jsonl").read_text(
            encoding="utf-8").strip().split("\n")
        for line in raw_lines:
            record = json.loads(line)
            doc = demo_corpus.get(record["id"])
            assert json.dumps(doc.text) == json.dumps(record["text"])

    def test_sentence_indices_contiguous(self, demo_corpus):
        for doc in demo_corpus:
            assert [s.index for s in doc.sentences] == list(range(len(doc.sentences)))

    def test_sentences_reconstruct_text(self, demo_corpus):
        import re
        for doc in demo_corpus:
            joined = " ".join(re.sub(r"\s+", " ", s.raw) for s in doc.sentences)
            assert joined == re.sub(r"\s+", " ", doc.text).strip()

    def test_pretagged_tokens_override_tagger(self, tmp_path):
        path = write_jsonl(tmp_path / "pre.jsonl", [{
            "id": "p1", "title": "P", "text": "soap slides.",
            "tokens": [[["soap", "VERB"], ["slides", "NOUN"]]],
        }])
        doc = load_corpus(path).get("p1")
        assert [t.pos for t in doc.sentences[0].tokens] == ["VERB", "NOUN"]

    def test_pretagged_sentence_count_mismatch(self, tmp_path):
        path = write_jsonl(tmp_path / "pre.jsonl", [{
            "id": "p1", "title": "P", "text": "One. Two.",
            "tokens": [[["one", "NOUN"]]],
        }])
        with pytest.raises(FormatError):
            load_corpus(path)

    def test_pretagged_bad_tag(self, tmp_path):
        path = write_jsonl(tmp_path / "pre.jsonl", [{
            "id": "p1", "title": "P", "text": "One.",
            "tokens": [[["one", "DET"]]],
        }])
        with pytest.raises(FormatError):
            load_corpus(path)


class TestTokenInvariants:
    def test_lemmas_lowercase_nonempty(self, demo_corpus):
        for doc in demo_corpus:
            for sentence in doc.sentences:
                for token in sentence.tokens:
                    assert token.lemma
                    assert token.lemma == token.lemma.lower()

    def test_stopword_flag_matches_shipped_list(self, demo_corpus):
        stops = default_analyzer().stopwords
        for doc in demo_corpus:
            for sentence in doc.sentences:
                for token in sentence.tokens:
                    assert token.is_stopword == (token.surface.lower() in stops)

    def test_stopword_list_has_174_entries(self):
        stops = analogon.data_path("stopwords.txt").read_text().split()
        assert len(stops) == 174
        assert len(set(stops)) == 174
