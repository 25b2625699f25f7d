import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import analogon
from analogon.errors import FormatError
from analogon.kb import KnowledgeBase, PropertyEntry, abstractions_for, load_kb, terms_with_property

from conftest import write_jsonl


def kb_from_entries(tmp_path, entries, name="kb.jsonl"):
    path = write_jsonl(tmp_path / name,
                       [{"term": t, "property": p, "level": l} for t, p, l in entries])
    return path


class TestLoad:
    def test_primary_shadows_fallback(self, tmp_path):
        primary = kb_from_entries(tmp_path, [("soap", "Primary", 1)], "p.jsonl")
        fallback = kb_from_entries(tmp_path, [("soap", "Fallback", 1)], "f.jsonl")
        kb = load_kb(primary, fallback)
        assert [e.property for e in kb.forward["soap"]] == ["Primary"]

    def test_fallback_fills_missing_terms(self, tmp_path):
        primary = kb_from_entries(tmp_path, [("soap", "Primary", 1)], "p.jsonl")
        fallback = kb_from_entries(tmp_path, [("reef", "GeologicalFormation", 1)], "f.jsonl")
        kb = load_kb(primary, fallback)
        assert [e.property for e in kb.forward["reef"]] == ["GeologicalFormation"]

    def test_demo_kb_dog_supersets(self, demo_kb):
        names = [e.property for e in demo_kb.forward["dog"]]
        assert "DomesticatedAnimal" in names
        assert "CanisGenus" in names

    def test_demo_fallback_reef_present_soap_shadowed(self, demo_kb):
        assert "reef" in demo_kb.forward
        assert "FallbackOnlyProperty" not in {e.property for e in demo_kb.forward["soap"]}

    def test_level_below_one_rejected(self, tmp_path):
        path = kb_from_entries(tmp_path, [("soap", "Bad", 0)])
        with pytest.raises(FormatError):
            load_kb(path)

    def test_non_integer_level_rejected(self, tmp_path):
        path = write_jsonl(tmp_path / "kb.jsonl",
                           [{"term": "soap", "property": "Bad", "level": "one"}])
        with pytest.raises(FormatError):
            load_kb(path)

    def test_whitespace_property_rejected(self, tmp_path):
        path = write_jsonl(tmp_path / "kb.jsonl",
                           [{"term": "soap", "property": "Bad Name", "level": 1}])
        with pytest.raises(FormatError):
            load_kb(path)

    def test_malformed_json_reports_line(self, tmp_path):
        path = tmp_path / "kb.jsonl"
        path.write_text('{"term": "a", "property": "P", "level": 1}\nnonsense\n')
        with pytest.raises(FormatError) as info:
            load_kb(path)
        assert info.value.line == 2


class TestAbstractionsFor:
    def test_soap_properties(self, demo_kb):
        names = [e.property for e in abstractions_for(demo_kb, "soap")]
        for expected in ("ToiletrySubstance", "WaterSolubleStuff", "PersonalProduct"):
            assert expected in names

    def test_unknown_term_empty(self, demo_kb):
        assert abstractions_for(demo_kb, "qwzx") == []

    def test_dog_filtered_to_level_3(self, demo_kb):
        # dog carries a 120-property entry spread over 6 levels; the shown
        # list is exactly the level <= 3 subset, in level order.
        all_entries = demo_kb.forward["dog"]
        assert len(all_entries) == 120
        expected = [e for e in all_entries if e.level <= 3]
        assert abstractions_for(demo_kb, "dog") == expected
        assert len(expected) < 120

    def test_never_above_level_3(self, demo_kb):
        for lemma in demo_kb.forward:
            assert all(e.level <= 3 for e in abstractions_for(demo_kb, lemma))

    def test_level_ascending(self, demo_kb):
        for lemma in demo_kb.forward:
            levels = [e.level for e in abstractions_for(demo_kb, lemma)]
            assert levels == sorted(levels)

    def test_file_order_preserved_within_level(self, tmp_path):
        path = kb_from_entries(tmp_path, [
            ("soap", "Zeta", 2), ("soap", "Alpha", 2), ("soap", "First", 1)])
        kb = load_kb(path)
        assert [e.property for e in abstractions_for(kb, "soap")] == \
            ["First", "Zeta", "Alpha"]


class TestTermsWithProperty:
    def test_personal_product_members(self, demo_kb):
        members = terms_with_property(demo_kb, "PersonalProduct")
        assert {"soap", "knife", "phone"} <= members

    def test_unknown_property_empty(self, demo_kb):
        assert terms_with_property(demo_kb, "NoSuchProperty") == frozenset()

    def test_inverse_index_oracle(self, demo_kb):
        # Every reverse hit is backed by a forward entry, level cutoff ignored.
        for prop, terms in demo_kb.reverse.items():
            for term in terms:
                assert prop in {e.property for e in demo_kb.forward[term]}


class TestInversionInvariant:
    def test_demo_kb_forward_reverse_exhaustive(self, demo_kb):
        for lemma, entries in demo_kb.forward.items():
            for entry in entries:
                assert lemma in demo_kb.reverse[entry.property]
        for prop, lemmas in demo_kb.reverse.items():
            for lemma in lemmas:
                assert prop in {e.property for e in demo_kb.forward[lemma]}

    @given(st.lists(
        st.tuples(st.sampled_from(["soap", "bar", "dog", "fox", "jam"]),
                  st.sampled_from(["PropA", "PropB", "PropC"]),
                  st.integers(min_value=1, max_value=5)),
        max_size=25))
    @settings(max_examples=100)
    def test_inversion_on_generated_kbs(self, entries):
        forward: dict[str, list[PropertyEntry]] = {}
        for term, prop, level in entries:
            forward.setdefault(term, []).append(PropertyEntry(prop, level))
        kb = KnowledgeBase(forward={t: tuple(sorted(es, key=lambda e: e.level))
                                    for t, es in forward.items()})
        for lemma, lemma_entries in kb.forward.items():
            for entry in lemma_entries:
                assert lemma in kb.reverse[entry.property]

    def test_primary_output_independent_of_fallback(self, tmp_path):
        primary = kb_from_entries(tmp_path, [("soap", "A", 1), ("soap", "B", 2)], "p.jsonl")
        noisy = kb_from_entries(tmp_path, [("soap", "X", 1), ("soap", "Y", 1)], "f1.jsonl")
        other = kb_from_entries(tmp_path, [("soap", "Z", 3)], "f2.jsonl")
        baseline = load_kb(primary)
        assert load_kb(primary, noisy).forward["soap"] == baseline.forward["soap"]
        assert load_kb(primary, other).forward["soap"] == baseline.forward["soap"]
