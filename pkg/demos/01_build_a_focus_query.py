"""Walk through the three query-building steps on the demo corpus.

A designer starts from the "Soapy slider" product, keeps the sentence about
adjusting to soap-bar sizes, drops the irrelevant "bars", and abstracts
"sizes" and "soap" into knowledge-base properties. The result is the
focus-abstracted token sequence the search engine consumes.

Run:  python demos/01_build_a_focus_query.py
"""

import analogon

corpus = analogon.load_corpus(analogon.data_path("demo_corpus.jsonl"))
kb = analogon.load_kb(analogon.data_path("demo_kb.jsonl"),
                      analogon.data_path("fallback_kb.jsonl"))

doc = corpus.get("soapy-slider")
print(f"Seed product: {doc.title}\n")

# Step 1: the designer picks the sentences relevant to their need.
print("Sentences:")
for sentence in doc.sentences:
    print(f"  [{sentence.index}] {sentence.raw}")
print("\nDesigner A keeps sentence 1 (adjusting to different soap-bar sizes).")

# Step 3 support: clicking a term shows its abstraction properties,
# level-ordered, at most three levels deep.
for lemma in ("size", "soap"):
    entries = analogon.abstractions_for(kb, lemma)
    listing = ", ".join(f"{e.property} (level {e.level})" for e in entries)
    print(f"  abstractions of {lemma!r}: {listing}")

# Steps 1-3 combined: keep sentence 1, IGNORE "bars", abstract the two terms.
selection = analogon.FocusSelection(
    doc_id="soapy-slider",
    sentence_indices=frozenset({1}),
    ignored_lemmas=frozenset({"bar"}),
    abstraction_choices={"size": "SpatialQuantity", "soap": "PersonalProduct"},
)
query = analogon.build_query(doc, selection, kb)
print(f"\nFocus-abstracted query: {[str(t) for t in query.tokens]}")

# Stopping at step 2 keeps the concrete words instead.
print(f"Step-2-only terms:      {analogon.step2_terms(doc, selection, kb)}")
