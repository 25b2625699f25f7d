"""Run all four retrieval methods for one scenario and compare their picks.

FocusAbstracted searches the abstracted corpus with the focus-abstracted
query; FocusOnly uses the concrete step-2 terms; OverallGloVe matches whole
documents; OverallPurpMech matches on purpose and diversifies by mechanism.

Run:  python demos/03_compare_methods.py
"""

import analogon

corpus = analogon.load_corpus(analogon.data_path("demo_corpus.jsonl"))
kb = analogon.load_kb(analogon.data_path("demo_kb.jsonl"))
store = analogon.load_embeddings(analogon.data_path("demo_embeddings.txt"))
pm = analogon.load_purpose_mechanism(analogon.data_path("demo_purpmech.jsonl"),
                                     corpus.ids)

doc = corpus.get("soapy-slider")
selection = analogon.FocusSelection(
    doc_id="soapy-slider", sentence_indices=frozenset({1}),
    ignored_lemmas=frozenset({"bar"}),
    abstraction_choices={"size": "SpatialQuantity", "soap": "PersonalProduct"})

query = analogon.build_query(doc, selection, kb)
lemmas = analogon.step2_terms(doc, selection, kb)

results = {
    "FocusAbstracted": analogon.search_focus_abstracted(query, corpus, kb, store, k=5),
    "FocusOnly": analogon.search_focus_only(lemmas, corpus, store, k=5, seed_id=doc.id),
    "OverallGloVe": analogon.search_overall_glove(doc, corpus, store, k=5),
    "OverallPurpMech": analogon.search_overall_purpmech(doc, pm, k=5, pool=100),
}

print(f"Scenario: adjust the soap dish to different bar sizes ({doc.id})\n")
for method, matches in results.items():
    print(method)
    for match in matches:
        extras = ""
        if match.matched_properties:
            shared = sorted({p for _, p in match.matched_properties})
            extras = f"  shares: {', '.join(shared)}"
        print(f"  {match.rank}. {match.doc_id:26s} score {match.score:.4f}{extras}")
    print()

report = analogon.overlap_report({m: {"s1": ms} for m, ms in results.items()})
print(report.summary())
