"""Show how the corpus is re-represented under a query's properties.

Every document term sharing a chosen property is replaced by that property
token, which is what lets a knife organizer look similar to a soap dish
once both are read at the "PersonalProduct" level.

Run:  python demos/02_abstract_the_corpus.py
"""

import analogon

corpus = analogon.load_corpus(analogon.data_path("demo_corpus.jsonl"))
kb = analogon.load_kb(analogon.data_path("demo_kb.jsonl"))

properties = {"PersonalProduct", "SpatialQuantity"}
print(f"Abstracting the corpus under {sorted(properties)}\n")

for abstracted in analogon.abstract_corpus(corpus, properties, kb):
    if not abstracted.replacements:
        continue
    swaps = ", ".join(f"{r.lemma}->{r.property} (sentence {r.sentence_index})"
                      for r in abstracted.replacements)
    print(f"{abstracted.doc_id}:")
    print(f"  {swaps}")

print("\nAbstracted token stream for the knife rolodex:")
knife = next(d for d in analogon.abstract_corpus(corpus, properties, kb)
             if d.doc_id == "knife-rolodex")
print(" ", " ".join(str(t) for t in knife.tokens))
