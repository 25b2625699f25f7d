"""Focus-abstracted query construction.

A designer narrows a product description to the sentences that matter,
flags irrelevant terms to IGNORE, and swaps key terms for knowledge-base
abstraction properties. The result is an ordered token sequence mixing kept
lemmas with property names, ready for vector averaging.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .corpus import Document
from .errors import SelectionError
from .kb import KnowledgeBase, abstractions_for


@dataclass(frozen=True)
class QueryToken:
    """Either a kept lemma (term) or an abstraction property name."""

    text: str
    is_property: bool = False

    @classmethod
    def term(cls, lemma: str) -> "QueryToken":
        return cls(text=lemma, is_property=False)

    @classmethod
    def prop(cls, name: str) -> "QueryToken":
        return cls(text=name, is_property=True)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class FocusSelection:
    """The designer's choices: sentences kept, lemmas ignored, lemmas abstracted."""

    doc_id: str
    sentence_indices: frozenset[int]
    ignored_lemmas: frozenset[str] = frozenset()
    abstraction_choices: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_json(cls, payload: str | dict) -> "FocusSelection":
        data = json.loads(payload) if isinstance(payload, str) else payload
        if not isinstance(data, dict):
            raise SelectionError("selection must be a JSON object")
        try:
            return cls(
                doc_id=str(data["doc_id"]),
                sentence_indices=frozenset(int(i) for i in data["sentence_indices"]),
                ignored_lemmas=frozenset(str(w) for w in data.get("ignored", [])),
                abstraction_choices={str(k): str(v)
                                     for k, v in data.get("abstractions", {}).items()},
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SelectionError(f"malformed selection: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps({
            "doc_id": self.doc_id,
            "sentence_indices": sorted(self.sentence_indices),
            "ignored": sorted(self.ignored_lemmas),
            "abstractions": {k: self.abstraction_choices[k]
                             for k in sorted(self.abstraction_choices)},
        }, separators=(",", ":"))


@dataclass(frozen=True)
class FocusQuery:
    """Ordered, deduplicated mix of kept terms and chosen properties."""

    tokens: tuple[QueryToken, ...]
    source: FocusSelection

    @property
    def properties(self) -> list[str]:
        return [t.text for t in self.tokens if t.is_property]

    @property
    def terms(self) -> list[str]:
        return [t.text for t in self.tokens if not t.is_property]

    def __iter__(self) -> Iterator[QueryToken]:
        return iter(self.tokens)


def validate_selection(doc: Document, sel: FocusSelection, kb: KnowledgeBase) -> None:
    """Check the selection invariants, raising :class:`SelectionError` on any hole."""
    if sel.doc_id != doc.id:
        raise SelectionError(f"selection targets {sel.doc_id!r}, not {doc.id!r}",
                             code="wrong_document")
    if not sel.sentence_indices:
        raise SelectionError("no sentences selected", code="empty_selection")
    valid = range(len(doc.sentences))
    bad = [i for i in sel.sentence_indices if i not in valid]
    if bad:
        raise SelectionError(f"sentence indices out of range: {sorted(bad)}",
                             code="bad_sentence_index")
    overlap = sel.ignored_lemmas & set(sel.abstraction_choices)
    if overlap:
        raise SelectionError(
            f"lemmas both ignored and abstracted: {sorted(overlap)}",
            code="ignore_abstract_conflict")
    selected_lemmas = {
        token.lemma
        for index in sel.sentence_indices
        for token in doc.sentences[index].tokens
    }
    for lemma, prop in sel.abstraction_choices.items():
        if lemma not in selected_lemmas:
            raise SelectionError(
                f"abstraction chosen for {lemma!r}, which is not in the selected sentences",
                code="abstracted_lemma_absent")
        offered = {entry.property for entry in abstractions_for(kb, lemma)}
        if prop not in offered:
            raise SelectionError(
                f"property {prop!r} is not offered for {lemma!r}",
                code="property_not_offered")


def _walk_selected(doc: Document, sel: FocusSelection):
    for index in sorted(sel.sentence_indices):
        for token in doc.sentences[index].tokens:
            if token.pos not in ("NOUN", "VERB", "ADJ") or token.is_stopword:
                continue
            if token.lemma in sel.ignored_lemmas:
                continue
            yield token


def build_query(doc: Document, sel: FocusSelection, kb: KnowledgeBase) -> FocusQuery:
    """Produce the focus-abstracted token sequence for a validated selection.

    Tokens walk the selected sentences in order; ignored and non-content
    tokens drop out, abstracted lemmas become property tokens, and repeats
    keep their first occurrence only.
    """
    validate_selection(doc, sel, kb)
    tokens: list[QueryToken] = []
    seen_terms: set[str] = set()
    seen_props: set[str] = set()
    for token in _walk_selected(doc, sel):
        chosen = sel.abstraction_choices.get(token.lemma)
        if chosen is not None:
            if chosen not in seen_props:
                seen_props.add(chosen)
                tokens.append(QueryToken.prop(chosen))
        elif token.lemma not in seen_terms:
            seen_terms.add(token.lemma)
            tokens.append(QueryToken.term(token.lemma))
    if not tokens:
        raise SelectionError("selection leaves no query tokens", code="empty_query")
    return FocusQuery(tokens=tuple(tokens), source=sel)


def step2_terms(doc: Document, sel: FocusSelection, kb: KnowledgeBase) -> list[str]:
    """The focus-only reading: kept lemmas with no abstraction substitution."""
    validate_selection(doc, sel, kb)
    lemmas: list[str] = []
    seen: set[str] = set()
    for token in _walk_selected(doc, sel):
        if token.lemma not in seen:
            seen.add(token.lemma)
            lemmas.append(token.lemma)
    if not lemmas:
        raise SelectionError("selection leaves no query terms", code="empty_query")
    return lemmas


def abstracted_only_terms(doc: Document, sel: FocusSelection, kb: KnowledgeBase) -> list[str]:
    """The narrower focus-only reading: only the lemmas that were abstracted."""
    validate_selection(doc, sel, kb)
    lemmas: list[str] = []
    seen: set[str] = set()
    for token in _walk_selected(doc, sel):
        if token.lemma in sel.abstraction_choices and token.lemma not in seen:
            seen.add(token.lemma)
            lemmas.append(token.lemma)
    if not lemmas:
        raise SelectionError("no lemmas were abstracted", code="empty_query")
    return lemmas
