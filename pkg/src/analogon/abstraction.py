"""Corpus re-representation under a query's chosen abstraction properties.

Every document term that shares one of the query's properties (at any KB
level; the 3-level cutoff only limits what designers are shown) is replaced
by the matching property tokens. This pulls cross-domain documents that are
similar at the chosen level of abstraction towards the query.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus, Document
from .kb import KnowledgeBase
from .query import QueryToken


@dataclass(frozen=True)
class Replacement:
    """Provenance record: which lemma became which property, and where."""

    lemma: str
    property: str
    sentence_index: int


@dataclass(frozen=True)
class AbstractedDocument:
    """A document as a query-token stream with matched terms abstracted."""

    doc_id: str
    tokens: tuple[QueryToken, ...]
    replacements: tuple[Replacement, ...]


def _matching_properties(kb: KnowledgeBase, lemma: str, properties: frozenset[str]) -> list[str]:
    """Query properties the lemma carries, level-ascending, deduplicated."""
    matched: list[str] = []
    for entry in kb.forward.get(lemma, ()):
        if entry.property in properties and entry.property not in matched:
            matched.append(entry.property)
    return matched


def abstract_document(doc: Document, properties: Iterable[str], kb: KnowledgeBase) -> AbstractedDocument:
    """Abstract one document; unmatched documents pass through unchanged."""
    property_set = frozenset(properties)
    tokens: list[QueryToken] = []
    replacements: list[Replacement] = []
    for sentence in doc.sentences:
        for token in sentence.tokens:
            if token.is_stopword:
                continue
            if token.pos in ("NOUN", "VERB", "ADJ"):
                matched = _matching_properties(kb, token.lemma, property_set)
                if matched:
                    for prop in matched:
                        tokens.append(QueryToken.prop(prop))
                        replacements.append(Replacement(
                            lemma=token.lemma, property=prop,
                            sentence_index=sentence.index))
                    continue
            tokens.append(QueryToken.term(token.lemma))
    return AbstractedDocument(doc_id=doc.id, tokens=tuple(tokens),
                              replacements=tuple(replacements))


def abstract_corpus(corpus: Corpus, properties: Iterable[str], kb: KnowledgeBase) -> list[AbstractedDocument]:
    """Abstract every document (the query's seed included) under the properties.

    Per-document work is independent; output order follows corpus order.
    """
    property_set = frozenset(properties)
    if not property_set:
        raise ValueError("property set is empty")
    return [abstract_document(doc, property_set, kb) for doc in corpus]
