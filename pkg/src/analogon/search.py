"""The four retrieval methods and the cross-method overlap report.

All methods return ranked :class:`Match` lists with the seed excluded and a
total tie-break order (score descending, then doc id ascending), so repeat
runs are byte-identical. Scoring across documents is an exact scan; corpus
scale makes approximate indexing unnecessary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .abstraction import AbstractedDocument, abstract_corpus
from .corpus import Corpus, Document
from .embedding import EmbeddingStore, average_vector, cosine, normalize, tfidf_weights
from .errors import CoverageError, EmptyVectorError, FormatError
from .kb import KnowledgeBase
from .query import FocusQuery, QueryToken

FOCUS_ABSTRACTED = "FocusAbstracted"
FOCUS_ONLY = "FocusOnly"
OVERALL_GLOVE = "OverallGloVe"
OVERALL_PURPMECH = "OverallPurpMech"
METHODS = (FOCUS_ABSTRACTED, FOCUS_ONLY, OVERALL_GLOVE, OVERALL_PURPMECH)


@dataclass(frozen=True)
class Match:
    """One retrieved document with its score, rank and property provenance."""

    doc_id: str
    score: float
    rank: int
    method: str
    matched_properties: tuple[tuple[str, str], ...] = ()


@dataclass
class PurposeMechanismVectors:
    """Per-document purpose and mechanism vectors, loaded or derived."""

    purpose: dict[str, np.ndarray]
    mechanism: dict[str, np.ndarray]
    provenance: str = "loaded-file"


def _ranked(scored: Iterable[tuple[str, float]], k: int, method: str,
            provenance: Mapping[str, tuple[tuple[str, str], ...]] | None = None) -> list[Match]:
    ordered = sorted(scored, key=lambda pair: (-pair[1], pair[0]))
    matches = []
    for rank, (doc_id, score) in enumerate(ordered[:k], start=1):
        matched = provenance.get(doc_id, ()) if provenance is not None else ()
        matches.append(Match(doc_id=doc_id, score=score, rank=rank,
                             method=method, matched_properties=matched))
    return matches


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _doc_scores(query_values: np.ndarray, doc_vectors: dict[str, np.ndarray],
                seed_id: str | None) -> list[tuple[str, float]]:
    return [(doc_id, cosine(query_values, values))
            for doc_id, values in doc_vectors.items()
            if doc_id != seed_id]


def _abstracted_vectors(store: EmbeddingStore,
                        docs: Sequence[AbstractedDocument]) -> dict[str, np.ndarray]:
    vectors = {}
    for doc in docs:
        try:
            vectors[doc.doc_id] = normalize(average_vector(store, doc.tokens)).values
        except EmptyVectorError:
            continue
    return vectors


def _plain_vectors(store: EmbeddingStore, corpus: Corpus) -> dict[str, np.ndarray]:
    vectors = {}
    for doc in corpus:
        tokens = [t for s in doc.sentences for t in s.tokens]
        try:
            vectors[doc.id] = normalize(average_vector(store, tokens)).values
        except EmptyVectorError:
            continue
    return vectors


def search_focus_abstracted(query: FocusQuery, corpus: Corpus, kb: KnowledgeBase,
                            store: EmbeddingStore, k: int = 10) -> list[Match]:
    """Rank documents of the query-abstracted corpus by cosine to the query.

    The corpus is re-represented under the query's properties first, so a
    document matches through shared abstractions as well as kept terms.
    """
    _require_k(k)
    properties = query.properties
    if properties:
        abstracted = abstract_corpus(corpus, properties, kb)
    else:
        abstracted = [AbstractedDocument(doc_id=doc.id, tokens=tuple(
            QueryToken.term(t.lemma) for s in doc.sentences for t in s.tokens
            if not t.is_stopword), replacements=()) for doc in corpus]
    query_vector = normalize(average_vector(store, query.tokens))
    doc_vectors = _abstracted_vectors(store, abstracted)
    provenance = {
        doc.doc_id: tuple((r.lemma, r.property) for r in doc.replacements)
        for doc in abstracted
    }
    scored = _doc_scores(query_vector.values, doc_vectors, query.source.doc_id)
    return _ranked(scored, k, FOCUS_ABSTRACTED, provenance)


def search_focus_only(lemmas: Sequence[str], corpus: Corpus, store: EmbeddingStore,
                      k: int = 10, seed_id: str | None = None) -> list[Match]:
    """Rank plain documents by cosine to the unabstracted focus terms."""
    _require_k(k)
    if not lemmas:
        raise EmptyVectorError("focus-only query has no terms")
    query_vector = normalize(average_vector(store, list(lemmas)))
    doc_vectors = _plain_vectors(store, corpus)
    scored = _doc_scores(query_vector.values, doc_vectors, seed_id)
    return _ranked(scored, k, FOCUS_ONLY)


def search_overall_glove(seed: Document, corpus: Corpus, store: EmbeddingStore,
                         k: int = 10) -> list[Match]:
    """Whole-document baseline: normalized averaged vectors, cosine top-k."""
    _require_k(k)
    doc_vectors = _plain_vectors(store, corpus)
    if seed.id not in doc_vectors:
        raise EmptyVectorError(f"seed document {seed.id!r} has no resolvable tokens")
    scored = _doc_scores(doc_vectors[seed.id], doc_vectors, seed.id)
    return _ranked(scored, k, OVERALL_GLOVE)


def search_overall_purpmech(seed: Document, pm: PurposeMechanismVectors,
                            k: int = 10, pool: int = 100) -> list[Match]:
    """Purpose-similar, mechanism-diverse retrieval.

    The top ``pool`` documents by purpose cosine form the candidate pool;
    the first pick is the purpose-nearest, and each later pick greedily
    maximizes its minimum mechanism distance (1 - cosine) to the picks so
    far, breaking ties by higher purpose score then doc id. The selected
    set is finally ranked by purpose score.
    """
    _require_k(k)
    if pool < k:
        raise ValueError(f"pool ({pool}) must be >= k ({k})")
    if seed.id not in pm.purpose or seed.id not in pm.mechanism:
        raise CoverageError(f"purpose/mechanism vectors missing seed {seed.id!r}")
    seed_purpose = pm.purpose[seed.id]
    purpose_scores = {
        doc_id: cosine(seed_purpose, values)
        for doc_id, values in pm.purpose.items() if doc_id != seed.id
    }
    pool_ids = [doc_id for doc_id, _ in sorted(
        purpose_scores.items(), key=lambda pair: (-pair[1], pair[0]))[:pool]]
    if not pool_ids:
        return []

    selected: list[str] = [pool_ids[0]]
    remaining = set(pool_ids[1:])
    while remaining and len(selected) < k:
        def min_mech_distance(doc_id: str) -> float:
            return min(1.0 - cosine(pm.mechanism[doc_id], pm.mechanism[s])
                       for s in selected)
        best = min(remaining,
                   key=lambda d: (-min_mech_distance(d), -purpose_scores[d], d))
        selected.append(best)
        remaining.discard(best)
    scored = [(doc_id, purpose_scores[doc_id]) for doc_id in selected]
    return _ranked(scored, k, OVERALL_PURPMECH)


def load_purpose_mechanism(path: str | Path,
                           doc_ids: Iterable[str] | None = None) -> PurposeMechanismVectors:
    """Load per-document purpose/mechanism vectors from line-JSON.

    Each record is ``{"id", "purpose": [...], "mechanism": [...]}``. When
    ``doc_ids`` is given, every id must be covered, and all vectors must
    share one dimension per map.
    """
    path = Path(path)
    purpose: dict[str, np.ndarray] = {}
    mechanism: dict[str, np.ndarray] = {}
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON: {exc.msg}", str(path), line_no) from exc
            try:
                doc_id = record["id"]
                purpose[doc_id] = np.array(record["purpose"], dtype=np.float64)
                mechanism[doc_id] = np.array(record["mechanism"], dtype=np.float64)
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"record must carry id/purpose/mechanism: {exc}",
                                  str(path), line_no) from exc
    for name, table in (("purpose", purpose), ("mechanism", mechanism)):
        dims = {v.shape[0] for v in table.values()}
        if len(dims) > 1:
            raise FormatError(f"inconsistent {name} dimensions: {sorted(dims)}", str(path))
    if doc_ids is not None:
        missing = [doc_id for doc_id in doc_ids if doc_id not in purpose]
        if missing:
            raise CoverageError(
                f"purpose/mechanism file misses document ids: {missing}")
    return PurposeMechanismVectors(purpose=purpose, mechanism=mechanism,
                                   provenance="loaded-file")


def fallback_purpose_mechanism(corpus: Corpus, store: EmbeddingStore) -> PurposeMechanismVectors:
    """Derive vectors when no trained encoder output is available.

    Purpose vectors are TF-IDF-weighted averaged embeddings (weights stress
    what a description is about); mechanism vectors are plain averages. The
    provenance field flags the substitution.
    """
    weights = tfidf_weights(corpus)
    purpose: dict[str, np.ndarray] = {}
    mechanism: dict[str, np.ndarray] = {}
    for doc in corpus:
        tokens = [t for s in doc.sentences for t in s.tokens]
        purpose[doc.id] = normalize(
            average_vector(store, tokens, weights=weights[doc.id])).values
        mechanism[doc.id] = normalize(average_vector(store, tokens)).values
    return PurposeMechanismVectors(purpose=purpose, mechanism=mechanism,
                                   provenance="fallback")


@dataclass
class OverlapReport:
    """Distinct-match accounting across methods and scenarios."""

    unique_count: int
    total_count: int
    pairwise_overlap: dict[tuple[str, str], int]
    methods: tuple[str, ...]

    def summary(self) -> str:
        return (f"{self.unique_count} unique matches out of "
                f"{self.total_count} total possible unique matches")


def overlap_report(match_sets: Mapping[str, Mapping[str, Sequence]]) -> OverlapReport:
    """Count distinct (scenario, doc id) pairs across methods.

    ``match_sets`` maps method -> scenario -> matches (Match objects or bare
    doc ids). The total is methods x scenarios x matches-per-cell.
    """
    methods = tuple(match_sets)
    seen: set[tuple[str, str]] = set()
    per_method: dict[str, set[tuple[str, str]]] = {m: set() for m in methods}
    total = 0
    for method, scenarios in match_sets.items():
        for scenario_id, matches in scenarios.items():
            for match in matches:
                doc_id = match.doc_id if isinstance(match, Match) else str(match)
                pair = (scenario_id, doc_id)
                seen.add(pair)
                per_method[method].add(pair)
                total += 1
    pairwise = {}
    for i, a in enumerate(methods):
        for b in methods[i + 1:]:
            pairwise[(a, b)] = len(per_method[a] & per_method[b])
    return OverlapReport(unique_count=len(seen), total_count=total,
                         pairwise_overlap=pairwise, methods=methods)
