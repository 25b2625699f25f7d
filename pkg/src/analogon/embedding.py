"""Word vectors, averaged document vectors and cosine similarity.

Embeddings load from the plain text format ``word f1 ... fd`` (one word per
line), which covers both the published Common Crawl 300-d vectors and the
tiny deterministic files shipped for tests and demos.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .corpus import Corpus, Token
from .errors import EmptyVectorError, FormatError
from .query import QueryToken

_CAMEL_RE = re.compile(r"[A-Z]+(?=[A-Z][a-z0-9])|[A-Z]?[a-z0-9]+|[A-Z]+")


@dataclass
class EmbeddingStore:
    """Fixed-dimension word -> vector table, immutable after load."""

    dim: int
    table: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.table

    def __len__(self) -> int:
        return len(self.table)

    def get(self, word: str) -> np.ndarray | None:
        return self.table.get(word)

    @property
    def vocabulary(self) -> set[str]:
        return set(self.table)


@dataclass
class DocVector:
    """A document or query vector; ``norm_flag`` marks unit length."""

    values: np.ndarray
    norm_flag: bool = False
    skipped_tokens: tuple[str, ...] = field(default_factory=tuple)


def load_embeddings(path: str | Path, vocab_filter: set[str] | None = None) -> EmbeddingStore:
    """Load word vectors, inferring the dimension from the first line.

    Raises :class:`FormatError` with the line number when a line carries the
    wrong number of floats, and on empty files.
    """
    path = Path(path)
    table: dict[str, np.ndarray] = {}
    dim: int | None = None
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                if not line.strip():
                    continue
                raise FormatError("line must be 'word f1 ... fd'", str(path), line_no)
            word = parts[0]
            if dim is None:
                dim = len(parts) - 1
            elif len(parts) - 1 != dim:
                raise FormatError(
                    f"expected {dim} components, found {len(parts) - 1}",
                    str(path), line_no)
            if vocab_filter is not None and word not in vocab_filter:
                continue
            try:
                vector = np.array([float(x) for x in parts[1:]], dtype=np.float64)
            except ValueError as exc:
                raise FormatError(f"non-numeric component: {exc}", str(path), line_no) from exc
            table[word] = vector
    if dim is None:
        raise FormatError("embedding file is empty", str(path))
    return EmbeddingStore(dim=dim, table=table)


def split_camel_case(name: str) -> list[str]:
    """Lowercased pieces of a CamelCase property name."""
    return [piece.lower() for piece in _CAMEL_RE.findall(name)]


def property_token_vector(store: EmbeddingStore, property_name: str) -> np.ndarray:
    """Vector for an abstraction property: mean of its in-vocabulary pieces.

    Property names never appear verbatim in pre-trained vocabularies, so
    ``PersonalProduct`` resolves through ``personal`` and ``product``.
    """
    pieces = split_camel_case(property_name)
    vectors = [store.table[p] for p in pieces if p in store.table]
    if not vectors:
        raise EmptyVectorError(
            f"no piece of property {property_name!r} is in the embedding vocabulary")
    return np.mean(vectors, axis=0)


def _resolve(store: EmbeddingStore, token) -> tuple[str, np.ndarray | None]:
    """Map a token to (lookup key, vector or None). Stopwords resolve to None."""
    if isinstance(token, Token):
        if token.is_stopword:
            return token.lemma, None
        return token.lemma, store.get(token.lemma)
    if isinstance(token, QueryToken):
        if token.is_property:
            try:
                return token.text, property_token_vector(store, token.text)
            except EmptyVectorError:
                return token.text, None
        return token.text, store.get(token.text)
    word = str(token)
    return word, store.get(word)


def average_vector(store: EmbeddingStore, tokens: Iterable, weights: Mapping[str, float] | None = None) -> DocVector:
    """Mean (optionally weight-normalized) of the tokens' vectors.

    Accepts corpus tokens, query tokens or bare strings. Stopwords and
    out-of-vocabulary tokens are skipped and recorded in ``skipped_tokens``;
    raises :class:`EmptyVectorError` when nothing resolves. A weights map
    with nonpositive total falls back to the unweighted mean.
    """
    vectors: list[np.ndarray] = []
    token_weights: list[float] = []
    skipped: list[str] = []
    for token in tokens:
        key, vector = _resolve(store, token)
        if vector is None:
            skipped.append(key)
            continue
        vectors.append(vector)
        token_weights.append(weights.get(key, 0.0) if weights is not None else 1.0)
    if not vectors:
        raise EmptyVectorError("no token resolves to an embedding vector")
    stacked = np.stack(vectors)
    total = float(sum(token_weights))
    if weights is None or total <= 0.0:
        values = stacked.mean(axis=0)
    else:
        values = (stacked * np.array(token_weights)[:, None]).sum(axis=0) / total
    return DocVector(values=values, skipped_tokens=tuple(skipped))


def normalize(vector: DocVector) -> DocVector:
    """Scale to unit Euclidean length; zero vectors cannot be normalized."""
    norm = float(np.linalg.norm(vector.values))
    if norm == 0.0:
        raise EmptyVectorError("cannot normalize a zero vector")
    return DocVector(values=vector.values / norm, norm_flag=True,
                     skipped_tokens=vector.skipped_tokens)


def cosine(a: DocVector | np.ndarray, b: DocVector | np.ndarray) -> float:
    """Cosine similarity in [-1, 1]; errors on zero vectors or dim mismatch."""
    va = a.values if isinstance(a, DocVector) else np.asarray(a, dtype=np.float64)
    vb = b.values if isinstance(b, DocVector) else np.asarray(b, dtype=np.float64)
    if va.shape != vb.shape:
        raise ValueError(f"dimension mismatch: {va.shape} vs {vb.shape}")
    norm_a = float(np.linalg.norm(va))
    norm_b = float(np.linalg.norm(vb))
    if norm_a == 0.0 or norm_b == 0.0:
        raise EmptyVectorError("cosine of a zero vector is undefined")
    value = float(np.dot(va, vb) / (norm_a * norm_b))
    return max(-1.0, min(1.0, value))


def tfidf_weights(corpus: Corpus) -> dict[str, dict[str, float]]:
    """Per-document ``lemma -> tf * ln(N / df)`` over non-stopword tokens.

    ``tf`` is the raw occurrence count in the document and ``df`` the number
    of documents containing the lemma, so a lemma present in every document
    weighs zero.
    """
    if len(corpus) == 0:
        raise ValueError("corpus is empty")
    doc_counts: list[dict[str, int]] = []
    df: dict[str, int] = {}
    for doc in corpus:
        counts: dict[str, int] = {}
        for sentence in doc.sentences:
            for token in sentence.tokens:
                if token.is_stopword:
                    continue
                counts[token.lemma] = counts.get(token.lemma, 0) + 1
        doc_counts.append(counts)
        for lemma in counts:
            df[lemma] = df.get(lemma, 0) + 1
    n_docs = len(corpus)
    weights: dict[str, dict[str, float]] = {}
    for doc, counts in zip(corpus, doc_counts):
        weights[doc.id] = {
            lemma: count * math.log(n_docs / df[lemma])
            for lemma, count in counts.items()
        }
    return weights
