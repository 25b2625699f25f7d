"""Focus-abstracted analogical search over product-description corpora.

The pipeline: ingest a corpus (:mod:`analogon.corpus`), look up abstraction
properties for its terms (:mod:`analogon.kb`), build a focus-abstracted
query (:mod:`analogon.query`), re-represent the corpus under the chosen
properties (:mod:`analogon.abstraction`), and retrieve nearest documents
with one of four methods (:mod:`analogon.search`). :mod:`analogon.stats`
reproduces the evaluation arithmetic over ingested human ratings.
"""

from importlib import resources
from pathlib import Path

from .abstraction import AbstractedDocument, Replacement, abstract_corpus, abstract_document
from .corpus import (
    Corpus,
    Document,
    Sentence,
    Token,
    TextAnalyzer,
    lemmatize,
    load_corpus,
    pos_tag,
    segment_sentences,
    tokenize,
)
from .embedding import (
    DocVector,
    EmbeddingStore,
    average_vector,
    cosine,
    load_embeddings,
    normalize,
    property_token_vector,
    split_camel_case,
    tfidf_weights,
)
from .errors import (
    AnalogonError,
    CoverageError,
    DuplicateIdError,
    EmptyVectorError,
    FormatError,
    RatingsError,
    SelectionError,
)
from .kb import KnowledgeBase, PropertyEntry, abstractions_for, load_kb, terms_with_property
from .query import (
    FocusQuery,
    FocusSelection,
    QueryToken,
    abstracted_only_terms,
    build_query,
    step2_terms,
    validate_selection,
)
from .search import (
    Match,
    OverlapReport,
    PurposeMechanismVectors,
    fallback_purpose_mechanism,
    load_purpose_mechanism,
    overlap_report,
    search_focus_abstracted,
    search_focus_only,
    search_overall_glove,
    search_overall_purpmech,
)

__version__ = "0.1.0"


def data_path(name: str) -> Path:
    """Filesystem path of a shipped data file (demo corpus, KB, vectors...)."""
    return Path(str(resources.files("analogon.data").joinpath(name)))
