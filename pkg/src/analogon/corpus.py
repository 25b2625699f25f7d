"""Corpus ingestion: sentence segmentation, tokenization, POS tagging, lemmas.

Product descriptions arrive as free text, one JSON record per line
(``{"id", "title", "text"}``, optionally with pre-tagged ``"tokens"``).
Loading turns each record into a :class:`Document` whose sentences carry
tokens with a lowercase canonical lemma, a coarse part-of-speech tag and a
stopword flag, which is everything the query and abstraction layers need.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import DuplicateIdError, FormatError

NOUN = "NOUN"
VERB = "VERB"
ADJ = "ADJ"
OTHER = "OTHER"
POS_TAGS = frozenset({NOUN, VERB, ADJ, OTHER})

CONTENT_TAGS = frozenset({NOUN, VERB, ADJ})

_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:[-'][A-Za-z0-9]+)*")
_HAS_LETTER_RE = re.compile(r"[A-Za-z]")

# Suffix fallbacks applied when a word is missing from the lexicon.
_SUFFIX_RULES = (
    ("able", ADJ), ("ous", ADJ), ("ful", ADJ),
    ("ize", VERB), ("ate", VERB),
    ("tion", NOUN), ("ness", NOUN), ("er", NOUN),
)

# Detachment rules per POS, tried in order; first attested output wins.
_DETACHMENTS = {
    NOUN: (("s", ""), ("ses", "s"), ("ies", "y"), ("es", "e"), ("es", "")),
    VERB: (("ing", ""), ("ing", "e"), ("ed", ""), ("ed", "e"), ("s", "")),
    ADJ: (("er", ""), ("er", "e"), ("est", ""), ("est", "e")),
}

_DEFAULT_ABBREVIATIONS = frozenset({
    "e.g", "i.e", "etc", "vs", "mr", "mrs", "ms", "dr", "no", "st",
    "inc", "ltd", "approx", "misc",
})


def _data_text(name: str) -> str:
    return resources.files("analogon.data").joinpath(name).read_text(encoding="utf-8")


def _load_wordlist(name: str) -> frozenset[str]:
    words = set()
    for line in _data_text(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


def _load_lexicon() -> dict[str, str]:
    lexicon = {}
    for line in _data_text("pos_lexicon.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        lexicon[word] = tag
    return lexicon


def _load_exceptions() -> dict[tuple[str, str], str]:
    table = {}
    for line in _data_text("lemma_exceptions.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        form, pos, lemma = line.split("\t")
        table[(form, pos)] = lemma
    return table


@dataclass(frozen=True)
class Token:
    """One word occurrence: surface form, canonical lemma, tag, stopword flag."""

    surface: str
    lemma: str
    pos: str
    is_stopword: bool


@dataclass(frozen=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    text: str
    sentences: tuple[Sentence, ...]

    def content_tokens(self) -> Iterator[tuple[int, Token]]:
        """Yield (sentence_index, token) for non-stopword NOUN/VERB/ADJ tokens."""
        for sentence in self.sentences:
            for token in sentence.tokens:
                if token.pos in CONTENT_TAGS and not token.is_stopword:
                    yield sentence.index, token


@dataclass
class Corpus:
    """Ordered, id-indexed collection of documents. Immutable after load."""

    documents: tuple[Document, ...]
    _by_id: dict[str, Document] = field(init=False, repr=False)

    def __post_init__(self):
        self._by_id = {doc.id: doc for doc in self.documents}

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._by_id

    def get(self, doc_id: str) -> Document:
        if doc_id not in self._by_id:
            raise KeyError(f"unknown document id {doc_id!r}")
        return self._by_id[doc_id]

    @property
    def ids(self) -> list[str]:
        return [doc.id for doc in self.documents]


def tokenize(raw: str) -> list[str]:
    """Split on whitespace and punctuation, keeping hyphenated words whole."""
    return _TOKEN_RE.findall(raw)


def segment_sentences(text: str, abbreviations: frozenset[str] = _DEFAULT_ABBREVIATIONS) -> list[str]:
    """Split text on sentence-final ``.``/``!``/``?`` followed by space or end.

    A period preceded by a known abbreviation does not end a sentence.
    Returns no empty sentences; empty input yields an empty list.
    """
    sentences = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in ".!?":
            run_end = i
            while run_end + 1 < n and text[run_end + 1] in ".!?":
                run_end += 1
            at_boundary = run_end + 1 >= n or text[run_end + 1].isspace()
            if at_boundary:
                word_start = i
                while word_start > start and not text[word_start - 1].isspace():
                    word_start -= 1
                prev_word = text[word_start:i].rstrip(".").lower()
                if not (text[i] == "." and prev_word in abbreviations):
                    raw = text[start:run_end + 1].strip()
                    if raw:
                        sentences.append(raw)
                    start = run_end + 1
            i = run_end + 1
        else:
            i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


class PosTagger:
    """Lexicon-first tagger with suffix fallbacks over {NOUN, VERB, ADJ, OTHER}.

    Unknown alphabetic words default to NOUN; tokens without letters
    (numbers, stray symbols) tag as OTHER. Deterministic by construction.
    """

    def __init__(self, lexicon: Mapping[str, str] | None = None):
        self.lexicon = dict(lexicon) if lexicon is not None else _load_lexicon()

    def tag_word(self, surface: str) -> str:
        word = surface.lower()
        tag = self.lexicon.get(word)
        if tag is not None:
            return tag
        if not _HAS_LETTER_RE.search(word):
            return OTHER
        for suffix, suffix_tag in _SUFFIX_RULES:
            if word.endswith(suffix) and len(word) > len(suffix):
                return suffix_tag
        return NOUN

    def tag(self, surfaces: Iterable[str]) -> list[str]:
        return [self.tag_word(surface) for surface in surfaces]


class Lemmatizer:
    """Morphy-style detachment rules plus an irregular-form exception table.

    A detachment only applies when its output is attested in the analyzer's
    vocabulary (base word list plus whatever the KB and embedding store
    contribute); otherwise the lowercased surface is kept as the lemma.
    """

    def __init__(self, vocabulary: Iterable[str] | None = None,
                 exceptions: Mapping[tuple[str, str], str] | None = None):
        base = _load_wordlist("base_vocab.txt")
        self.vocabulary = set(base) if vocabulary is None else set(base) | set(vocabulary)
        self.exceptions = dict(exceptions) if exceptions is not None else _load_exceptions()

    def lemmatize(self, surface: str, pos: str) -> str:
        if pos not in POS_TAGS:
            raise ValueError(f"unknown POS tag {pos!r}")
        word = surface.lower()
        if pos == OTHER:
            return word
        exception = self.exceptions.get((word, pos))
        if exception is not None:
            return exception
        for suffix, replacement in _DETACHMENTS[pos]:
            if word.endswith(suffix) and len(word) > len(suffix):
                candidate = word[: -len(suffix)] + replacement
                if len(candidate) >= 2 and candidate in self.vocabulary:
                    return candidate
        return word


class TextAnalyzer:
    """Bundles segmentation, tokenization, tagging, lemmas and stopwords."""

    def __init__(self, tagger: PosTagger | None = None,
                 lemmatizer: Lemmatizer | None = None,
                 stopwords: frozenset[str] | None = None,
                 abbreviations: frozenset[str] = _DEFAULT_ABBREVIATIONS):
        self.tagger = tagger or PosTagger()
        self.lemmatizer = lemmatizer or Lemmatizer()
        self.stopwords = stopwords if stopwords is not None else _load_wordlist("stopwords.txt")
        self.abbreviations = abbreviations

    def segment(self, text: str) -> list[str]:
        return segment_sentences(text, self.abbreviations)

    def make_token(self, surface: str, pos: str) -> Token:
        lemma = self.lemmatizer.lemmatize(surface, pos)
        return Token(surface=surface, lemma=lemma, pos=pos,
                     is_stopword=surface.lower() in self.stopwords)

    def analyze_sentence(self, index: int, raw: str) -> Sentence:
        surfaces = tokenize(raw)
        tags = self.tagger.tag(surfaces)
        tokens = tuple(self.make_token(s, t) for s, t in zip(surfaces, tags))
        return Sentence(index=index, raw=raw, tokens=tokens)

    def analyze(self, text: str) -> tuple[Sentence, ...]:
        return tuple(self.analyze_sentence(i, raw)
                     for i, raw in enumerate(self.segment(text)))


_default_analyzer: TextAnalyzer | None = None


def default_analyzer() -> TextAnalyzer:
    global _default_analyzer
    if _default_analyzer is None:
        _default_analyzer = TextAnalyzer()
    return _default_analyzer


def pos_tag(surfaces: Iterable[str]) -> list[str]:
    return default_analyzer().tagger.tag(surfaces)


def lemmatize(surface: str, pos: str) -> str:
    return default_analyzer().lemmatizer.lemmatize(surface, pos)


def _document_from_record(record: dict, analyzer: TextAnalyzer,
                          path: str, line: int) -> Document:
    for key in ("id", "title", "text"):
        if key not in record or not isinstance(record[key], str):
            raise FormatError(f"record is missing string field {key!r}", path, line)
    raws = analyzer.segment(record["text"])
    pretagged = record.get("tokens")
    if pretagged is None:
        sentences = tuple(analyzer.analyze_sentence(i, raw) for i, raw in enumerate(raws))
    else:
        if not isinstance(pretagged, list) or len(pretagged) != len(raws):
            raise FormatError(
                f"'tokens' must hold one list per sentence ({len(raws)} segmented)",
                path, line)
        sentences = []
        for i, (raw, pairs) in enumerate(zip(raws, pretagged)):
            tokens = []
            for pair in pairs:
                if (not isinstance(pair, list) or len(pair) != 2
                        or pair[1] not in POS_TAGS):
                    raise FormatError(
                        f"pre-tagged token must be [surface, tag], got {pair!r}",
                        path, line)
                tokens.append(analyzer.make_token(pair[0], pair[1]))
            sentences.append(Sentence(index=i, raw=raw, tokens=tuple(tokens)))
        sentences = tuple(sentences)
    return Document(id=record["id"], title=record["title"],
                    text=record["text"], sentences=sentences)


def load_corpus(path: str | Path, analyzer: TextAnalyzer | None = None) -> Corpus:
    """Load a line-JSON corpus file, preserving document order.

    Raises :class:`FormatError` (with the offending line number) on malformed
    records and :class:`DuplicateIdError` when two records share an id.
    """
    analyzer = analyzer or default_analyzer()
    path = Path(path)
    documents: list[Document] = []
    seen: set[str] = set()
    with path.open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON: {exc.msg}", str(path), line_no) from exc
            if not isinstance(record, dict):
                raise FormatError("record must be a JSON object", str(path), line_no)
            doc = _document_from_record(record, analyzer, str(path), line_no)
            if doc.id in seen:
                raise DuplicateIdError(f"duplicate document id {doc.id!r}", str(path), line_no)
            seen.add(doc.id)
            documents.append(doc)
    return Corpus(documents=tuple(documents))
