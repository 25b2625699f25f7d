"""Term -> abstraction-property lookup with a reverse property -> terms index.

The KB file format is line-JSON: ``{"term": lemma, "property": CamelCaseName,
"level": int >= 1}``. Level 1 entries are direct supersets of the term,
higher levels transitive ones; assigning levels is the KB author's job.
Designers are only ever shown entries up to level 3, but the reverse index
used for corpus abstraction matches at every level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError

DISPLAY_LEVEL_CUTOFF = 3


@dataclass(frozen=True)
class PropertyEntry:
    """One abstraction property attached to a lemma."""

    property: str
    level: int


@dataclass
class KnowledgeBase:
    """Immutable forward (lemma -> entries) and reverse (property -> lemmas) maps."""

    forward: dict[str, tuple[PropertyEntry, ...]]
    reverse: dict[str, frozenset[str]] = field(init=False, repr=False)

    def __post_init__(self):
        reverse: dict[str, set[str]] = {}
        for lemma, entries in self.forward.items():
            for entry in entries:
                reverse.setdefault(entry.property, set()).add(lemma)
        self.reverse = {prop: frozenset(lemmas) for prop, lemmas in reverse.items()}

    @property
    def lemmas(self) -> set[str]:
        return set(self.forward)


def _parse_kb_file(path: Path) -> dict[str, list[PropertyEntry]]:
    forward: dict[str, list[PropertyEntry]] = {}
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
            term = record.get("term")
            prop = record.get("property")
            level = record.get("level")
            if not isinstance(term, str) or not term:
                raise FormatError("'term' must be a nonempty string", str(path), line_no)
            if not isinstance(prop, str) or not prop or any(c.isspace() for c in prop):
                raise FormatError("'property' must be a nonempty string without whitespace",
                                  str(path), line_no)
            if not isinstance(level, int) or isinstance(level, bool) or level < 1:
                raise FormatError(f"'level' must be an integer >= 1, got {level!r}",
                                  str(path), line_no)
            forward.setdefault(term, []).append(PropertyEntry(property=prop, level=level))
    return forward


def load_kb(primary_path: str | Path, fallback_path: str | Path | None = None) -> KnowledgeBase:
    """Load a KB, consulting the fallback file only for lemmas the primary lacks.

    Entry lists are sorted by level ascending; file order is preserved within
    a level, so KB authors control intra-level ordering.
    """
    forward = _parse_kb_file(Path(primary_path))
    if fallback_path is not None:
        for term, entries in _parse_kb_file(Path(fallback_path)).items():
            if term not in forward:
                forward[term] = entries
    sorted_forward = {
        term: tuple(sorted(entries, key=lambda e: e.level))
        for term, entries in forward.items()
    }
    return KnowledgeBase(forward=sorted_forward)


def abstractions_for(kb: KnowledgeBase, lemma: str) -> list[PropertyEntry]:
    """Entries for ``lemma`` up to level 3, ordered specific to general.

    Unknown lemmas yield an empty list. No prevalence ordering is applied
    within a level beyond KB file order.
    """
    return [entry for entry in kb.forward.get(lemma, ())
            if entry.level <= DISPLAY_LEVEL_CUTOFF]


def terms_with_property(kb: KnowledgeBase, property_name: str) -> frozenset[str]:
    """All lemmas carrying ``property_name`` at any level."""
    return kb.reverse.get(property_name, frozenset())
