import json
from pathlib import Path

import pytest

import analogon

TESTS_DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def demo_corpus():
    return analogon.load_corpus(analogon.data_path("demo_corpus.jsonl"))


@pytest.fixture(scope="session")
def demo_kb():
    return analogon.load_kb(analogon.data_path("demo_kb.jsonl"),
                            analogon.data_path("fallback_kb.jsonl"))


@pytest.fixture(scope="session")
def demo_store():
    return analogon.load_embeddings(analogon.data_path("demo_embeddings.txt"))


@pytest.fixture(scope="session")
def divergence():
    """Corpus, KB, store and selection of the shipped divergence fixture."""
    base = analogon.data_path("divergence")
    corpus = analogon.load_corpus(base / "corpus.jsonl")
    kb = analogon.load_kb(base / "kb.jsonl")
    store = analogon.load_embeddings(base / "embeddings.txt")
    selection = analogon.FocusSelection.from_json((base / "selection.json").read_text())
    return corpus, kb, store, selection


@pytest.fixture()
def fig2_selection():
    return analogon.FocusSelection(
        doc_id="soapy-slider",
        sentence_indices=frozenset({1}),
        ignored_lemmas=frozenset({"bar"}),
        abstraction_choices={"size": "SpatialQuantity", "soap": "PersonalProduct"},
    )


@pytest.fixture()
def scenario2_selection():
    return analogon.FocusSelection(
        doc_id="soapy-slider",
        sentence_indices=frozenset({2}),
        ignored_lemmas=frozenset({"soapy", "soap", "keep", "dryer", "last", "long"}),
        abstraction_choices={
            "remove": "RemovingSomething",
            "water": "LiquidTangibleThing",
            "bar": "SolidTangibleThing",
        },
    )


def write_jsonl(path: Path, records) -> Path:
    path.write_text("".join(json.dumps(r, separators=(",", ":")) + "\n"
                            for r in records), encoding="utf-8")
    return path


def write_embeddings(path: Path, table) -> Path:
    lines = [f"{word} " + " ".join(f"{v:g}" for v in vec)
             for word, vec in table.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
