"""Batch entry points: ingest data, inspect abstractions, build queries,
run the four search methods, run the ratings report, launch the service.

Machine output is line-JSON everywhere (TSV for the stats tables), with a
total ordering on every list, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .abstraction import abstract_corpus
from .corpus import load_corpus
from .embedding import load_embeddings
from .errors import AnalogonError
from .kb import abstractions_for, load_kb
from .query import FocusSelection, abstracted_only_terms, build_query, step2_terms
from .service import Engine, match_payload, resolve_config, serve
from .stats import evaluation_report, load_ratings


def _data_options(command):
    for option in (
        click.option("--corpus", "corpus_path", type=click.Path(), default=None,
                     help="Corpus line-JSON file (default: shipped demo corpus)."),
        click.option("--kb", "kb_path", type=click.Path(), default=None,
                     help="Primary KB file (default: shipped demo KB)."),
        click.option("--kb-fallback", "kb_fallback_path", type=click.Path(), default=None,
                     help="Fallback KB consulted for terms the primary lacks."),
        click.option("--embeddings", "embeddings_path", type=click.Path(), default=None,
                     help="Word-vector text file (default: shipped demo vectors)."),
        click.option("--purpmech", "purpmech_path", type=click.Path(), default=None,
                     help="Purpose/mechanism vector file (default: derived fallback)."),
        click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                     help="TOML config file; flags override it."),
    ):
        command = option(command)
    return command


def _engine(corpus_path, kb_path, kb_fallback_path, embeddings_path,
            purpmech_path, config_path, **extra) -> Engine:
    config = resolve_config(
        {"corpus": corpus_path, "kb": kb_path, "kb_fallback": kb_fallback_path,
         "embeddings": embeddings_path, "purpmech": purpmech_path},
        config_file=config_path)
    engine = Engine.from_config(config)
    for key, value in extra.items():
        setattr(engine, key, value)
    return engine


def _emit(lines, out: str | None) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Focus-abstracted analogical search engine."""


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(), required=True)
@click.option("--validate", is_flag=True, help="Check the file and report, emit nothing.")
def ingest(corpus_path, validate):
    """Load a corpus file; emit one summary record per document."""
    try:
        corpus = load_corpus(corpus_path)
    except (AnalogonError, OSError) as exc:
        _fail(exc)
    if validate:
        click.echo(f"ok: {len(corpus)} documents", err=True)
        return
    lines = [json.dumps({
        "id": doc.id, "title": doc.title,
        "sentences": len(doc.sentences),
        "tokens": sum(len(s.tokens) for s in doc.sentences),
    }, separators=(",", ":")) for doc in corpus]
    _emit(lines, None)


@main.command()
@click.argument("term")
@click.option("--kb", "kb_path", type=click.Path(), default=None)
@click.option("--kb-fallback", "kb_fallback_path", type=click.Path(), default=None)
def abstractions(term, kb_path, kb_fallback_path):
    """Print the level-ordered abstraction properties offered for TERM."""
    from . import data_path
    try:
        kb = load_kb(kb_path or data_path("demo_kb.jsonl"),
                     kb_fallback_path or data_path("fallback_kb.jsonl"))
    except (AnalogonError, OSError) as exc:
        _fail(exc)
    lines = [json.dumps({"property": e.property, "level": e.level},
                        separators=(",", ":"))
             for e in abstractions_for(kb, term.lower())]
    _emit(lines, None)


@main.command()
@click.option("--properties", required=True,
              help="Comma-separated property names to abstract with.")
@click.option("--out", type=click.Path(), default=None)
@_data_options
def abstract(properties, out, **data):
    """Dump the corpus re-represented under the given properties."""
    try:
        engine = _engine(**data)
        names = [p.strip() for p in properties.split(",") if p.strip()]
        docs = abstract_corpus(engine.corpus, names, engine.kb)
    except (AnalogonError, OSError, ValueError) as exc:
        _fail(exc)
    lines = [json.dumps({
        "doc_id": doc.doc_id,
        "tokens": [{"kind": "property" if t.is_property else "term", "text": t.text}
                   for t in doc.tokens],
        "replacements": [[r.lemma, r.property, r.sentence_index]
                         for r in doc.replacements],
    }, separators=(",", ":")) for doc in docs]
    _emit(lines, out)


@main.command(name="query-build")
@click.option("--selection", "selection_path", type=click.Path(exists=True), required=True)
@_data_options
def query_build(selection_path, **data):
    """Build the focus-abstracted query for a selection file."""
    try:
        engine = _engine(**data)
        selection = FocusSelection.from_json(Path(selection_path).read_text(encoding="utf-8"))
        doc = engine.corpus.get(selection.doc_id)
        query = build_query(doc, selection, engine.kb)
        terms = step2_terms(doc, selection, engine.kb)
    except (AnalogonError, OSError, KeyError) as exc:
        _fail(exc)
    _emit([json.dumps({
        "doc_id": doc.id,
        "query_tokens": [{"kind": "property" if t.is_property else "term",
                          "text": t.text} for t in query.tokens],
        "step2_terms": terms,
    }, separators=(",", ":"))], None)


@main.command()
@click.option("--method", type=click.Choice(["focus-abstracted", "focus-only",
                                             "overall-glove", "overall-purpmech"]),
              default="focus-abstracted", show_default=True)
@click.option("--selection", "selection_path", type=click.Path(exists=True), required=True)
@click.option("--k", type=int, default=10, show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write matches here instead of stdout.")
@click.option("--focus-only-abstracted-words-only", is_flag=True,
              help="Focus-only queries use only the abstracted words, "
                   "not the full step-2 term list.")
@_data_options
def search(method, selection_path, k, out, focus_only_abstracted_words_only, **data):
    """Run one retrieval method for a selection; emit ranked matches."""
    try:
        engine = _engine(
            **data, focus_only_abstracted_words_only=focus_only_abstracted_words_only)
        selection = FocusSelection.from_json(Path(selection_path).read_text(encoding="utf-8"))
        tokens, matches = engine.run_search(selection, method, k)
    except (AnalogonError, OSError, ValueError) as exc:
        _fail(exc)
    lines = [json.dumps(match_payload(m), separators=(",", ":")) for m in matches]
    _emit(lines, out)


def _format_float(value, digits=4):
    return "nan" if value is None else f"{value:.{digits}f}"


@main.command(name="eval")
@click.option("--ratings", "ratings_path", type=click.Path(exists=True), required=True)
@click.option("--alpha", type=float, default=0.05, show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Also write the machine-readable report as line-JSON.")
def eval_command(ratings_path, alpha, out):
    """Reproduce the evaluation statistics from a ratings CSV."""
    try:
        records = load_ratings(ratings_path)
        report = evaluation_report(records, alpha=alpha)
    except (AnalogonError, ValueError, OSError) as exc:
        _fail(exc)

    rows = ["method\tmeasure\tmean\tsd\tn"]
    for method, measures in report["methods"].items():
        for measure, stats in measures.items():
            rows.append(f"{method}\t{measure}\t{stats['mean']:.4f}\t"
                        f"{stats['sd']:.4f}\t{stats['n']}")
    click.echo("\n".join(rows))
    for measure, block in report["measures"].items():
        anova = block["anova"]
        click.echo(f"\n[{measure}] ANOVA F({anova['df_between']},{anova['df_within']}) "
                   f"= {anova['F']:.1f}, p = {anova['p']:.4g}")
        if block["cronbach_alpha"] is not None:
            click.echo(f"[{measure}] Cronbach's alpha = {block['cronbach_alpha']:.2f}")
        click.echo(f"[{measure}] Tukey HSD (q_crit = {block['tukey']['q_crit']:.3f}, "
                   f"alpha = {block['tukey']['alpha']})")
        click.echo("pair\tmean_diff\tq_stat\tsignificant")
        for pair in block["tukey"]["pairs"]:
            click.echo(f"{pair['a']} vs {pair['b']}\t{pair['mean_diff']:.4f}\t"
                       f"{pair['q_stat']:.4f}\t{str(pair['significant']).lower()}")
    click.echo("\ncorrelation\tr\tci_low\tci_high\tp\tn")
    for name, corr in report["correlations"].items():
        click.echo(f"{name}\t{corr['r']:.2f}\t{corr['ci_low']:.2f}\t"
                   f"{corr['ci_high']:.2f}\t{corr['p']:.4g}\t{corr['n']}")
    if out:
        lines = []
        for method, measures in report["methods"].items():
            lines.append(json.dumps({"record": "summary", "method": method,
                                     **{m: v for m, v in measures.items()}},
                                    separators=(",", ":"), sort_keys=True))
        for measure, block in report["measures"].items():
            lines.append(json.dumps({"record": "analysis", "measure": measure, **block},
                                    separators=(",", ":"), sort_keys=True))
        lines.append(json.dumps({"record": "correlations", **report["correlations"]},
                                separators=(",", ":"), sort_keys=True))
        Path(out).write_text("\n".join(lines) + "\n", encoding="utf-8")


@main.command(name="serve")
@click.option("--port", type=int, default=None)
@click.option("--host", default=None)
@_data_options
def serve_command(port, host, config_path, **data):
    """Start the HTTP JSON API."""
    try:
        config = resolve_config(
            {**{k.replace("_path", ""): v for k, v in data.items()},
             "port": port, "host": host},
            config_file=config_path)
        serve(config)
    except (AnalogonError, OSError, ValueError) as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
