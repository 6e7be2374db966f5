"""Batch CLI: analyze one document, score a corpus directory, aggregate
statistics, serve the writing-aid API, and manage the registry cache."""
from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click

from .analysis import analyze_payload
from .cache import cache_registry, load_cached
from .config import Config, ConfigError, load_config
from .features import assemble_matrix, build_dictionary, export_matrix, load_matrix
from .grammar import Registry, load_bundled_registry, load_registry
from .scoring import ScoreReport, score_corpus
from .stats import compute_stats
from .tokenize import Document, Lexicon, ingest_external, load_bundled_lexicon, tokenize_document


def _die(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _emit(obj: dict) -> None:
    click.echo(json.dumps(obj, ensure_ascii=False, indent=2))


def _load_lexicon(config: Config) -> Lexicon:
    return Lexicon.load(config.lexicon_path) if config.lexicon_path else load_bundled_lexicon()


def _load_registry(config: Config) -> Registry:
    if config.cache_path and config.patterns_path:
        # warm start; a stale or version-skewed cache is an error, refresh
        # it with `sakubun cache <patterns-dir> <cache-file>`
        return load_cached(config.cache_path, config.patterns_path)
    if config.patterns_path:
        return load_registry(config.patterns_path, any_star_default=config.any_star_bound)
    return load_bundled_registry()


def _read_document(path: Path, lexicon: Lexicon) -> Document:
    if path.suffix == ".tsv":
        docs = ingest_external(path.read_bytes())
        sentences = [s for d in docs for s in d.sentences]
        raw = "\n".join(d.raw_text for d in docs)
        return Document(id=path.stem, sentences=sentences, raw_text=raw)
    return tokenize_document(path.stem, path.read_text("utf-8"), lexicon)


def _load_corpus(directory: Path, lexicon: Lexicon) -> list[Document]:
    files = sorted(p for p in directory.iterdir()
                   if p.suffix in (".txt", ".tsv") and p.is_file())
    if not files:
        _die(f"no .txt or .tsv documents in {directory}")
    docs = []
    for path in files:
        try:
            docs.append(_read_document(path, lexicon))
        except Exception as exc:
            _die(f"{path.name}: {exc}")
    return docs


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(round(value + 0.0, 6))
    return str(value)


def write_report_csv(report: ScoreReport, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["doc_id", "feature_sum", "grade", "score",
                         "digression", "theme_distance"])
        for d in report.documents:
            writer.writerow([d.doc_id, _csv_value(float(d.feature_sum)),
                             _csv_value(d.grade), _csv_value(float(d.score)),
                             _csv_value(d.digression),
                             _csv_value(float(d.theme_distance))])


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON config file; flags override its fields.")
@click.pass_context
def main(ctx, config_path):
    """Japanese composition analysis and scoring."""
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path


def _config(ctx, **overrides) -> Config:
    try:
        return load_config(ctx.obj.get("config_path"), **overrides)
    except (ConfigError, OSError) as exc:
        _die(str(exc))


@main.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def analyze(ctx, input_file):
    """Analyze one document (.txt or token .tsv): features + grammar report."""
    config = _config(ctx)
    try:
        lexicon = _load_lexicon(config)
        registry = _load_registry(config)
        doc = _read_document(input_file, lexicon)
        if not doc.sentences:
            _die(f"{input_file.name}: EmptyDocument (no sentences)")
        payload = analyze_payload(doc, registry, lexicon, step_budget=config.step_budget)
    except SystemExit:
        raise
    except Exception as exc:
        _die(f"{input_file.name}: {exc}")
    _emit(payload)


@main.command()
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--mode", type=click.Choice(["sum", "cluster"]), default=None)
@click.option("--range", "score_range", nargs=2, type=float, default=None,
              help="Global score range LO HI (sum mode).")
@click.option("--k", type=int, default=None, help="Cluster count (cluster mode).")
@click.option("--seed", type=int, default=None, help="PRNG seed for k-means++.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path),
              default=None, help="Output directory (default: corpus dir).")
@click.option("--sum-include-bow", is_flag=True, default=False,
              help="Include BOW columns in the normalized feature sums.")
@click.pass_context
def score(ctx, corpus_dir, mode, score_range, k, seed, out_dir, sum_include_bow):
    """Score a corpus directory; writes report.json/.csv and matrix.csv/.json."""
    config = _config(ctx, mode=mode,
                     score_range=list(score_range) if score_range else None, k=k)
    out_dir = out_dir or corpus_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        lexicon = _load_lexicon(config)
        registry = _load_registry(config)
        corpus = _load_corpus(corpus_dir, lexicon)
        if len(corpus) < 2:
            _die(f"TooFewRows: scoring needs at least 2 documents, got {len(corpus)}")
        dictionary = None
        if config.dictionary_mode == "global":
            dictionary = build_dictionary(corpus, "global", lexicon)
        matrix = assemble_matrix(corpus, registry, lexicon, dictionary=dictionary)
        params = config.scoring_params(seed=seed)
        params.sum_include_bow = sum_include_bow
        report = score_corpus(matrix, config.mode, params)
    except SystemExit:
        raise
    except Exception as exc:
        _die(str(exc))
    report_obj = report.to_obj()
    (out_dir / "report.json").write_text(
        json.dumps(report_obj, ensure_ascii=False, indent=2) + "\n", "utf-8")
    write_report_csv(report, out_dir / "report.csv")
    export_matrix(matrix, out_dir / "matrix.csv", out_dir / "matrix.json")
    click.echo(f"scored {len(corpus)} documents -> {out_dir}/report.json", err=True)


@main.command()
@click.argument("report_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("matrix_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_context
def stats(ctx, report_file, matrix_file):
    """Aggregate statistics from a score report + feature matrix.

    MATRIX_FILE is the matrix.csv; its matrix.json sidecar must sit beside it.
    """
    try:
        report = json.loads(report_file.read_text("utf-8"))
        sidecar = matrix_file.with_suffix(".json")
        matrix = load_matrix(matrix_file, sidecar)
        payload = compute_stats(report, matrix)
    except SystemExit:
        raise
    except Exception as exc:
        _die(str(exc))
    _emit(payload)


@main.command()
@click.option("--port", type=int, default=8800, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.pass_context
def serve(ctx, port, host):
    """Run the writing-aid HTTP service."""
    import uvicorn

    from .service import create_app

    config = _config(ctx)
    try:
        app = create_app(config)
    except Exception as exc:
        _die(str(exc))
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command()
@click.argument("patterns_dir", type=click.Path(exists=True, path_type=Path))
@click.argument("cache_file", type=click.Path(dir_okay=False, path_type=Path))
@click.pass_context
def cache(ctx, patterns_dir, cache_file):
    """Compile pattern files and store the automata bundle."""
    config = _config(ctx)
    try:
        registry = load_registry(patterns_dir, any_star_default=config.any_star_bound)
        cache_registry(registry, cache_file, patterns_dir)
    except SystemExit:
        raise
    except Exception as exc:
        _die(str(exc))
    click.echo(f"cached {len(registry)} patterns -> {cache_file}", err=True)


@main.command("load-cache")
@click.argument("cache_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("patterns_dir", type=click.Path(exists=True, path_type=Path))
def load_cache_cmd(cache_file, patterns_dir):
    """Validate a cache file against its pattern sources."""
    try:
        registry = load_cached(cache_file, patterns_dir)
    except Exception as exc:
        _die(str(exc))
    click.echo(f"cache ok: {len(registry)} patterns", err=True)


if __name__ == "__main__":
    main()
