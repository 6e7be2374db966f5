#!/usr/bin/env python3
"""Unsupervised scoring of the bundled 12-document fixture corpus.

Walks the whole pipeline: tokenize, match grammar, extract features,
min-max normalize, Gaussian-CDF scores in sum mode, k-means grades in
cluster mode, and BOW-based digression detection (doc12 is an off-theme
plant about math homework).
"""
from pathlib import Path

from sakubun.features import assemble_matrix
from sakubun.grammar import load_bundled_registry
from sakubun.scoring import ScoringParams, score_corpus
from sakubun.tokenize import load_bundled_lexicon, tokenize_document

corpus_dir = Path(__file__).resolve().parent.parent / "tests" / "data" / "corpus12"
lexicon = load_bundled_lexicon()
registry = load_bundled_registry()

corpus = [tokenize_document(p.stem, p.read_text("utf-8"), lexicon)
          for p in sorted(corpus_dir.glob("*.txt"))]
matrix = assemble_matrix(corpus, registry, lexicon)
print(f"corpus: {len(corpus)} docs, scalar block {matrix.scalar_block.shape}, "
      f"bow block {matrix.bow_block.shape}")

for mode in ("sum", "cluster"):
    report = score_corpus(matrix, mode, ScoringParams(mode=mode, seed=7))
    print(f"\n--- {mode} mode ---")
    print(f"gaussian over feature sums: mu={report.gaussian.mu:.3f} "
          f"sigma={report.gaussian.sigma:.3f}; "
          f"outlier threshold {report.outlier_threshold:.3f}")
    for d in report.documents:
        grade = f" grade {d.grade}" if d.grade else ""
        flag = "  << digression (penalized)" if d.digression else ""
        print(f"  {d.doc_id}: sum {d.feature_sum:6.3f}{grade}  "
              f"score {d.score:6.2f}  dist {d.theme_distance:5.2f}{flag}")
