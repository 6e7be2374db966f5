"""Corpus-level statistics over a finished score report and feature matrix:
per-feature mean/std, grammar usage by level, grade distribution, and a
five-number score summary."""
from __future__ import annotations

import numpy as np

from .features import SCALAR_COLUMNS, FeatureMatrix
from .grammar import LEVELS


class SchemaMismatch(Exception):
    def __init__(self, detail: str):
        super().__init__(f"report/matrix schema mismatch: {detail}")
        self.detail = detail


def _round6(x: float) -> float:
    return round(float(x) + 0.0, 6)


def compute_stats(report: dict, matrix: FeatureMatrix) -> dict:
    if not isinstance(report, dict) or "documents" not in report or "corpus" not in report:
        raise SchemaMismatch("report must carry 'corpus' and 'documents'")
    documents = report["documents"]
    if len(documents) != len(matrix.doc_ids):
        raise SchemaMismatch(
            f"report has {len(documents)} documents, matrix has {len(matrix.doc_ids)}")

    feature_stats = {}
    for j, name in enumerate(SCALAR_COLUMNS):
        column = matrix.scalar_block[:, j]
        feature_stats[name] = {"mean": _round6(column.mean()),
                               "std": _round6(column.std(ddof=0))}

    level_cols = {lv: SCALAR_COLUMNS.index(f"{lv.lower()}_total") for lv in LEVELS}
    grammar_histogram = [
        {"level": lv, "total": int(matrix.scalar_block[:, level_cols[lv]].sum())}
        for lv in LEVELS  # N5 -> N1
    ]

    grade_distribution: dict[str, int] = {}
    for doc in documents:
        grade = doc.get("grade")
        if grade is not None:
            grade_distribution[grade] = grade_distribution.get(grade, 0) + 1
    grade_distribution = dict(sorted(grade_distribution.items()))

    scores = np.array([doc["score"] for doc in documents], dtype=np.float64)
    q1, median, q3 = np.percentile(scores, [25, 50, 75])
    score_summary = {
        "min": _round6(scores.min()),
        "q1": _round6(q1),
        "median": _round6(median),
        "q3": _round6(q3),
        "max": _round6(scores.max()),
    }
    return {
        "documents": len(documents),
        "mode": report["corpus"].get("mode"),
        "feature_stats": feature_stats,
        "grammar_histogram": grammar_histogram,
        "grade_distribution": grade_distribution,
        "score_summary": score_summary,
    }
