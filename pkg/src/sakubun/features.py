"""Per-document features and the corpus feature matrix.

Scalar features follow a fixed, named column order (see SCALAR_COLUMNS);
a golden copy of the header lives in the test suite so accidental drift
fails loudly. Bag-of-words vectors count lemmas against a corpus-local
(or lexicon-wide) dictionary; punctuation and other symbol tokens are
excluded from every count.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .grammar import LEVELS, Registry, grammar_feature_report, match_document
from .tokenize import Document, Lexicon, Origin, PosMajor, Token, word_origin
from .tokenize import _is_kanji  # single source of truth for the kanji ranges


class FeatureError(Exception):
    pass


class EmptyDocument(FeatureError):
    def __init__(self, doc_id: str):
        super().__init__(f"document {doc_id!r} has no sentences")
        self.doc_id = doc_id


class EmptyCorpus(FeatureError):
    pass


_POS_ORDER = (
    PosMajor.verb, PosMajor.noun, PosMajor.conjunction, PosMajor.particle,
    PosMajor.adjective, PosMajor.adverb, PosMajor.auxiliary_verb,
)

SCALAR_COLUMNS = (
    "n_verbs", "n_nouns", "n_conjunctions", "n_particles", "n_adjectives",
    "n_adverbs", "n_auxiliary_verbs", "total_words", "unique_words",
    "n_native", "n_sino", "n_loan", "kanji_chars", "sentence_count",
    "avg_sentence_length", "n5_total", "n4_total", "n3_total", "n2_total",
    "n1_total", "n5_unique", "n4_unique", "n3_unique", "n2_unique", "n1_unique",
)


@dataclass(frozen=True)
class WordFeatures:
    pos_counts: dict[str, int]
    total_words: int
    unique_words: int
    origin_counts: dict[str, int]
    kanji_chars: int

    def as_dict(self) -> dict:
        return {
            "pos_counts": dict(self.pos_counts),
            "total_words": self.total_words,
            "unique_words": self.unique_words,
            "origin_counts": dict(self.origin_counts),
            "kanji_chars": self.kanji_chars,
        }


@dataclass(frozen=True)
class SentenceFeatures:
    sentence_count: int
    avg_sentence_length: float

    def as_dict(self) -> dict:
        return {"sentence_count": self.sentence_count,
                "avg_sentence_length": self.avg_sentence_length}


@dataclass(frozen=True)
class GrammarFeatures:
    level_totals: dict[str, int]
    level_uniques: dict[str, int]
    grand_total: int
    grand_unique: int

    def as_dict(self) -> dict:
        return {
            "level_totals": dict(self.level_totals),
            "level_uniques": dict(self.level_uniques),
            "grand_total": self.grand_total,
            "grand_unique": self.grand_unique,
        }


@dataclass(frozen=True)
class BowDictionary:
    words: tuple[str, ...]
    source: str  # corpus_local | global

    def __len__(self) -> int:
        return len(self.words)


@dataclass
class FeatureMatrix:
    doc_ids: list[str]
    scalar_block: np.ndarray  # docs x len(SCALAR_COLUMNS)
    bow_block: np.ndarray  # docs x len(dictionary), integer counts
    dictionary: BowDictionary

    def __post_init__(self):
        if self.scalar_block.shape[0] != self.bow_block.shape[0]:
            raise FeatureError("scalar and bow blocks disagree on row count")


def _is_word(token: Token) -> bool:
    return token.pos_major != PosMajor.symbol


def word_features(d: Document, lex: Lexicon | None = None) -> WordFeatures:
    words = [t for t in d.all_tokens() if _is_word(t)]
    pos_counts = {p.value: 0 for p in _POS_ORDER}
    for t in words:
        if t.pos_major.value in pos_counts:
            pos_counts[t.pos_major.value] += 1
    origin_counts = {o.value: 0 for o in Origin}
    for t in words:
        origin_counts[word_origin(t, lex).value] += 1
    kanji = sum(1 for t in d.all_tokens() for c in t.surface if _is_kanji(c))
    return WordFeatures(
        pos_counts=pos_counts,
        total_words=len(words),
        unique_words=len({t.lemma for t in words}),
        origin_counts=origin_counts,
        kanji_chars=kanji,
    )


def sentence_features(d: Document) -> SentenceFeatures:
    if not d.sentences:
        raise EmptyDocument(d.id)
    words = sum(1 for t in d.all_tokens() if _is_word(t))
    return SentenceFeatures(
        sentence_count=len(d.sentences),
        avg_sentence_length=words / len(d.sentences),
    )


def grammar_features(report: dict) -> GrammarFeatures:
    levels = report.get("totals", {}).get("levels", {})
    totals = {lv: int(levels.get(lv, {}).get("total_count", 0)) for lv in LEVELS}
    uniques = {lv: int(levels.get(lv, {}).get("unique_patterns", 0)) for lv in LEVELS}
    return GrammarFeatures(
        level_totals=totals,
        level_uniques=uniques,
        grand_total=sum(totals.values()),
        grand_unique=sum(uniques.values()),
    )


def build_dictionary(corpus: list[Document], mode: str = "corpus_local",
                     lex: Lexicon | None = None) -> BowDictionary:
    """corpus_local: sorted unique lemmas of the batch itself (the scoring
    default); global: the lemma set of a supplied lexicon."""
    if mode == "global":
        if lex is None:
            raise FeatureError("global dictionary mode requires a lexicon")
        return BowDictionary(words=tuple(lex.lemma_set()), source="global")
    if mode != "corpus_local":
        raise FeatureError(f"unknown dictionary mode: {mode!r}")
    if not corpus:
        raise EmptyCorpus("corpus_local dictionary needs at least one document")
    lemmas = {t.lemma for doc in corpus for t in doc.all_tokens() if _is_word(t)}
    return BowDictionary(words=tuple(sorted(lemmas)), source="corpus_local")


def bow(d: Document, dictionary: BowDictionary) -> np.ndarray:
    index = {w: i for i, w in enumerate(dictionary.words)}
    counts = np.zeros(len(dictionary.words), dtype=np.int64)
    for t in d.all_tokens():
        if _is_word(t):
            i = index.get(t.lemma)
            if i is not None:
                counts[i] += 1
    return counts


def scalar_row(word_f: WordFeatures, sent_f: SentenceFeatures,
               gram_f: GrammarFeatures) -> list[float]:
    row = [float(word_f.pos_counts[p.value]) for p in _POS_ORDER]
    row += [float(word_f.total_words), float(word_f.unique_words)]
    row += [float(word_f.origin_counts[o]) for o in ("native", "sino", "loan")]
    row += [float(word_f.kanji_chars), float(sent_f.sentence_count),
            sent_f.avg_sentence_length]
    row += [float(gram_f.level_totals[lv]) for lv in LEVELS]
    row += [float(gram_f.level_uniques[lv]) for lv in LEVELS]
    return row


def assemble_matrix(corpus: list[Document], registry: Registry,
                    lex: Lexicon | None = None,
                    dictionary: BowDictionary | None = None) -> FeatureMatrix:
    """Run every extractor over the corpus, in corpus order."""
    if len(corpus) < 2:
        raise FeatureError("feature matrix needs at least 2 documents")
    if dictionary is None:
        dictionary = build_dictionary(corpus, "corpus_local")
    scalar_rows = []
    bow_rows = []
    for doc in corpus:
        try:
            word_f = word_features(doc, lex)
            sent_f = sentence_features(doc)
            report = grammar_feature_report(match_document(registry, doc), registry)
            gram_f = grammar_features(report)
        except FeatureError:
            raise
        except Exception as exc:
            raise FeatureError(f"document {doc.id!r}: {exc}") from exc
        scalar_rows.append(scalar_row(word_f, sent_f, gram_f))
        bow_rows.append(bow(doc, dictionary))
    return FeatureMatrix(
        doc_ids=[doc.id for doc in corpus],
        scalar_block=np.array(scalar_rows, dtype=np.float64),
        bow_block=np.array(bow_rows, dtype=np.int64),
        dictionary=dictionary,
    )


def _fmt(value: float) -> str:
    rounded = round(float(value), 6)
    if rounded == int(rounded):
        return str(int(rounded))
    return repr(rounded)


def export_matrix(matrix: FeatureMatrix, csv_path: str | Path,
                  sidecar_path: str | Path) -> None:
    """CSV of the scalar block (pinned header) plus a JSON sidecar holding
    the dictionary and the bow block in sparse form."""
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("doc_id",) + SCALAR_COLUMNS)
        for doc_id, row in zip(matrix.doc_ids, matrix.scalar_block):
            writer.writerow([doc_id] + [_fmt(v) for v in row])
    sparse = {}
    for doc_id, counts in zip(matrix.doc_ids, matrix.bow_block):
        sparse[doc_id] = {str(i): int(c) for i, c in enumerate(counts) if c}
    sidecar = {
        "version": 1,
        "dictionary": list(matrix.dictionary.words),
        "dictionary_source": matrix.dictionary.source,
        "bow": sparse,
    }
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, ensure_ascii=False, indent=2)
        fh.write("\n")


def load_matrix(csv_path: str | Path, sidecar_path: str | Path) -> FeatureMatrix:
    with open(csv_path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != ("doc_id",) + SCALAR_COLUMNS:
            raise FeatureError("matrix CSV header does not match the pinned columns")
        doc_ids = []
        rows = []
        for record in reader:
            doc_ids.append(record[0])
            rows.append([float(v) for v in record[1:]])
    with open(sidecar_path, encoding="utf-8") as fh:
        sidecar = json.load(fh)
    if sidecar.get("version") != 1:
        raise FeatureError(f"matrix sidecar version {sidecar.get('version')!r} not supported")
    words = tuple(sidecar["dictionary"])
    bow_block = np.zeros((len(doc_ids), len(words)), dtype=np.int64)
    for row_idx, doc_id in enumerate(doc_ids):
        for col, count in sidecar["bow"].get(doc_id, {}).items():
            bow_block[row_idx, int(col)] = count
    return FeatureMatrix(
        doc_ids=doc_ids,
        scalar_block=np.array(rows, dtype=np.float64),
        bow_block=bow_block,
        dictionary=BowDictionary(words=words, source=sidecar.get("dictionary_source", "corpus_local")),
    )
