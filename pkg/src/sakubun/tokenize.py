"""Sentence segmentation and dictionary-based morphological tokenization.

The reference tokenizer is a greedy longest-match segmenter over a bundled
lexicon of explicit surface forms (conjugations are listed, not generated).
Output of a real morphological analyzer can be ingested instead via the
token TSV format (see :func:`ingest_external`).
"""
from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable


class PosMajor(str, Enum):
    verb = "verb"
    noun = "noun"
    adjective = "adjective"
    adverb = "adverb"
    particle = "particle"
    auxiliary_verb = "auxiliary_verb"
    conjunction = "conjunction"
    quantifier = "quantifier"
    symbol = "symbol"
    other = "other"


class ConjForm(str, Enum):
    none = "none"
    dictionary = "dictionary"
    volitional = "volitional"
    negative_stem = "negative_stem"
    ta = "ta"
    te = "te"
    masu_stem = "masu_stem"
    other = "other"


class ScriptClass(str, Enum):
    kanji_bearing = "kanji_bearing"
    hiragana = "hiragana"
    katakana = "katakana"
    latin_digit_other = "latin_digit_other"


class Origin(str, Enum):
    native = "native"
    sino = "sino"
    loan = "loan"


SENTENCE_TERMINATORS = "。！？\n"


def _is_kanji(ch: str) -> bool:
    cp = ord(ch)
    return (
        0x4E00 <= cp <= 0x9FFF
        or 0x3400 <= cp <= 0x4DBF
        or 0xF900 <= cp <= 0xFAFF
        or cp == 0x3005  # 々 iteration mark rides on the preceding kanji
    )


def _is_hiragana(ch: str) -> bool:
    return 0x3041 <= ord(ch) <= 0x309F


def _is_katakana(ch: str) -> bool:
    cp = ord(ch)
    return 0x30A0 <= cp <= 0x30FF or 0x31F0 <= cp <= 0x31FF


def classify_script(surface: str) -> ScriptClass:
    """Script class of a surface string, a pure function of its code points."""
    if any(_is_kanji(c) for c in surface):
        return ScriptClass.kanji_bearing
    kana = [c for c in surface if _is_hiragana(c) or _is_katakana(c)]
    if kana:
        if all(_is_katakana(c) for c in kana):
            return ScriptClass.katakana
        return ScriptClass.hiragana
    return ScriptClass.latin_digit_other


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos_major: PosMajor
    pos_sub: str = ""
    conj_form: ConjForm = ConjForm.none
    script_class: ScriptClass = ScriptClass.latin_digit_other

    @staticmethod
    def make(surface: str, pos_major: PosMajor | str, *, lemma: str | None = None,
             pos_sub: str = "", conj_form: ConjForm | str = ConjForm.none) -> "Token":
        return Token(
            surface=surface,
            lemma=lemma if lemma is not None else surface,
            pos_major=PosMajor(pos_major),
            pos_sub=pos_sub,
            conj_form=ConjForm(conj_form),
            script_class=classify_script(surface),
        )


@dataclass
class Document:
    id: str
    sentences: list[list[Token]]
    raw_text: str = ""

    def all_tokens(self) -> Iterable[Token]:
        for sentence in self.sentences:
            yield from sentence


class LexiconError(Exception):
    pass


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    pos_major: PosMajor
    pos_sub: str = ""
    conj_form: ConjForm = ConjForm.none
    origin: Origin | None = None


class Lexicon:
    """Immutable surface-form dictionary; shareable across threads."""

    def __init__(self, entries: dict[str, LexEntry], version: int = 1):
        for surface in entries:
            if not surface:
                raise LexiconError("lexicon surface must be non-empty")
        self.entries = dict(entries)
        self.version = version
        self._max_len = max((len(s) for s in entries), default=0)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, surface: str) -> bool:
        return surface in self.entries

    def get(self, surface: str) -> LexEntry | None:
        return self.entries.get(surface)

    def lemma_set(self) -> list[str]:
        return sorted({e.lemma for e in self.entries.values()})

    @classmethod
    def from_obj(cls, obj: dict) -> "Lexicon":
        if not isinstance(obj, dict) or "entries" not in obj:
            raise LexiconError("lexicon file must be an object with an 'entries' list")
        entries: dict[str, LexEntry] = {}
        for raw in obj["entries"]:
            surface = raw.get("surface", "")
            if not surface:
                raise LexiconError("lexicon entry without surface")
            if surface in entries:
                raise LexiconError(f"duplicate lexicon surface: {surface}")
            try:
                entries[surface] = LexEntry(
                    lemma=raw.get("lemma", surface),
                    pos_major=PosMajor(raw["pos_major"]),
                    pos_sub=raw.get("pos_sub", ""),
                    conj_form=ConjForm(raw.get("conj_form", "none")),
                    origin=Origin(raw["origin"]) if raw.get("origin") else None,
                )
            except (KeyError, ValueError) as exc:
                raise LexiconError(f"bad lexicon entry {surface!r}: {exc}") from exc
        return cls(entries, version=obj.get("version", 1))

    @classmethod
    def load(cls, path: str | Path) -> "Lexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.from_obj(json.load(fh))


def load_bundled_lexicon() -> Lexicon:
    data = resources.files("sakubun.data").joinpath("lexicon.json").read_text("utf-8")
    return Lexicon.from_obj(json.loads(data))


def split_sentences(text: str) -> list[str]:
    """Split after 。！？ and newline; terminators stay with their sentence.

    Fragments that are pure whitespace are dropped, so the concatenation of
    the result reproduces the input's non-whitespace content exactly.
    """
    sentences: list[str] = []
    current: list[str] = []
    for ch in text:
        current.append(ch)
        if ch in SENTENCE_TERMINATORS:
            fragment = "".join(current).strip()
            if fragment:
                sentences.append(fragment)
            current = []
    fragment = "".join(current).strip()
    if fragment:
        sentences.append(fragment)
    return sentences


def _fallback_token(ch: str) -> Token:
    category = unicodedata.category(ch)
    pos = PosMajor.symbol if category[0] in ("P", "S", "Z", "C") else PosMajor.other
    return Token.make(ch, pos)


def tokenize(sentence: str, lex: Lexicon) -> list[Token]:
    """Greedy longest-match segmentation; unmatched characters pass through
    one at a time so token surfaces always concatenate back to the input."""
    tokens: list[Token] = []
    i = 0
    n = len(sentence)
    while i < n:
        longest = 0
        entry: LexEntry | None = None
        limit = min(lex._max_len, n - i)
        for length in range(limit, 0, -1):
            candidate = sentence[i:i + length]
            found = lex.get(candidate)
            if found is not None:
                longest = length
                entry = found
                break
        if entry is not None:
            surface = sentence[i:i + longest]
            tokens.append(Token(
                surface=surface,
                lemma=entry.lemma,
                pos_major=entry.pos_major,
                pos_sub=entry.pos_sub,
                conj_form=entry.conj_form,
                script_class=classify_script(surface),
            ))
            i += longest
        else:
            tokens.append(_fallback_token(sentence[i]))
            i += 1
    return tokens


def tokenize_document(doc_id: str, text: str, lex: Lexicon) -> Document:
    sentences = [tokenize(s, lex) for s in split_sentences(text)]
    return Document(id=doc_id, sentences=[s for s in sentences if s], raw_text=text)


class TsvError(Exception):
    pass


class BadColumnCount(TsvError):
    def __init__(self, line_no: int, got: int):
        super().__init__(f"line {line_no}: expected 6 tab-separated columns, got {got}")
        self.line_no = line_no
        self.got = got


class UnknownEnum(TsvError):
    def __init__(self, line_no: int, field_name: str, value: str):
        super().__init__(f"line {line_no}: unknown {field_name} value {value!r}")
        self.line_no = line_no
        self.field = field_name
        self.value = value


_TSV_COLUMNS = 6


def ingest_external(stream: bytes | str) -> list[Document]:
    """Parse analyzer output: one token per line as
    ``surface<TAB>lemma<TAB>pos_major<TAB>pos_sub<TAB>conj_form<TAB>script_class``,
    blank line = sentence boundary, ``#doc <id>`` starts a new document."""
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    documents: list[Document] = []
    sentences: list[list[Token]] = []
    current: list[Token] = []
    doc_id: str | None = None

    def flush_sentence() -> None:
        nonlocal current
        if current:
            sentences.append(current)
            current = []

    def flush_document() -> None:
        nonlocal sentences
        flush_sentence()
        if doc_id is not None or sentences:
            raw = "\n".join("".join(t.surface for t in s) for s in sentences)
            documents.append(Document(id=doc_id or "doc1", sentences=sentences, raw_text=raw))
        sentences = []

    for line_no, line in enumerate(stream.split("\n"), start=1):
        if line.startswith("#doc"):
            flush_document()
            doc_id = line[4:].strip() or "doc1"
            continue
        if not line.strip():
            flush_sentence()
            continue
        cols = line.split("\t")
        if len(cols) != _TSV_COLUMNS:
            raise BadColumnCount(line_no, len(cols))
        surface, lemma, pos_major, pos_sub, conj_form, script_class = cols
        try:
            pos = PosMajor(pos_major)
        except ValueError:
            raise UnknownEnum(line_no, "pos_major", pos_major) from None
        try:
            conj = ConjForm(conj_form)
        except ValueError:
            raise UnknownEnum(line_no, "conj_form", conj_form) from None
        try:
            script = ScriptClass(script_class)
        except ValueError:
            raise UnknownEnum(line_no, "script_class", script_class) from None
        current.append(Token(
            surface=surface,
            lemma=lemma or surface,
            pos_major=pos,
            pos_sub=pos_sub,
            conj_form=conj,
            script_class=script,
        ))
    flush_document()
    return documents


def export_tsv(documents: Iterable[Document]) -> str:
    """Inverse of :func:`ingest_external`; round-trips token sequences."""
    lines: list[str] = []
    for doc in documents:
        lines.append(f"#doc {doc.id}")
        for sentence in doc.sentences:
            for t in sentence:
                lines.append("\t".join([
                    t.surface, t.lemma, t.pos_major.value,
                    t.pos_sub, t.conj_form.value, t.script_class.value,
                ]))
            lines.append("")
    return "\n".join(lines)


def word_origin(token: Token, lex: Lexicon | None = None) -> Origin:
    """Lexicon origin when recorded, else a script heuristic:
    katakana -> loan, kanji-bearing -> sino, everything else -> native."""
    if lex is not None:
        entry = lex.get(token.surface)
        if entry is not None and entry.origin is not None:
            return entry.origin
    if token.script_class == ScriptClass.katakana:
        return Origin.loan
    if token.script_class == ScriptClass.kanji_bearing:
        return Origin.sino
    return Origin.native
