"""Single-document analysis payloads shared by the CLI and the HTTP
service (the JSON shapes pinned by api-schema.json)."""
from __future__ import annotations

from .features import sentence_features, word_features
from .grammar import Registry, grammar_feature_report, hints, match_document
from .tokenize import Document, Lexicon, split_sentences, tokenize


def analyze_payload(doc: Document, registry: Registry, lex: Lexicon | None = None,
                    *, step_budget: int | None = None) -> dict:
    matches = match_document(registry, doc, step_budget=step_budget)
    report = grammar_feature_report(matches, registry)
    word_f = word_features(doc, lex)
    sent_f = sentence_features(doc)
    return {
        "doc_id": doc.id,
        "word_features": word_f.as_dict(),
        "sentence_features": sent_f.as_dict(),
        "grammar_report": report,
        "matches": [
            {
                "pattern_id": m.pattern_id,
                "display_name": registry.pattern(m.pattern_id).display_name,
                "level": m.level,
                "sentence_index": m.sentence_index,
                "token_span": list(m.token_span),
                "sentence_tokens": [t.surface for t in doc.sentences[m.sentence_index]],
            }
            for m in matches
        ],
    }


def hints_payload(text: str, registry: Registry, lex: Lexicon,
                  *, step_budget: int | None = None) -> dict:
    """Hints for the sentence currently being written (the trailing one)."""
    sentences = split_sentences(text)
    if not sentences:
        return {"hints": []}
    tokens = tokenize(sentences[-1], lex)
    found = hints(registry, tokens, step_budget=step_budget)
    return {
        "hints": [
            {
                "pattern_id": h.pattern_id,
                "display_name": h.display_name,
                "level": h.level,
                "consumed": h.consumed,
                "expected": list(h.expected),
            }
            for h in found
        ],
    }
