#!/usr/bin/env python3
"""Grammar recognition and live hints over the bundled N5..N1 registry.

Shows the per-level JSON report for one composition, then simulates a
learner typing the same sentence and prints the hints the writing pad
would surface after each keystroke chunk.
"""
import json

from sakubun.analysis import hints_payload
from sakubun.grammar import grammar_feature_report, load_bundled_registry, match_document
from sakubun.tokenize import load_bundled_lexicon, tokenize_document

lexicon = load_bundled_lexicon()
registry = load_bundled_registry()

text = "彼が来ようが来まいが、パーティーは時間通りにやる。忘れないうちに家族に手紙を書くことにした。"
doc = tokenize_document("demo", text, lexicon)

matches = match_document(registry, doc)
print("matches:")
for m in matches:
    tokens = doc.sentences[m.sentence_index]
    span = "".join(t.surface for t in tokens[m.token_span[0]:m.token_span[1]])
    print(f"  [{m.level}] {m.pattern_id}  =  {span}")

report = grammar_feature_report(matches, registry)
print("\nper-level report (counts and unique patterns):")
print(json.dumps(report["totals"], ensure_ascii=False, indent=2))

print("\nlive hints while typing 「彼が来ようが来…」:")
for partial in ["彼が", "彼が来ようが", "彼が来ようが来"]:
    hints = hints_payload(partial, registry, lexicon)["hints"]
    top = ", ".join(f"{h['display_name']} (expect: {' '.join(h['expected'])})"
                    for h in hints[:3]) or "none"
    print(f"  {partial!r:24} -> {top}")
