#!/usr/bin/env python3
"""Sanity-check the bundled data using the independent test oracles only:
every fixture sentence must tokenize without unknown (non-symbol) fallbacks,
every positive fixture must match its pattern, every negative must not.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

LEX = oracles.load_lexicon_table(ROOT / "src/sakubun/data/lexicon.json")


def check_sentence(sentence, where, problems):
    tokens = oracles.tokenize_oracle(sentence, LEX)
    for t in tokens:
        if t["surface"] not in LEX and t["pos_major"] != "symbol":
            problems.append(f"{where}: unknown token {t['surface']!r} in {sentence!r}")
    return tokens


def main():
    problems = []
    pattern_files = sorted((ROOT / "src/sakubun/data/patterns").glob("*.json"))
    n_patterns = 0
    for file in pattern_files:
        data = json.loads(file.read_text("utf-8"))
        for p in data["patterns"]:
            n_patterns += 1
            ast = oracles.parse_dsl_oracle(p["dsl"])
            for s in p["fixtures"]["positive"]:
                tokens = check_sentence(s, f"{p['id']} (+)", problems)
                hits = oracles.scan_document_oracle(ast, [tokens])
                if not hits:
                    problems.append(f"{p['id']}: positive fixture has no match: {s!r}")
            for s in p["fixtures"]["negative"]:
                tokens = check_sentence(s, f"{p['id']} (-)", problems)
                hits = oracles.scan_document_oracle(ast, [tokens])
                if hits:
                    problems.append(f"{p['id']}: negative fixture matches {hits}: {s!r}")

    for doc in sorted((ROOT / "tests/data/corpus12").glob("*.txt")):
        text = doc.read_text("utf-8")
        for sentence in oracles.split_sentences_oracle(text):
            check_sentence(sentence, doc.stem, problems)

    if problems:
        print("\n".join(problems))
        print(f"FAILED: {len(problems)} problems across {n_patterns} patterns")
        return 1
    print(f"OK: {n_patterns} patterns, all fixtures and corpus docs clean")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
