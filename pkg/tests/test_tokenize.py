"""Sentence splitting, greedy segmentation, script classes, TSV round-trip."""
import random

import pytest

from sakubun.tokenize import (
    BadColumnCount,
    ConjForm,
    Lexicon,
    LexiconError,
    PosMajor,
    ScriptClass,
    Token,
    UnknownEnum,
    classify_script,
    export_tsv,
    ingest_external,
    load_bundled_lexicon,
    split_sentences,
    tokenize,
    tokenize_document,
)

import oracles

LEX = load_bundled_lexicon()


class TestSplitSentences:
    def test_basic(self):
        assert split_sentences("今日は晴れ。明日は雨。") == ["今日は晴れ。", "明日は雨。"]

    def test_empty(self):
        assert split_sentences("") == []

    def test_terminators_and_newlines_against_scan_oracle(self):
        texts = [
            "それは本当！か？どうか\nわからない。\n",
            "一つ！二つ！三つ！",
            "終わりなし",
            "。。！\n\n？",
            "改行だけ\nの文\n",
        ]
        for text in texts:
            assert split_sentences(text) == oracles.split_sentences_oracle(text), text

    def test_non_whitespace_content_preserved(self):
        rng = random.Random(5)
        alphabet = "今日は晴れ雨。！？\n 学生です"
        for _ in range(50):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 60)))
            joined = "".join(split_sentences(text))
            assert "".join(joined.split()) == "".join(text.split())


class TestTokenize:
    def test_three_token_example(self):
        tokens = tokenize("彼が来よう", LEX)
        assert [t.surface for t in tokens] == ["彼", "が", "来よう"]
        assert tokens[2].lemma == "来る"
        assert tokens[2].conj_form == ConjForm.volitional

    def test_single_lexicon_word(self):
        tokens = tokenize("パーティー", LEX)
        assert len(tokens) == 1
        assert tokens[0].lemma == "パーティー"
        assert tokens[0].script_class == ScriptClass.katakana

    def test_unknown_text_falls_back_per_character(self):
        sentence = "ゑゐ≠"
        tokens = tokenize(sentence, LEX)
        assert "".join(t.surface for t in tokens) == sentence
        assert len(tokens) == 3
        assert tokens[2].pos_major == PosMajor.symbol

    def test_concatenation_invariant(self):
        sentences = [
            "彼が来ようが来まいが、パーティーは時間通りにやる。",
            "名前を書いてください。",
            "abc 123 日本語!",
        ]
        for s in sentences:
            assert "".join(t.surface for t in tokenize(s, LEX)) == s

    def test_longest_match_no_shorter_prefix_chosen(self):
        # oracle re-scan: no token is a proper prefix of a longer lexicon
        # surface that also matches at the same position
        surfaces = set(LEX.entries)
        for sentence in ["彼が来ようが来まいが、パーティーは時間通りにやる。",
                         "成功は努力の結果に他ならない。",
                         "忘れないうちに家族に手紙を書くことにした。"]:
            pos = 0
            for token in tokenize(sentence, LEX):
                longer = [s for s in surfaces
                          if len(s) > len(token.surface) and sentence.startswith(s, pos)]
                assert not longer, (token.surface, longer)
                pos += len(token.surface)

    def test_matches_oracle_tokenizer_on_corpus(self, tmp_path):
        table = oracles.load_lexicon_table("src/sakubun/data/lexicon.json")
        for text in ["彼が来ようが来まいが、パーティーは時間通りにやる。",
                     "泣かんばかりに頼んだ。", "笑わずにはいられない。"]:
            mine = [t.surface for t in tokenize(text, LEX)]
            theirs = [t["surface"] for t in oracles.tokenize_oracle(text, table)]
            assert mine == theirs


class TestScriptClass:
    @pytest.mark.parametrize("surface,expected", [
        ("学生", ScriptClass.kanji_bearing),
        ("来よう", ScriptClass.kanji_bearing),
        ("ください", ScriptClass.hiragana),
        ("パーティー", ScriptClass.katakana),
        ("ペンです", ScriptClass.hiragana),  # mixed kana -> not pure katakana
        ("abc123", ScriptClass.latin_digit_other),
        ("人々", ScriptClass.kanji_bearing),
    ])
    def test_classification(self, surface, expected):
        assert classify_script(surface) == expected


class TestLexicon:
    def test_bundled_size_and_validation(self):
        assert len(LEX) >= 300
        with pytest.raises(LexiconError):
            Lexicon.from_obj({"entries": [{"surface": "", "pos_major": "noun"}]})
        with pytest.raises(LexiconError):
            Lexicon.from_obj({"entries": [
                {"surface": "x", "pos_major": "noun"},
                {"surface": "x", "pos_major": "verb"},
            ]})

    def test_unknown_pos_rejected(self):
        with pytest.raises(LexiconError):
            Lexicon.from_obj({"entries": [{"surface": "x", "pos_major": "nounn"}]})


class TestTsv:
    def test_two_sentences(self):
        stream = (
            "#doc d1\n"
            "彼\t彼\tnoun\t\tnone\tkanji_bearing\n"
            "が\tが\tparticle\tcase\tnone\thiragana\n"
            "\n"
            "来た\t来る\tverb\t\tta\tkanji_bearing\n"
        )
        docs = ingest_external(stream)
        assert len(docs) == 1
        assert [len(s) for s in docs[0].sentences] == [2, 1]
        assert docs[0].id == "d1"

    def test_bad_column_count(self):
        with pytest.raises(BadColumnCount) as err:
            ingest_external("a\tb\tnoun\t\tnone\n")
        assert err.value.line_no == 1

    def test_unknown_enum(self):
        with pytest.raises(UnknownEnum) as err:
            ingest_external("a\ta\tnounn\t\tnone\thiragana\n")
        assert err.value.field == "pos_major"

    def test_round_trip(self):
        doc = tokenize_document("doc9", "彼が来ようが来まいが、パーティーは時間通りにやる。水を飲みたい。", LEX)
        back = ingest_external(export_tsv([doc]))
        assert len(back) == 1
        assert back[0].sentences == doc.sentences
        assert back[0].id == "doc9"

    def test_multiple_documents(self):
        doc_a = tokenize_document("a", "私は学生です。", LEX)
        doc_b = tokenize_document("b", "今日は晴れです。", LEX)
        back = ingest_external(export_tsv([doc_a, doc_b]))
        assert [d.id for d in back] == ["a", "b"]
        assert back[0].sentences == doc_a.sentences
        assert back[1].sentences == doc_b.sentences
