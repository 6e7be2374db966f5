#!/usr/bin/env python3
"""Regenerate the bundled lexicon, grammar pattern files, and the fixture
corpus. Run from the repo root: python tools/make_bundled_data.py
"""
from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "sakubun" / "data"
CORPUS = ROOT / "tests" / "data" / "corpus12"


def e(surface, pos, lemma=None, sub="", conj=None, origin=None):
    entry = {"surface": surface, "pos_major": pos}
    entry["lemma"] = lemma if lemma is not None else surface
    if sub:
        entry["pos_sub"] = sub
    if conj:
        entry["conj_form"] = conj
    if origin:
        entry["origin"] = origin
    return entry


def verb_set(lemma, forms):
    """forms: list of (surface, conj_form)."""
    return [e(s, "verb", lemma=lemma, conj=c) for s, c in forms]


LEXICON = []

# particles
for p, sub in [("が", "case"), ("を", "case"), ("に", "case"), ("で", "case"),
               ("へ", "case"), ("と", "case"), ("から", "case"), ("まで", "case"),
               ("の", "case"), ("は", "binding"), ("も", "binding"),
               ("か", "final"), ("ね", "final"), ("よ", "final"),
               ("ので", "conjunctive"), ("ばかり", "adverbial"),
               ("ながら", "conjunctive"), ("な", "adnominal"), ("ず", "negative")]:
    LEXICON.append(e(p, "particle", sub=sub))

# auxiliaries and fixed endings
for surface, conj, sub in [
    ("です", None, "polite"), ("でした", "ta", "polite"), ("だ", None, ""),
    ("だった", "ta", ""), ("ます", None, "polite"), ("ました", None, "polite"),
    ("ません", None, "polite"), ("ましょう", None, "polite"),
    ("たい", None, "desiderative"), ("ない", None, "negative"),
    ("なく", None, "negative"), ("なかった", "ta", "negative"),
    ("なければ", None, "conditional"), ("ならない", None, ""),
    ("でしょう", None, "conjectural"), ("かもしれない", None, "conjectural"),
    ("まい", None, "negative-volitional"), ("まいが", None, "negative-volitional"),
    ("んばかり", None, ""), ("ざる", None, "negative"), ("べく", None, ""),
    ("まじき", None, ""), ("いられない", None, ""), ("いかない", None, ""),
    ("得ない", None, ""), ("他ならない", None, ""),
]:
    LEXICON.append(e(surface, "auxiliary_verb", conj=conj, sub=sub))

# verbs: dictionary forms plus the conjugated surfaces the fixtures use
LEXICON += verb_set("来る", [("来る", "dictionary"), ("来", "negative_stem"),
                             ("来た", "ta"), ("来て", "te"), ("来よう", "volitional")])
LEXICON += verb_set("行く", [("行く", "dictionary"), ("行き", "masu_stem"),
                             ("行か", "negative_stem"), ("行った", "ta"),
                             ("行って", "te"), ("行こう", "volitional")])
LEXICON += verb_set("食べる", [("食べる", "dictionary"), ("食べ", "negative_stem"),
                               ("食べた", "ta"), ("食べて", "te")])
LEXICON += verb_set("読む", [("読む", "dictionary"), ("読み", "masu_stem"),
                             ("読んだ", "ta"), ("読んで", "te"), ("読める", "dictionary")])
LEXICON += verb_set("書く", [("書く", "dictionary"), ("書き", "masu_stem"),
                             ("書いた", "ta"), ("書いて", "te")])
LEXICON += verb_set("飲む", [("飲む", "dictionary"), ("飲み", "masu_stem"),
                             ("飲んだ", "ta"), ("飲んで", "te")])
LEXICON += verb_set("話す", [("話す", "dictionary"), ("話し", "masu_stem"),
                             ("話した", "ta"), ("話して", "te"), ("話せる", "dictionary")])
LEXICON += verb_set("聞く", [("聞く", "dictionary"), ("聞き", "masu_stem"),
                             ("聞か", "negative_stem"), ("聞いた", "ta"), ("聞いて", "te")])
LEXICON += verb_set("見る", [("見る", "dictionary"), ("見た", "ta"), ("見て", "te")])
LEXICON += verb_set("歩く", [("歩く", "dictionary"), ("歩き", "masu_stem"), ("歩いて", "te")])
LEXICON += verb_set("走る", [("走る", "dictionary"), ("走り", "masu_stem")])
LEXICON += verb_set("休む", [("休む", "dictionary"), ("休み", "masu_stem"), ("休んだ", "ta")])
LEXICON += verb_set("寝る", [("寝る", "dictionary"), ("寝た", "ta"), ("寝て", "te")])
LEXICON += verb_set("遊ぶ", [("遊ぶ", "dictionary"), ("遊び", "masu_stem"),
                             ("遊んだ", "ta"), ("遊んで", "te")])
LEXICON += verb_set("働く", [("働く", "dictionary"), ("働き", "masu_stem")])
LEXICON += verb_set("泳ぐ", [("泳ぐ", "dictionary"), ("泳ぎ", "masu_stem")])
LEXICON += verb_set("言う", [("言う", "dictionary"), ("言い", "masu_stem"),
                             ("言った", "ta"), ("言おう", "volitional")])
LEXICON += verb_set("思う", [("思う", "dictionary"), ("思った", "ta")])
LEXICON += verb_set("使う", [("使う", "dictionary")])
LEXICON += verb_set("作る", [("作る", "dictionary"), ("作り", "masu_stem"), ("作った", "ta")])
LEXICON += verb_set("撮る", [("撮る", "dictionary"), ("撮ら", "negative_stem"),
                             ("撮った", "ta"), ("撮って", "te")])
LEXICON += verb_set("直す", [("直す", "dictionary"), ("直し", "masu_stem")])
LEXICON += verb_set("知る", [("知る", "dictionary"), ("知り", "masu_stem")])
LEXICON += verb_set("続ける", [("続ける", "dictionary"), ("続け", "negative_stem")])
LEXICON += verb_set("決める", [("決める", "dictionary")])
LEXICON += verb_set("考える", [("考える", "dictionary"), ("考えた", "ta")])
LEXICON += verb_set("変える", [("変える", "dictionary"), ("変え", "negative_stem")])
LEXICON += verb_set("認める", [("認める", "dictionary"), ("認め", "negative_stem")])
LEXICON += verb_set("許す", [("許す", "dictionary")])
LEXICON += verb_set("破る", [("破る", "dictionary")])
LEXICON += verb_set("送る", [("送る", "dictionary")])
LEXICON += verb_set("調べる", [("調べる", "dictionary"), ("調べた", "ta")])
LEXICON += verb_set("頼む", [("頼む", "dictionary"), ("頼んだ", "ta")])
LEXICON += verb_set("泣く", [("泣く", "dictionary"), ("泣か", "negative_stem"), ("泣いた", "ta")])
LEXICON += verb_set("笑う", [("笑う", "dictionary"), ("笑わ", "negative_stem")])
LEXICON += verb_set("買う", [("買う", "dictionary"), ("買わ", "negative_stem"), ("買った", "ta")])
LEXICON += verb_set("待つ", [("待つ", "dictionary"), ("待った", "ta")])
LEXICON += verb_set("する", [("する", "dictionary"), ("し", "negative_stem"),
                             ("した", "ta"), ("して", "te"), ("しよう", "volitional")])
LEXICON += verb_set("なる", [("なる", "dictionary"), ("なった", "ta")])
LEXICON += verb_set("ある", [("ある", "dictionary"), ("あります", "other"),
                             ("ありません", "other"), ("あった", "ta")])
LEXICON += verb_set("いる", [("いる", "dictionary"), ("います", "other")])
LEXICON += verb_set("やる", [("やる", "dictionary"), ("やろう", "volitional")])
LEXICON += verb_set("できる", [("できる", "dictionary"), ("できた", "ta")])
LEXICON += verb_set("降る", [("降る", "dictionary"), ("降ろう", "volitional"), ("降った", "ta")])
LEXICON += verb_set("着く", [("着く", "dictionary"), ("着いた", "ta")])
LEXICON += verb_set("忘れる", [("忘れる", "dictionary"), ("忘れ", "negative_stem"),
                               ("忘れた", "ta")])
LEXICON += verb_set("溢れる", [("溢れる", "dictionary"), ("溢れ", "negative_stem")])
LEXICON += verb_set("帰る", [("帰る", "dictionary"), ("帰って", "te")])
LEXICON += verb_set("急ぐ", [("急ぐ", "dictionary")])
LEXICON += verb_set("すぎる", [("すぎる", "dictionary")])
LEXICON.append(e("ください", "verb", lemma="くださる", sub="auxiliary", conj="other"))

# adjectives
for adj in ["いい", "高い", "若い", "楽しい", "面白い", "美しい", "新しい",
            "難しい", "おいしい", "長い", "大きい", "まじめ", "大切"]:
    LEXICON.append(e(adj, "adjective"))

# adverbs
for adv in ["ゆっくり", "すぐ", "もう", "よく", "とても", "早く", "一番"]:
    LEXICON.append(e(adv, "adverb"))

# conjunctions
for c in ["そして", "しかし", "だから", "でも", "また", "それから"]:
    LEXICON.append(e(c, "conjunction"))

# quantifiers
for q in ["一つ", "二つ", "三つ", "一人", "二人"]:
    LEXICON.append(e(q, "quantifier"))

# nouns (explicit loan origin where the script heuristic would miss is not
# needed here: katakana nouns are classified loan by the heuristic)
NOUNS = [
    "私", "彼", "彼女", "君", "学生", "先生", "友達", "家族", "両親", "弟", "兄",
    "人", "子供", "みんな", "自分", "誰", "何", "これ", "それ", "あれ", "ここ",
    "そこ", "どこ", "名前", "写真", "音楽", "映画", "本", "手紙", "水", "お茶",
    "ご飯", "寿司", "肉", "野菜", "魚", "雨", "山", "海", "空", "花", "犬", "猫",
    "天気", "晴れ", "朝", "夜", "昼", "今日", "明日", "毎日", "週末", "夏", "冬",
    "パーティー", "バス", "電車", "駅", "時間", "通り", "時計", "机", "部屋",
    "家", "店", "学校", "公園", "図書館", "病院", "日本", "日本語", "英語",
    "中国語", "漢字", "言葉", "話", "宿題", "勉強", "旅行", "留学", "合格",
    "試験", "確認", "心配", "説明", "成功", "努力", "結果", "健康", "計画",
    "約束", "事実", "真実", "状況", "住所", "性格", "準備", "運動", "散歩",
    "練習", "買い物", "試合", "メモ", "気", "心", "体", "声", "意味", "理由",
    "方法", "目的", "拍手", "行為", "態度", "愛情", "他", "違い", "本当",
    "こと", "もの", "ほう",
    "よう", "ため", "うち", "はず", "わけ", "上", "下", "中", "前", "後",
    "一緒", "文化", "歴史", "自然", "社会",
    # digression-theme vocabulary (kept out of the on-theme corpus documents)
    "数学", "数字", "問題", "公式", "計算", "定理", "証明", "図形", "三角形",
    "円", "面積", "角度",
]
for n in NOUNS:
    LEXICON.append(e(n, "noun"))

# demonstrative adnominals
for d in ["この", "その", "あの"]:
    LEXICON.append(e(d, "other", sub="adnominal"))


# --- grammar patterns -------------------------------------------------------

def pattern(pid, name, level, description, dsl, positive, negative):
    return {
        "id": pid, "display_name": name, "level": level,
        "description": description, "dsl": dsl,
        "fixtures": {"positive": positive, "negative": negative},
    }


PATTERNS = {
    "N5": [
        pattern("〜てください", "〜てください", "N5",
                "polite request: te-form + ください",
                'sub(verb_te) lit("ください")',
                ["名前を書いてください。", "ゆっくり話してください。"],
                ["私は学生です。", "本を読みます。"]),
        pattern("〜ましょう", "〜ましょう", "N5",
                "volitional suggestion: masu-stem + ましょう",
                'form(masu_stem) lit("ましょう")',
                ["一緒に行きましょう。", "公園で遊びましょう。"],
                ["学校に行きます。", "彼は来ました。"]),
        pattern("〜たい", "〜たい", "N5",
                "first-person desire: masu-stem + たい",
                'form(masu_stem) lit("たい")',
                ["水を飲みたい。", "日本へ行きたい。"],
                ["水を飲んだ。", "高い山です。"]),
        pattern("〜ながら", "〜ながら", "N5",
                "simultaneous actions: masu-stem + ながら",
                'form(masu_stem) lit("ながら")',
                ["音楽を聞きながら勉強する。", "歩きながら話す。"],
                ["歩いて学校に行く。", "音楽を聞く。"]),
        pattern("〜ないでください", "〜ないでください", "N5",
                "negative request: negative stem + ないでください",
                'form(negative_stem) lit("ない") lit("で") lit("ください")',
                ["ここで写真を撮らないでください。", "行かないでください。"],
                ["写真を撮ってください。", "ここで写真を撮る。"]),
        pattern("〜があります", "〜があります", "N5",
                "existence of inanimate things: noun + があります",
                'pos(noun) lit("が") lit("あります")',
                ["時間があります。", "公園に花があります。"],
                ["時間がない。", "これは本です。"]),
        pattern("〜でしょう", "〜でしょう", "N5",
                "conjecture: plain form + でしょう",
                '(pos(noun) | pos(verb) | pos(adjective)) lit("でしょう")',
                ["明日は雨でしょう。", "彼は来るでしょう。"],
                ["明日は雨だ。", "でしょう。"]),
    ],
    "N4": [
        pattern("〜たことがある", "〜たことがある", "N4",
                "past experience: ta-form + ことがある",
                'sub(verb_ta) lit("こと") lit("が") lit("ある")',
                ["日本へ行ったことがある。", "寿司を食べたことがある。"],
                ["日本へ行くことがある。", "日本へ行った。"]),
        pattern("〜たほうがいい", "〜たほうがいい", "N4",
                "advice: ta-form + ほうがいい",
                'sub(verb_ta) lit("ほう") lit("が") lit("いい")',
                ["早く寝たほうがいい。", "休んだほうがいい。"],
                ["早く寝る。", "ほうがいい。"]),
        pattern("〜なければならない", "〜なければならない", "N4",
                "obligation: negative stem + なければならない",
                'form(negative_stem) lit("なければ") lit("ならない")',
                ["もう行かなければならない。", "宿題をしなければならない。"],
                ["行かないでください。", "宿題をする。"]),
        pattern("〜かもしれない", "〜かもしれない", "N4",
                "possibility: plain form + かもしれない",
                '(pos(noun) | pos(verb) | pos(adjective)) lit("かもしれない")',
                ["明日は雨かもしれない。", "これは本当かもしれない。"],
                ["明日は雨です。", "かもしれない。"]),
        pattern("〜すぎる", "〜すぎる", "N4",
                "excess: masu-stem + すぎる",
                'form(masu_stem) lit("すぎる")',
                ["彼は飲みすぎる。", "君は働きすぎる。"],
                ["彼は飲む。", "高い本です。"]),
        pattern("〜ことができる", "〜ことができる", "N4",
                "ability: dictionary form + ことができる",
                'form(dictionary) lit("こと") lit("が") lit("できる")',
                ["日本語を話すことができる。", "漢字を書くことができる。"],
                ["日本語を話す。", "書いたことがある。"]),
        pattern("〜てもいい", "〜てもいい", "N4",
                "permission: te-form + もいい",
                'sub(verb_te) lit("も") lit("いい")',
                ["ここで食べてもいい。", "もう帰ってもいい。"],
                ["ここで食べてください。", "もう帰る。"]),
    ],
    "N3": [
        pattern("〜ようになる", "〜ようになる", "N3",
                "change of state/ability: dictionary form + ようになる",
                'form(dictionary) lit("よう") lit("に") (lit("なる") | lit("なった"))',
                ["日本語が話せるようになる。", "漢字が読めるようになった。"],
                ["日本語を話す。", "読むようだ。"]),
        pattern("〜ことにする", "〜ことにする", "N3",
                "decision: dictionary form + ことにする",
                'form(dictionary) lit("こと") lit("に") (lit("する") | lit("した"))',
                ["明日から走ることにする。", "留学することにする。"],
                ["明日から走る。", "留学したことがある。"]),
        pattern("〜てばかりいる", "〜てばかりいる", "N3",
                "habitual excess: te-form + ばかりいる",
                'sub(verb_te) lit("ばかり") lit("いる")',
                ["弟は遊んでばかりいる。", "彼は寝てばかりいる。"],
                ["弟は遊んでいる。", "彼は寝る。"]),
        pattern("〜うちに", "〜うちに", "N3",
                "while a state holds: adjective or ~ない + うちに",
                '(pos(adjective) | (form(negative_stem) lit("ない"))) lit("うち") lit("に")',
                ["忘れないうちにメモする。", "若いうちに旅行する。"],
                ["朝のうちに行く。", "忘れた。"]),
        pattern("〜たばかり", "〜たばかり", "N3",
                "immediate past: ta-form + ばかり",
                'sub(verb_ta) lit("ばかり")',
                ["日本に着いたばかりです。", "ご飯を食べたばかりだ。"],
                ["日本に着いた。", "彼は遊んでばかりいる。"]),
        pattern("〜はずだ", "〜はずだ", "N3",
                "expectation: dictionary form + はずだ",
                'form(dictionary) lit("はず") lit("だ")?',
                ["彼は来るはずだ。", "バスはすぐ来るはずです。"],
                ["彼は来る。", "はずだ。"]),
        pattern("〜ために", "〜ために", "N3",
                "purpose/benefit: dictionary form or noun+の + ために",
                '(form(dictionary) | (pos(noun) lit("の"))) lit("ため") lit("に")',
                ["合格するために勉強する。", "家族のために働く。"],
                ["合格する。", "ためになる本です。"]),
    ],
    "N2": [
        pattern("〜ことはない", "〜ことはない", "N2",
                "no need to: dictionary form + ことはない",
                'form(dictionary) lit("こと") lit("は") lit("ない")',
                ["心配することはない。", "急ぐことはない。"],
                ["心配する。", "行ったことがある。"]),
        pattern("〜に違いない", "〜に違いない", "N2",
                "certainty: plain form/noun + に違いない",
                '(pos(noun) | form(dictionary) | form(ta)) lit("に") lit("違い") lit("ない")',
                ["彼は学生に違いない。", "雨が降ったに違いない。"],
                ["彼は学生です。", "違いない。"]),
        pattern("〜ばかりでなく", "〜ばかりでなく", "N2",
                "not only ... but also",
                'lit("ばかり") lit("で") lit("なく")',
                ["彼は英語ばかりでなく中国語も話せる。", "肉ばかりでなく野菜も食べる。"],
                ["彼は英語を話せる。", "弟は遊んでばかりいる。"]),
        pattern("〜た上で", "〜た上で", "N2",
                "after doing, on the basis of: ta-form + 上で",
                'sub(verb_ta) lit("上") lit("で")',
                ["よく考えた上で決める。", "確認した上で送る。"],
                ["よく考える。", "机の上に本がある。"]),
        pattern("〜ようがない", "〜ようがない", "N2",
                "no way to do: masu-stem + ようがない",
                'form(masu_stem) lit("よう") lit("が") lit("ない")',
                ["この時計は直しようがない。", "彼の住所は知りようがない。"],
                ["時計を直す。", "彼が来ようが来まいが、気にしない。"]),
        pattern("〜ざるを得ない", "〜ざるを得ない", "N2",
                "cannot avoid doing: negative stem + ざるを得ない",
                'form(negative_stem) lit("ざる") lit("を") lit("得ない")',
                ["事実を認めざるを得ない。", "計画を変えざるを得ない。"],
                ["事実を認める。", "行かなければならない。"]),
        pattern("〜わけにはいかない", "〜わけにはいかない", "N2",
                "cannot afford to: dictionary form + わけにはいかない",
                'form(dictionary) lit("わけ") lit("に") lit("は") lit("いかない")',
                ["今日は休むわけにはいかない。", "約束を破るわけにはいかない。"],
                ["今日は休む。", "わけがない。"]),
    ],
    "N1": [
        pattern("〜う(よう)が、〜まいが", "〜う(よう)が、〜まいが", "N1",
                "whether or not: volitional + が + verb + まいが",
                'form(volitional) lit("が") any lit("まいが")',
                ["彼が来ようが来まいが、パーティーは時間通りにやる。",
                 "雨が降ろうが降るまいが、試合はある。"],
                ["彼が来ようが、私は行く。", "彼は来まいと思う。"]),
        pattern("〜う(よう)が", "〜う(よう)が", "N1",
                "no matter (concessive volitional): volitional + が",
                'form(volitional) lit("が")',
                ["雨が降ろうが、試合を続ける。", "誰が何を言おうが気にしない。"],
                ["雨が降るが、行く。", "雨だ。"]),
        pattern("〜んばかり", "〜んばかり", "N1",
                "on the verge of: negative stem + んばかり",
                'form(negative_stem) lit("んばかり")',
                ["泣かんばかりに頼んだ。", "溢れんばかりの拍手だった。"],
                ["泣いた。", "弟は遊んでばかりいる。"]),
        pattern("〜ずにはいられない", "〜ずにはいられない", "N1",
                "cannot help doing: negative stem + ずにはいられない",
                'form(negative_stem) lit("ず") lit("に") lit("は") lit("いられない")',
                ["笑わずにはいられない。", "買わずにはいられない。"],
                ["笑わない。", "買い物をする。"]),
        pattern("〜に他ならない", "〜に他ならない", "N1",
                "nothing other than: noun + に他ならない",
                'pos(noun) lit("に") lit("他ならない")',
                ["成功は努力の結果に他ならない。", "それは愛情に他ならない。"],
                ["それは努力の結果だ。", "他の人に聞く。"]),
        pattern("〜べく", "〜べく", "N1",
                "in order to (formal): dictionary form + べく",
                'form(dictionary) lit("べく")',
                ["試験に合格するべく勉強した。", "真実を知るべく本を読んだ。"],
                ["合格するために勉強した。", "勉強した。"]),
        pattern("〜まじき", "〜まじき", "N1",
                "unbecoming of: dictionary form + まじき",
                'form(dictionary) lit("まじき")',
                ["それは許すまじき行為だ。", "あるまじき態度だった。"],
                ["それを許す。", "まじめな態度だ。"]),
    ],
}


# --- fixture corpus (theme: 週末のパーティー; doc12 digresses into math) ----

CORPUS_DOCS = {
    "doc01": ("彼が来ようが来まいが、パーティーは時間通りにやる。"
              "友達が何を言おうが、私は計画を変えるわけにはいかない。"
              "成功は毎日の努力の結果に他ならない。"
              "約束を破るわけにはいかないので、朝から準備をした。"),
    "doc02": ("雨が降ろうが降るまいが、私は毎日走ることにする。"
              "健康のためには運動を続けざるを得ない。"
              "先生が何を言おうが、自分の計画を変えることはない。"
              "それは努力に他ならない。"),
    "doc03": ("試験に合格するべく、彼女は毎日勉強した。"
              "人の話を聞かずにはいられない性格だ。"
              "遊んでばかりいる弟も、真実を知るべく本を読んだ。"
              "それは愛情に他ならない。"),
    "doc04": ("私は日本語を話すことができる。"
              "漢字も読めるようになった。"
              "日本へ行ったことがある。"
              "寿司を食べたことがある。"),
    "doc05": ("音楽を聞きながら宿題をした。"
              "早く寝たほうがいいと思う。"
              "明日は雨かもしれないので、家で映画を見ることにする。"),
    "doc06": ("日本に着いたばかりですが、友達ができた。"
              "忘れないうちに家族に手紙を書くことにした。"
              "バスはすぐ来るはずだ。"),
    "doc07": ("公園で一緒に遊びましょう。"
              "お茶を飲みたい。"
              "時間があります。"),
    "doc08": ("名前を書いてください。"
              "ここで写真を撮らないでください。"
              "明日は晴れでしょう。"),
    "doc09": ("水を飲みましょう。"
              "犬と歩きながら話した。"
              "花があります。"),
    "doc10": ("私は学生です。"
              "今日は晴れです。"
              "本を読みました。"),
    "doc11": ("彼は先生です。"
              "学校は大きいです。"
              "毎日学校へ行きます。"),
    "doc12": ("数学の問題を計算した。"
              "三角形の面積の公式を使う。"
              "定理の証明は難しいが、面白い。"
              "数字と図形と角度を調べた。"
              "円の面積も計算した。"
              "図形の角度を数字で計算する。"
              "三角形と円の公式を調べた。"
              "定理の証明を数学で使う。"
              "計算と証明の問題は面白い。"),
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "patterns").mkdir(exist_ok=True)
    CORPUS.mkdir(parents=True, exist_ok=True)

    surfaces = [entry["surface"] for entry in LEXICON]
    assert len(surfaces) == len(set(surfaces)), "duplicate lexicon surfaces"

    lexicon = {"version": 1, "entries": LEXICON}
    with open(DATA / "lexicon.json", "w", encoding="utf-8") as fh:
        json.dump(lexicon, fh, ensure_ascii=False, indent=1)
        fh.write("\n")

    for level, patterns in PATTERNS.items():
        out = {"version": 1, "patterns": patterns}
        with open(DATA / "patterns" / f"{level.lower()}.json", "w", encoding="utf-8") as fh:
            json.dump(out, fh, ensure_ascii=False, indent=1)
            fh.write("\n")

    for doc_id, text in CORPUS_DOCS.items():
        # one sentence per line for readability; newline is a terminator too
        sentences = text.replace("。", "。\n").strip().splitlines()
        (CORPUS / f"{doc_id}.txt").write_text("\n".join(sentences) + "\n", "utf-8")

    total = sum(len(p) for p in PATTERNS.values())
    print(f"wrote {len(LEXICON)} lexicon entries, {total} patterns, "
          f"{len(CORPUS_DOCS)} corpus docs")


if __name__ == "__main__":
    main()
