"""Independent reference implementations used as test oracles.

Everything here is deliberately written the slow, obvious way (pure Python
loops, exhaustive enumeration, arbitrary-precision math) and stays
independent of the package's fast paths. Golden files are produced by
composing these oracles, never by the code under test.
"""
from __future__ import annotations

import json
import math
import re

# ---------------------------------------------------------------------------
# Automaton oracle: exhaustive path enumeration over the JSON description.
# ---------------------------------------------------------------------------

def _oracle_hook(name, ctx, token):
    """Reference semantics of the built-in hook registry."""
    if name == "push":
        ctx.setdefault("stack", []).append(token["surface"] if token else "")
        return True
    if name == "pop":
        stack = ctx.setdefault("stack", [])
        if not stack:
            return False
        stack.pop()
        return True
    if name == "counter-increment":
        ctx["counter"] = ctx.get("counter", 0) + 1
        return True
    if name == "counter-guard":
        if ctx.get("counter", 0) <= 0:
            return False
        ctx["counter"] = ctx["counter"] - 1
        return True
    if name == "flag-set":
        ctx["flag"] = True
        return True
    if name == "flag-guard":
        return bool(ctx.get("flag", False))
    raise KeyError(name)


def _tok_field(token, kind):
    return {
        "literal": token["surface"],
        "lemma": token["lemma"],
        "pos_major": token["pos_major"],
        "pos_sub": token["pos_sub"],
        "conj_form": token["conj_form"],
    }[kind]


def _pred_accepts(pred, token):
    if pred["kind"] == "any":
        return True
    return _tok_field(token, pred["kind"]) == pred.get("arg")


def _copy_ctx(ctx):
    return {k: (list(v) if isinstance(v, list) else v) for k, v in ctx.items()}


def enumerate_accepting_lengths(spec, tokens, start):
    """All consumed lengths of root-to-final paths from ``start``.

    ``spec`` is the serialized automaton object; ``tokens`` are dicts with
    surface/lemma/pos_major/pos_sub/conj_form keys. Depth is naturally
    capped at the input length because every edge consumes a token.
    """
    nodes = {n["id"]: n for n in spec["nodes"]}
    out = {nid: [] for nid in nodes}
    for edge in spec["edges"]:
        out[edge["from"]].append(edge)
    lengths = []

    def walk(node_id, pos, ctx):
        if nodes[node_id].get("final") and pos - start >= 1:
            lengths.append(pos - start)
        if pos >= len(tokens):
            return
        for edge in out[node_id]:
            if not _pred_accepts(edge["pred"], tokens[pos]):
                continue
            branch = _copy_ctx(ctx)
            if "before" in edge and not _oracle_hook(edge["before"], branch, tokens[pos]):
                continue
            if "after" in edge:
                _oracle_hook(edge["after"], branch, tokens[pos])
            target = nodes[edge["to"]]
            if target.get("action"):
                _oracle_hook(target["action"], branch, tokens[pos])
            walk(edge["to"], pos + 1, branch)

    ctx = {}
    start_node = nodes[spec["start"]]
    if start_node.get("action"):
        _oracle_hook(start_node["action"], ctx, None)
    walk(spec["start"], start, ctx)
    return lengths


def longest_accepting_length(spec, tokens, start):
    lengths = enumerate_accepting_lengths(spec, tokens, start)
    return max(lengths) if lengths else None


# ---------------------------------------------------------------------------
# Sentence splitting oracle: brute scan for terminator code points.
# ---------------------------------------------------------------------------

def split_sentences_oracle(text):
    pieces = re.findall(r"[^。！？\n]*[。！？\n]|[^。！？\n]+$", text)
    return [p.strip() for p in pieces if p.strip()]


# ---------------------------------------------------------------------------
# Tokenizer oracle: plain dict scan, longest surface first.
# ---------------------------------------------------------------------------

def load_lexicon_table(path):
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    table = {}
    for entry in raw["entries"]:
        table[entry["surface"]] = {
            "lemma": entry.get("lemma", entry["surface"]),
            "pos_major": entry["pos_major"],
            "pos_sub": entry.get("pos_sub", ""),
            "conj_form": entry.get("conj_form", "none"),
            "origin": entry.get("origin"),
        }
    return table


def classify_script_oracle(surface):
    def kanji(c):
        o = ord(c)
        return 0x4E00 <= o <= 0x9FFF or 0x3400 <= o <= 0x4DBF or 0xF900 <= o <= 0xFAFF or o == 0x3005

    def hira(c):
        return 0x3041 <= ord(c) <= 0x309F

    def kata(c):
        o = ord(c)
        return 0x30A0 <= o <= 0x30FF or 0x31F0 <= o <= 0x31FF

    if any(kanji(c) for c in surface):
        return "kanji_bearing"
    kana = [c for c in surface if hira(c) or kata(c)]
    if kana:
        return "katakana" if all(kata(c) for c in kana) else "hiragana"
    return "latin_digit_other"


_SYMBOL_RE = re.compile(r"[\s!-/:-@\[-`{-~、。！？「」『』（）・〜ー…：；，．]")


def tokenize_oracle(sentence, table):
    """Greedy longest-match over the raw lexicon table; unknown chars pass
    through as symbol/other tokens (mirrors the documented contract, not the
    package code)."""
    import unicodedata

    tokens = []
    i = 0
    while i < len(sentence):
        match = None
        for j in range(len(sentence), i, -1):
            if sentence[i:j] in table:
                match = sentence[i:j]
                break
        if match is not None:
            entry = table[match]
            tokens.append({
                "surface": match,
                "lemma": entry["lemma"],
                "pos_major": entry["pos_major"],
                "pos_sub": entry["pos_sub"],
                "conj_form": entry["conj_form"],
                "script_class": classify_script_oracle(match),
                "origin": entry["origin"],
            })
            i = j
        else:
            ch = sentence[i]
            cat = unicodedata.category(ch)
            pos = "symbol" if cat[0] in "PSZC" else "other"
            tokens.append({
                "surface": ch, "lemma": ch, "pos_major": pos, "pos_sub": "",
                "conj_form": "none", "script_class": classify_script_oracle(ch),
                "origin": None,
            })
            i += 1
    return tokens


def tokenize_document_oracle(text, table):
    return [tokenize_oracle(s, table) for s in split_sentences_oracle(text)]


# ---------------------------------------------------------------------------
# Grammar DSL oracle: independent parser + recursive backtracking matcher.
# ---------------------------------------------------------------------------

# Mirror of the package's named sub-pattern table; a test pins equality.
SUBPATTERNS = {
    "verb_ta": 'form(ta) | (pos(verb) lit("た"))',
    "verb_te": 'form(te) | (pos(verb) lit("て"))',
    "verb_dict": "form(dictionary)",
    "verb_volitional": "form(volitional)",
}

_DSL_TOKEN = re.compile(r'\s*(\(|\)|\||\?|\*|=|,|"[^"]*"|[A-Za-z_][A-Za-z_0-9]*|\d+|\S)')


def _dsl_lex(src):
    out = []
    i = 0
    while i < len(src):
        m = _DSL_TOKEN.match(src, i)
        if not m:
            break
        out.append((m.group(1), m.start(1)))
        i = m.end()
    return out


class OracleDslError(ValueError):
    pass


def parse_dsl_oracle(src, depth=0):
    """Parse the pattern DSL into ('seq'|'alt'|'opt'|atom, ...) tuples."""
    if depth > 10:
        raise OracleDslError("subpattern recursion too deep")
    toks = _dsl_lex(src)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise OracleDslError("unexpected end of pattern")
        tok, _ = toks[pos]
        if expected is not None and tok != expected:
            raise OracleDslError(f"expected {expected!r}, got {tok!r}")
        pos += 1
        return tok

    def parse_alt():
        branches = [parse_seq()]
        while peek() == "|":
            take("|")
            branches.append(parse_seq())
        return branches[0] if len(branches) == 1 else ("alt", branches)

    def parse_seq():
        items = [parse_term()]
        while peek() not in (None, "|", ")"):
            items.append(parse_term())
        return items[0] if len(items) == 1 else ("seq", items)

    def parse_term():
        node = parse_atom()
        if peek() == "?":
            take("?")
            node = ("opt", node)
        return node

    def parse_atom():
        tok = take()
        if tok == "(":
            inner = parse_alt()
            take(")")
            return inner
        if tok == "any":
            if peek() == "*":
                take("*")
                bound = 12
                if peek() == "(":
                    take("(")
                    take("max")
                    take("=")
                    bound = int(take())
                    take(")")
                if not 1 <= bound <= 50:
                    raise OracleDslError("any* bound out of range")
                return ("anystar", bound)
            return ("any",)
        if tok in ("lit", "lemma", "pos_sub"):
            take("(")
            arg = take()
            take(")")
            if not (arg.startswith('"') and arg.endswith('"')):
                raise OracleDslError(f"{tok} needs a quoted string")
            return (tok, arg[1:-1])
        if tok in ("pos", "form"):
            take("(")
            arg = take()
            take(")")
            return (tok, arg)
        if tok == "sub":
            take("(")
            name = take()
            take(")")
            if name not in SUBPATTERNS:
                raise OracleDslError(f"unknown subpattern {name}")
            return parse_dsl_oracle(SUBPATTERNS[name], depth + 1)
        raise OracleDslError(f"unexpected token {tok!r}")

    node = parse_alt()
    if pos != len(toks):
        raise OracleDslError(f"trailing input at {toks[pos][1]}")
    return node


def _dsl_ends(node, tokens, pos):
    """Set of end positions reachable by matching ``node`` at ``pos``."""
    kind = node[0]
    if kind == "seq":
        current = {pos}
        for item in node[1]:
            nxt = set()
            for p in current:
                nxt |= _dsl_ends(item, tokens, p)
            current = nxt
            if not current:
                break
        return current
    if kind == "alt":
        out = set()
        for branch in node[1]:
            out |= _dsl_ends(branch, tokens, pos)
        return out
    if kind == "opt":
        return {pos} | _dsl_ends(node[1], tokens, pos)
    if kind == "anystar":
        return {min(pos + i, len(tokens)) for i in range(0, node[1] + 1)
                if pos + i <= len(tokens)}
    if kind == "any":
        return {pos + 1} if pos < len(tokens) else set()
    if pos >= len(tokens):
        return set()
    token = tokens[pos]
    value = {"lit": token["surface"], "lemma": token["lemma"],
             "pos": token["pos_major"], "pos_sub": token["pos_sub"],
             "form": token["conj_form"]}[kind]
    return {pos + 1} if value == node[1] else set()


def dsl_longest_match(node, tokens, start):
    """Longest non-empty match length at ``start`` or None."""
    ends = _dsl_ends(node, tokens, start)
    ends = {e for e in ends if e > start}
    return max(ends) - start if ends else None


def scan_document_oracle(ast, sentences):
    """Per-sentence scan with per-pattern overlap suppression."""
    results = []
    for s_index, sentence in enumerate(sentences):
        pos = 0
        while pos < len(sentence):
            length = dsl_longest_match(ast, sentence, pos)
            if length:
                results.append((s_index, pos, pos + length))
                pos += length
            else:
                pos += 1
    return results


# ---------------------------------------------------------------------------
# Feature oracles: plain counting.
# ---------------------------------------------------------------------------

_POS_COLUMNS = ("verb", "noun", "conjunction", "particle", "adjective",
                "adverb", "auxiliary_verb")
LEVELS = ("N5", "N4", "N3", "N2", "N1")


def _origin_of(token):
    if token.get("origin"):
        return token["origin"]
    if token["script_class"] == "katakana":
        return "loan"
    if token["script_class"] == "kanji_bearing":
        return "sino"
    return "native"


def kanji_count_oracle(surface):
    return sum(1 for c in surface
               if 0x4E00 <= ord(c) <= 0x9FFF or 0x3400 <= ord(c) <= 0x4DBF
               or 0xF900 <= ord(c) <= 0xFAFF or ord(c) == 0x3005)


def word_features_oracle(sentences):
    tokens = [t for s in sentences for t in s]
    words = [t for t in tokens if t["pos_major"] != "symbol"]
    counts = {p: 0 for p in _POS_COLUMNS}
    for t in words:
        if t["pos_major"] in counts:
            counts[t["pos_major"]] += 1
    origins = {"native": 0, "sino": 0, "loan": 0}
    for t in words:
        origins[_origin_of(t)] += 1
    return {
        "pos_counts": counts,
        "total_words": len(words),
        "unique_words": len({t["lemma"] for t in words}),
        "origins": origins,
        "kanji_chars": sum(kanji_count_oracle(t["surface"]) for t in tokens),
    }


def sentence_features_oracle(sentences):
    count = len(sentences)
    words = sum(1 for s in sentences for t in s if t["pos_major"] != "symbol")
    return {"sentence_count": count, "avg_sentence_length": words / count}


def bow_dictionary_oracle(docs_sentences):
    lemmas = set()
    for sentences in docs_sentences:
        for s in sentences:
            for t in s:
                if t["pos_major"] != "symbol":
                    lemmas.add(t["lemma"])
    return sorted(lemmas)


def bow_oracle(sentences, dictionary):
    index = {w: i for i, w in enumerate(dictionary)}
    counts = [0] * len(dictionary)
    for s in sentences:
        for t in s:
            if t["pos_major"] != "symbol" and t["lemma"] in index:
                counts[index[t["lemma"]]] += 1
    return counts


SCALAR_COLUMNS = (
    "n_verbs", "n_nouns", "n_conjunctions", "n_particles", "n_adjectives",
    "n_adverbs", "n_auxiliary_verbs", "total_words", "unique_words",
    "n_native", "n_sino", "n_loan", "kanji_chars", "sentence_count",
    "avg_sentence_length", "n5_total", "n4_total", "n3_total", "n2_total",
    "n1_total", "n5_unique", "n4_unique", "n3_unique", "n2_unique", "n1_unique",
)


def scalar_row_oracle(word_f, sent_f, level_totals, level_uniques):
    row = [float(word_f["pos_counts"][p]) for p in _POS_COLUMNS]
    row += [float(word_f["total_words"]), float(word_f["unique_words"])]
    row += [float(word_f["origins"][o]) for o in ("native", "sino", "loan")]
    row += [float(word_f["kanji_chars"]),
            float(sent_f["sentence_count"]), sent_f["avg_sentence_length"]]
    row += [float(level_totals[lv]) for lv in LEVELS]
    row += [float(level_uniques[lv]) for lv in LEVELS]
    return row


# ---------------------------------------------------------------------------
# Statistics oracles.
# ---------------------------------------------------------------------------

def normal_cdf_quadrature(x, mu, sigma, panels=4000):
    """Numeric integration of the normal density (composite Simpson over
    [mu - 12 sigma, x], symmetric fallback for the upper tail; abs error
    ~1e-13 at the default panel count)."""
    if sigma == 0:
        return 0.0 if x < mu else (0.5 if x == mu else 1.0)
    z = (x - mu) / sigma
    if z > 0:
        return 1.0 - normal_cdf_quadrature(mu - (x - mu), mu, sigma, panels)
    lo = -12.0
    if z <= lo:
        return 0.0

    def density(t):
        return math.exp(-0.5 * t * t) / math.sqrt(2.0 * math.pi)

    n = panels if panels % 2 == 0 else panels + 1
    h = (z - lo) / n
    total = density(lo) + density(z)
    for i in range(1, n):
        total += density(lo + i * h) * (4 if i % 2 else 2)
    return total * h / 3.0


def normal_cdf_mp(x, mu, sigma):
    """Arbitrary-precision normal CDF (golden-file source of truth)."""
    import mpmath

    if sigma == 0:
        return 0.0 if x < mu else (0.5 if x == mu else 1.0)
    with mpmath.workdps(40):
        return float(mpmath.ncdf(x, mu=mu, sigma=sigma))


def mean_oracle(values):
    return sum(values) / len(values)


def sample_std_oracle(values):
    mu = mean_oracle(values)
    return math.sqrt(sum((v - mu) ** 2 for v in values) / (len(values) - 1))


def population_std_oracle(values):
    mu = mean_oracle(values)
    return math.sqrt(sum((v - mu) ** 2 for v in values) / len(values))


def normalize_oracle(rows):
    """Min-max per column; returns (normalized rows, dropped column indices)."""
    n_cols = len(rows[0])
    keep, dropped = [], []
    for j in range(n_cols):
        column = [row[j] for row in rows]
        if max(column) == min(column):
            dropped.append(j)
        else:
            keep.append(j)
    normalized = []
    for row in rows:
        out = []
        for j in keep:
            column = [r[j] for r in rows]
            out.append((row[j] - min(column)) / (max(column) - min(column)))
        normalized.append(out)
    return normalized, dropped


class Lcg64Oracle:
    """64-bit MMIX LCG; doubles from the top 53 bits. Mirror of the package
    generator, re-stated independently."""

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next_u64(self):
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state

    def random(self):
        return (self.next_u64() >> 11) / float(1 << 53)

    def randint(self, n):
        return min(int(self.random() * n), n - 1)


def _sqdist(a, b):
    return sum((x - y) ** 2 for x, y in zip(a, b))


def kmeans_oracle(points, k, seed, max_iter=100):
    """Pure-python mirror of the documented k-means++/Lloyd procedure."""
    n = len(points)
    rng = Lcg64Oracle(seed)
    centroids = [list(points[rng.randint(n)])]
    while len(centroids) < k:
        d2 = [min(_sqdist(p, c) for c in centroids) for p in points]
        total = sum(d2)
        if total <= 0:
            idx = rng.randint(n)
        else:
            r = rng.random() * total
            cum = 0.0
            idx = n - 1
            for i, w in enumerate(d2):
                cum += w
                if r < cum:
                    idx = i
                    break
        centroids.append(list(points[idx]))

    assignments = None
    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        new_assign = []
        for p in points:
            best, best_d = 0, _sqdist(p, centroids[0])
            for j in range(1, k):
                d = _sqdist(p, centroids[j])
                if d < best_d:
                    best, best_d = j, d
            new_assign.append(best)
        for j in range(k):
            if j not in new_assign:
                far_i, far_d = 0, -1.0
                for i, p in enumerate(points):
                    d = _sqdist(p, centroids[new_assign[i]])
                    if d > far_d:
                        far_i, far_d = i, d
                centroids[j] = list(points[far_i])
                new_assign[far_i] = j
        for j in range(k):
            members = [points[i] for i in range(n) if new_assign[i] == j]
            centroids[j] = [sum(col) / len(members) for col in zip(*members)]
        if new_assign == assignments:
            break
        assignments = new_assign
    return centroids, assignments, iterations


def best_two_partition(points):
    """Brute-force optimal 2-means partition by objective (exponential)."""
    n = len(points)
    best_cost, best_mask = None, None
    for mask in range(1, (1 << n) - 1):
        groups = ([points[i] for i in range(n) if mask >> i & 1],
                  [points[i] for i in range(n) if not mask >> i & 1])
        cost = 0.0
        for group in groups:
            center = [sum(col) / len(group) for col in zip(*group)]
            cost += sum(_sqdist(p, center) for p in group)
        if best_cost is None or cost < best_cost:
            best_cost, best_mask = cost, mask
    return best_cost, best_mask


def power_iteration_pca_oracle(rows, d, tol=1e-9, max_iter=1000):
    """Mirror of the documented deterministic PCA: covariance power
    iteration with deflation, one-hot start at the largest diagonal."""
    n = len(rows)
    w = len(rows[0])
    means = [sum(r[j] for r in rows) / n for j in range(w)]
    xc = [[r[j] - means[j] for j in range(w)] for r in rows]
    cov = [[sum(xc[i][a] * xc[i][b] for i in range(n)) for b in range(w)]
           for a in range(w)]

    def matvec(m, v):
        return [sum(m[a][b] * v[b] for b in range(w)) for a in range(w)]

    components = []
    for _ in range(d):
        j_star = max(range(w), key=lambda j: cov[j][j])
        if cov[j_star][j_star] <= 1e-12:
            components.append([0.0] * w)
            continue
        v = [0.0] * w
        v[j_star] = 1.0
        lam = None
        converged = False
        for _ in range(max_iter):
            nxt = matvec(cov, v)
            for prev in components:
                dot = sum(a * b for a, b in zip(nxt, prev))
                nxt = [a - dot * b for a, b in zip(nxt, prev)]
            nrm = math.sqrt(sum(x * x for x in nxt))
            if nrm <= 1e-12:
                v = [0.0] * w
                lam = 0.0
                converged = True
                break
            v = [x / nrm for x in nxt]
            if lam is not None and abs(nrm - lam) <= tol * nrm:
                lam = nrm
                converged = True
                break
            lam = nrm
        if not converged:
            raise ArithmeticError("oracle PCA failed to converge")
        big = max(range(w), key=lambda j: abs(v[j]))
        if v[big] < 0:
            v = [-x for x in v]
        components.append(v)
        for a in range(w):
            for b in range(w):
                cov[a][b] -= lam * v[a] * v[b]
    coords = [[sum(xc[i][j] * comp[j] for j in range(w)) for comp in components]
              for i in range(n)]
    return coords, components


def detect_outliers_oracle(coords, multiplier=2.0):
    n = len(coords)
    d = len(coords[0])
    center = [sum(c[j] for c in coords) / n for j in range(d)]
    dists = [math.sqrt(_sqdist(c, center)) for c in coords]
    threshold = mean_oracle(dists) + multiplier * population_std_oracle(dists)
    flags = [dist > threshold for dist in dists]
    return dists, flags, threshold


def map_score_oracle(x, mu, sigma, lo, hi, cdf=normal_cdf_mp):
    return lo + (hi - lo) * cdf(x, mu, sigma)


def apply_penalty_oracle(score, flagged, lo, hi, factor=0.8):
    if not flagged:
        return score
    return min(max(lo + factor * (score - lo), lo), hi)


def round6(x):
    return round(float(x) + 0.0, 6)
