"""Graded grammar patterns: a small DSL compiled to automata, a registry,
document matching, the per-level feature report, and partial-match hints.

DSL grammar (whitespace-separated sequence, ``|`` alternation, postfix
``?`` optional, parentheses for grouping)::

    lit("まいが")   exact surface        lemma("来る")  dictionary form of word
    pos(verb)       word class           pos_sub("格助詞")  sub-class
    form(volitional) conjugation form    any            exactly one token
    any*            0..12 arbitrary tokens (bounded)    any*(max=N)  0..N
    sub(verb_ta)    named common sub-structure

Compilation uses the position (Glushkov) construction, so the resulting
automata are epsilon-free and map 1:1 onto engine edges.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

from .automata import (
    ANY,
    Automaton,
    BudgetExceeded,
    Edge,
    Node,
    Predicate,
    feed_partial,
    match_at,
)
from .tokenize import Document, Token

LEVELS = ("N5", "N4", "N3", "N2", "N1")
DIFFICULTY = {level: rank for rank, level in enumerate(LEVELS, start=1)}

DEFAULT_ANY_STAR_BOUND = 12
MAX_ANY_STAR_BOUND = 50

# Common sub-structures usable as sub(name); e.g. a verb in ta-form is
# either one conjugated surface or a verb followed by the た auxiliary.
SUBPATTERNS = {
    "verb_ta": 'form(ta) | (pos(verb) lit("た"))',
    "verb_te": 'form(te) | (pos(verb) lit("て"))',
    "verb_dict": "form(dictionary)",
    "verb_volitional": "form(volitional)",
}


class PatternError(Exception):
    pass


class DslSyntax(PatternError):
    def __init__(self, position: int, message: str):
        super().__init__(f"DSL syntax error at {position}: {message}")
        self.position = position


class UnknownSubpattern(PatternError):
    def __init__(self, name: str):
        super().__init__(f"unknown subpattern: {name!r}")
        self.name = name


class UnboundedAnyStar(PatternError):
    def __init__(self, detail: str):
        super().__init__(f"any* must carry a bound in 1..{MAX_ANY_STAR_BOUND}: {detail}")


class DuplicatePatternId(PatternError):
    def __init__(self, pattern_id: str):
        super().__init__(f"duplicate pattern id: {pattern_id}")
        self.pattern_id = pattern_id


class UnknownPatternId(PatternError):
    def __init__(self, pattern_id: str):
        super().__init__(f"unknown pattern id: {pattern_id}")
        self.pattern_id = pattern_id


@dataclass(frozen=True)
class GrammarPattern:
    id: str
    display_name: str
    level: str
    description: str
    body: str
    fixtures_positive: tuple[str, ...] = ()
    fixtures_negative: tuple[str, ...] = ()


@dataclass(frozen=True)
class MatchResult:
    pattern_id: str
    level: str
    sentence_index: int
    token_span: tuple[int, int]


@dataclass(frozen=True)
class Hint:
    pattern_id: str
    display_name: str
    level: str
    consumed: int
    expected: tuple[str, ...]


# --- DSL front end ---------------------------------------------------------

_TOKEN_RE = re.compile(r'\(|\)|\||\?|\*|=|,|"[^"]*"|[A-Za-z_][A-Za-z_0-9]*|\d+|\S')


def _lex(src: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(src):
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(src, i)
        if m is None:
            raise DslSyntax(i, f"cannot read {src[i]!r}")
        if m.group(0).startswith('"') and not m.group(0).endswith('"'):
            raise DslSyntax(i, "unclosed string")
        tokens.append((m.group(0), i))
        i = m.end()
    return tokens


# AST: ("atom", Predicate) | ("seq", [..]) | ("alt", [..]) | ("opt", node)

class _Parser:
    def __init__(self, src: str, depth: int = 0,
                 any_star_default: int = DEFAULT_ANY_STAR_BOUND):
        if depth > 10:
            raise UnknownSubpattern("(recursive subpattern nesting)")
        self.src = src
        self.tokens = _lex(src)
        self.pos = 0
        self.depth = depth
        self.any_star_default = any_star_default
        # a quoted token that never closes is caught by _lex; an unclosed
        # call like lit("が" surfaces as end-of-input here
        if not self.tokens:
            raise DslSyntax(0, "empty pattern")

    def _peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _here(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.src)

    def _take(self, expected: str | None = None) -> str:
        if self.pos >= len(self.tokens):
            raise DslSyntax(len(self.src), f"unexpected end (wanted {expected or 'more input'})")
        tok, at = self.tokens[self.pos]
        if expected is not None and tok != expected:
            raise DslSyntax(at, f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        node = self._alt()
        if self.pos != len(self.tokens):
            raise DslSyntax(self._here(), f"trailing input {self._peek()!r}")
        return node

    def _alt(self):
        branches = [self._seq()]
        while self._peek() == "|":
            self._take("|")
            branches.append(self._seq())
        return branches[0] if len(branches) == 1 else ("alt", branches)

    def _seq(self):
        items = [self._term()]
        while self._peek() not in (None, "|", ")"):
            items.append(self._term())
        return items[0] if len(items) == 1 else ("seq", items)

    def _term(self):
        node = self._atom()
        if self._peek() == "?":
            self._take("?")
            node = ("opt", node)
        return node

    def _quoted(self, what: str) -> str:
        at = self._here()
        arg = self._take()
        if not (arg.startswith('"') and arg.endswith('"') and len(arg) >= 2):
            raise DslSyntax(at, f"{what} requires a quoted string")
        return arg[1:-1]

    def _atom(self):
        at = self._here()
        tok = self._take()
        if tok == "(":
            inner = self._alt()
            self._take(")")
            return inner
        if tok == "any":
            if self._peek() != "*":
                return ("atom", ANY)
            self._take("*")
            bound = self.any_star_default
            if self._peek() == "(":
                self._take("(")
                self._take("max")
                self._take("=")
                raw = self._take()
                self._take(")")
                if not raw.isdigit():
                    raise UnboundedAnyStar(f"got {raw!r}")
                bound = int(raw)
            if not 1 <= bound <= MAX_ANY_STAR_BOUND:
                raise UnboundedAnyStar(f"got max={bound}")
            # 0..N arbitrary tokens == a chain of N optional any-atoms
            return ("seq", [("opt", ("atom", ANY)) for _ in range(bound)])
        if tok in ("lit", "lemma", "pos_sub"):
            self._take("(")
            arg = self._quoted(tok)
            self._take(")")
            kind = {"lit": "literal", "lemma": "lemma", "pos_sub": "pos_sub"}[tok]
            return ("atom", Predicate(kind, arg))
        if tok in ("pos", "form"):
            self._take("(")
            arg_at = self._here()
            arg = self._take()
            self._take(")")
            kind = "pos_major" if tok == "pos" else "conj_form"
            try:
                return ("atom", Predicate(kind, arg))
            except Exception:
                raise DslSyntax(arg_at, f"bad {tok} argument {arg!r}") from None
        if tok == "sub":
            self._take("(")
            name = self._take()
            self._take(")")
            if name not in SUBPATTERNS:
                raise UnknownSubpattern(name)
            return _Parser(SUBPATTERNS[name], self.depth + 1,
                           self.any_star_default)._alt_full()
        raise DslSyntax(at, f"unexpected {tok!r}")

    def _alt_full(self):
        node = self._alt()
        if self.pos != len(self.tokens):
            raise DslSyntax(self._here(), "trailing input in subpattern")
        return node


def parse_dsl(src: str, any_star_default: int = DEFAULT_ANY_STAR_BOUND):
    return _Parser(src, any_star_default=any_star_default).parse()


# --- Glushkov (position) construction --------------------------------------

def _analyze(node, atoms: list[Predicate]):
    """Returns (nullable, first, last, follow) with 1-based positions."""
    kind = node[0]
    if kind == "atom":
        atoms.append(node[1])
        i = len(atoms)
        return False, {i}, {i}, set()
    if kind == "opt":
        nullable, first, last, follow = _analyze(node[1], atoms)
        return True, first, last, follow
    if kind == "alt":
        nullable, first, last, follow = False, set(), set(), set()
        for branch in node[1]:
            b_null, b_first, b_last, b_follow = _analyze(branch, atoms)
            nullable = nullable or b_null
            first |= b_first
            last |= b_last
            follow |= b_follow
        return nullable, first, last, follow
    # seq
    nullable, first, last, follow = True, set(), set(), set()
    for item in node[1]:
        i_null, i_first, i_last, i_follow = _analyze(item, atoms)
        follow |= i_follow
        follow |= {(p, q) for p in last for q in i_first}
        if nullable:
            first |= i_first
        if i_null:
            last |= i_last
        else:
            last = i_last
        nullable = nullable and i_null
    return nullable, first, last, follow


def compile_ast(ast) -> Automaton:
    atoms: list[Predicate] = []
    _nullable, first, last, follow = _analyze(ast, atoms)
    nodes = [Node(id=0)]
    for i, _pred in enumerate(atoms, start=1):
        nodes.append(Node(id=i, is_final=i in last))
    edges = [Edge(0, p, atoms[p - 1]) for p in sorted(first)]
    edges += [Edge(p, q, atoms[q - 1]) for p, q in sorted(follow)]
    return Automaton(nodes, edges, start=0)


def compile_pattern(pattern: GrammarPattern,
                    any_star_default: int = DEFAULT_ANY_STAR_BOUND) -> Automaton:
    """Compile a pattern body to an automaton template (fresh context)."""
    return compile_ast(parse_dsl(pattern.body, any_star_default))


# --- Registry ---------------------------------------------------------------

class Registry:
    """Immutable id -> (pattern, compiled template) map; iteration order is
    level N5..N1 then id, for reproducible reports."""

    def __init__(self, entries: dict[str, tuple[GrammarPattern, Automaton]]):
        self._entries = dict(entries)
        self._order = sorted(
            self._entries,
            key=lambda pid: (DIFFICULTY[self._entries[pid][0].level], pid),
        )

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, pattern_id: str) -> bool:
        return pattern_id in self._entries

    def ids(self) -> list[str]:
        return list(self._order)

    def pattern(self, pattern_id: str) -> GrammarPattern:
        try:
            return self._entries[pattern_id][0]
        except KeyError:
            raise UnknownPatternId(pattern_id) from None

    def template(self, pattern_id: str) -> Automaton:
        try:
            return self._entries[pattern_id][1]
        except KeyError:
            raise UnknownPatternId(pattern_id) from None

    def items(self) -> Iterable[tuple[GrammarPattern, Automaton]]:
        for pid in self._order:
            yield self._entries[pid]


def _pattern_from_obj(raw: dict, where: str) -> GrammarPattern:
    try:
        fixtures = raw.get("fixtures", {})
        pattern = GrammarPattern(
            id=raw["id"],
            display_name=raw.get("display_name", raw["id"]),
            level=raw["level"],
            description=raw.get("description", ""),
            body=raw["dsl"],
            fixtures_positive=tuple(fixtures.get("positive", ())),
            fixtures_negative=tuple(fixtures.get("negative", ())),
        )
    except KeyError as exc:
        raise PatternError(f"{where}: pattern missing field {exc}") from None
    if pattern.level not in LEVELS:
        raise PatternError(f"{where}: pattern {pattern.id!r} has bad level {pattern.level!r}")
    return pattern


def load_registry(sources: Iterable[str | Path] | str | Path,
                  any_star_default: int = DEFAULT_ANY_STAR_BOUND) -> Registry:
    """Load pattern files (or a directory of them) and compile everything."""
    if isinstance(sources, (str, Path)):
        path = Path(sources)
        files = sorted(path.glob("*.json")) if path.is_dir() else [path]
    else:
        files = [Path(p) for p in sources]
    entries: dict[str, tuple[GrammarPattern, Automaton]] = {}
    for file in files:
        with open(file, encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise PatternError(f"{file}: not valid JSON: {exc}") from None
        for raw in obj.get("patterns", []):
            pattern = _pattern_from_obj(raw, str(file))
            if pattern.id in entries:
                raise DuplicatePatternId(pattern.id)
            try:
                template = compile_pattern(pattern, any_star_default)
            except PatternError as exc:
                exc.args = (f"{file}: pattern {pattern.id!r}: {exc}",)
                raise
            entries[pattern.id] = (pattern, template)
    return Registry(entries)


def load_bundled_registry() -> Registry:
    root = resources.files("sakubun.data").joinpath("patterns")
    with resources.as_file(root) as dir_path:
        return load_registry(dir_path)


# --- Matching ----------------------------------------------------------------

def match_document(registry: Registry, document: Document,
                   *, step_budget: int | None = None) -> list[MatchResult]:
    """All pattern occurrences, longest match per start; occurrences of the
    same pattern never overlap (scan resumes after a recorded span), while
    different patterns may overlap freely."""
    results: list[MatchResult] = []
    kwargs = {} if step_budget is None else {"step_budget": step_budget}
    for s_index, sentence in enumerate(document.sentences):
        for pattern, template in registry.items():
            automaton = template.instantiate()
            pos = 0
            while pos < len(sentence):
                try:
                    outcome = match_at(automaton, sentence, pos, **kwargs)
                except BudgetExceeded as exc:
                    raise BudgetExceeded(
                        exc.budget,
                        f"pattern {pattern.id!r}, sentence {s_index}, token {pos}",
                    ) from None
                if outcome.matched:
                    results.append(MatchResult(
                        pattern_id=pattern.id,
                        level=pattern.level,
                        sentence_index=s_index,
                        token_span=(pos, pos + outcome.length),
                    ))
                    pos += outcome.length
                else:
                    pos += 1
    results.sort(key=lambda m: (m.sentence_index, m.token_span[0], m.pattern_id))
    return results


def grammar_feature_report(matches: list[MatchResult], registry: Registry) -> dict:
    """Per-level JSON report: one entry per matched pattern with its total
    count and a 0/1 unique flag, plus per-level and grand totals."""
    counts: dict[str, int] = {}
    for match in matches:
        if match.pattern_id not in registry:
            raise UnknownPatternId(match.pattern_id)
        counts[match.pattern_id] = counts.get(match.pattern_id, 0) + 1

    report: dict = {level: [] for level in reversed(LEVELS)}  # N1 first, like the JSON reports
    level_totals = {level: {"total_count": 0, "unique_patterns": 0} for level in LEVELS}
    for pid in sorted(counts):
        pattern = registry.pattern(pid)
        report[pattern.level].append({
            "grammar": pattern.display_name,
            "level": pattern.level,
            "count": counts[pid],
            "unique": 1,
        })
        level_totals[pattern.level]["total_count"] += counts[pid]
        level_totals[pattern.level]["unique_patterns"] += 1
    report["totals"] = {
        "levels": {level: level_totals[level] for level in LEVELS},
        "grand_total": sum(t["total_count"] for t in level_totals.values()),
        "grand_unique": sum(t["unique_patterns"] for t in level_totals.values()),
    }
    return report


def hints(registry: Registry, partial_sentence: list[Token],
          *, step_budget: int | None = None) -> list[Hint]:
    """Patterns in progress at the end of ``partial_sentence``: one hint per
    pattern (deepest pending state), advanced levels first. A pattern whose
    match just completed is not hinted."""
    kwargs = {} if step_budget is None else {"step_budget": step_budget}
    out: list[Hint] = []
    for pattern, template in registry.items():
        report = feed_partial(template.instantiate(), partial_sentence, **kwargs)
        pending = [s for s in report.states if not s.is_final]
        if not pending:
            continue
        best = max(pending, key=lambda s: s.consumed)
        out.append(Hint(
            pattern_id=pattern.id,
            display_name=pattern.display_name,
            level=pattern.level,
            consumed=best.consumed,
            expected=best.expected,
        ))
    out.sort(key=lambda h: (-h.consumed, -DIFFICULTY[h.level], h.pattern_id))
    return out
