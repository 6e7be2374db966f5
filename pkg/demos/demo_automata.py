#!/usr/bin/env python3
"""Tour of the automata engine: predicates, hooks, and context storage.

The engine is an event-driven token automaton. Edges carry predicates over
tokens; before-shift hooks can veto a transition after reading the
key-value context store, and after-shift hooks can mutate it. Keeping a
stack in the store turns the machine into a PDA, demonstrated below with
the balanced language a^n b^n.
"""
from sakubun.automata import (
    ANY,
    Automaton,
    Edge,
    Node,
    form,
    literal,
    match_at,
    register_hook,
    serialize,
)
from sakubun.tokenize import PosMajor, Token

# --- 1. a four-edge automaton for an N1 grammar ----------------------------
# volitional verb -> が -> any token -> まいが   (〜う(よう)が、〜まいが)
grammar = Automaton(
    nodes=[Node(0), Node(1), Node(2), Node(3), Node(4, is_final=True)],
    edges=[
        Edge(0, 1, form("volitional")),
        Edge(1, 2, literal("が")),
        Edge(2, 3, ANY),
        Edge(3, 4, literal("まいが")),
    ],
    start=0,
)

sentence = [
    Token.make("彼", PosMajor.noun),
    Token.make("が", PosMajor.particle),
    Token.make("来よう", PosMajor.verb, lemma="来る", conj_form="volitional"),
    Token.make("が", PosMajor.particle),
    Token.make("来", PosMajor.verb, lemma="来る", conj_form="negative_stem"),
    Token.make("まいが", PosMajor.auxiliary_verb),
]

outcome = match_at(grammar, sentence, start=2)
print("match from 来よう:", outcome.matched, "consumed", outcome.length, "tokens")
print("accepting path (node, next-token-index):", outcome.steps)

# --- 2. serialization: structure + hook names, nothing else ----------------
blob = serialize(grammar)
print(f"\nserialized automaton: {len(blob)} bytes")
print(blob.decode("utf-8")[:120], "...")

# --- 3. PDA behavior via stack hooks ----------------------------------------
# pop-last admits a shift only when it pops the final stack entry, which is
# how the final node "checks" that every a was matched by a b.

def pop_last(ctx, token):
    stack = ctx.stack()
    if len(stack) != 1:
        return False
    stack.pop()
    return True

register_hook("pop-last", pop_last)

anbn = Automaton(
    nodes=[Node(0), Node(1), Node(2), Node(3, is_final=True)],
    edges=[
        Edge(0, 1, literal("a"), after="push"),
        Edge(1, 1, literal("a"), after="push"),
        Edge(1, 3, literal("b"), before="pop-last"),
        Edge(1, 2, literal("b"), before="pop"),
        Edge(2, 2, literal("b"), before="pop"),
        Edge(2, 3, literal("b"), before="pop-last"),
    ],
    start=0,
)

print("\nbalanced-delimiter language a^n b^n:")
for text in ["ab", "aabb", "aaabbb", "aab", "abab", "ba"]:
    tokens = [Token.make(c, PosMajor.other) for c in text]
    outcome = match_at(anbn.instantiate(), tokens, 0)
    accepted = outcome.matched and outcome.length == len(tokens)
    print(f"  {text!r:10} -> {'accept' if accepted else 'reject'}")
