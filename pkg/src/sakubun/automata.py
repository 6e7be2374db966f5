"""Event-driven token automata with key-value context storage.

Nodes carry an optional reached-action, edges carry a predicate plus
before-shift / after-shift hooks. The before-shift hook can veto a
transition after inspecting the context store, which is what lifts the
machine beyond a plain finite automaton: keep a stack in the store and it
behaves like a PDA; keep counters and flags and it can guard arbitrary
shapes. Matching is depth-first with full context snapshotting, so hook
side effects on abandoned branches never leak.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .tokenize import ConjForm, PosMajor, Token

DEFAULT_STEP_BUDGET = 10_000

PRED_KINDS = ("literal", "lemma", "pos_major", "pos_sub", "conj_form", "any")


class AutomataError(Exception):
    pass


class DuplicateNodeId(AutomataError):
    def __init__(self, node_id: int):
        super().__init__(f"duplicate node id: {node_id}")
        self.node_id = node_id


class DanglingEdge(AutomataError):
    def __init__(self, node_id: int):
        super().__init__(f"edge references unknown node id: {node_id}")
        self.node_id = node_id


class NoStartNode(AutomataError):
    def __init__(self, start: int | None = None):
        msg = "no start node declared" if start is None else f"start node {start} does not exist"
        super().__init__(msg)
        self.start = start


class UnknownHook(AutomataError):
    def __init__(self, name: str):
        super().__init__(f"unknown hook: {name!r}")
        self.name = name


class UnknownHookName(UnknownHook):
    """Raised when a serialized automaton references an unregistered hook."""


class MalformedPayload(AutomataError):
    pass


class HookPanic(AutomataError):
    def __init__(self, hook: str, where: str, cause: Exception):
        super().__init__(f"hook {hook!r} failed at {where}: {cause}")
        self.hook = hook
        self.where = where
        self.cause = cause


class BudgetExceeded(AutomataError):
    def __init__(self, budget: int, where: str | None = None):
        suffix = f" ({where})" if where else ""
        super().__init__(f"match aborted after {budget} engine steps{suffix}")
        self.budget = budget
        self.where = where


class ContextStore:
    """String-keyed storage for ints, strings, booleans and lists-as-stacks.

    Snapshots copy list values one level deep; stored values must stay
    scalar-or-flat-list so a restore is bit-identical."""

    def __init__(self, entries: dict | None = None):
        self.entries: dict[str, object] = dict(entries or {})

    def snapshot(self) -> dict[str, object]:
        return {k: (list(v) if isinstance(v, list) else v) for k, v in self.entries.items()}

    def restore(self, snap: dict[str, object]) -> None:
        self.entries = {k: (list(v) if isinstance(v, list) else v) for k, v in snap.items()}

    def stack(self, key: str = "stack") -> list:
        value = self.entries.setdefault(key, [])
        if not isinstance(value, list):
            raise TypeError(f"context key {key!r} is not a stack")
        return value

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ContextStore) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"ContextStore({self.entries!r})"


# A hook receives the live context and the token driving the shift (None for
# the start node's reached-action). Before-shift hooks return False to veto;
# return values of other hook roles are ignored.
HookFn = Callable[[ContextStore, Token | None], bool]

_HOOK_REGISTRY: dict[str, HookFn] = {}


def register_hook(name: str, fn: HookFn) -> None:
    _HOOK_REGISTRY[name] = fn


def unregister_hook(name: str) -> None:
    _HOOK_REGISTRY.pop(name, None)


def hook_registered(name: str) -> bool:
    return name in _HOOK_REGISTRY


def _hook_push(ctx: ContextStore, token: Token | None) -> bool:
    ctx.stack().append(token.surface if token is not None else "")
    return True


def _hook_pop(ctx: ContextStore, token: Token | None) -> bool:
    stack = ctx.stack()
    if not stack:
        return False
    stack.pop()
    return True


def _hook_counter_increment(ctx: ContextStore, token: Token | None) -> bool:
    ctx.entries["counter"] = int(ctx.entries.get("counter", 0)) + 1
    return True


def _hook_counter_guard(ctx: ContextStore, token: Token | None) -> bool:
    # Consuming guard: admissible while the counter is positive.
    count = int(ctx.entries.get("counter", 0))
    if count <= 0:
        return False
    ctx.entries["counter"] = count - 1
    return True


def _hook_flag_set(ctx: ContextStore, token: Token | None) -> bool:
    ctx.entries["flag"] = True
    return True


def _hook_flag_guard(ctx: ContextStore, token: Token | None) -> bool:
    return bool(ctx.entries.get("flag", False))


register_hook("push", _hook_push)
register_hook("pop", _hook_pop)
register_hook("counter-increment", _hook_counter_increment)
register_hook("counter-guard", _hook_counter_guard)
register_hook("flag-set", _hook_flag_set)
register_hook("flag-guard", _hook_flag_guard)


@dataclass(frozen=True)
class Predicate:
    kind: str
    arg: str | None = None

    def __post_init__(self):
        if self.kind not in PRED_KINDS:
            raise MalformedPayload(f"unknown predicate kind: {self.kind!r}")
        if self.kind == "any":
            if self.arg is not None:
                raise MalformedPayload("'any' predicate takes no argument")
        elif not self.arg:
            raise MalformedPayload(f"predicate {self.kind!r} requires an argument")
        if self.kind == "pos_major":
            PosMajor(self.arg)
        if self.kind == "conj_form":
            ConjForm(self.arg)

    def accepts(self, token: Token) -> bool:
        if self.kind == "any":
            return True
        if self.kind == "literal":
            return token.surface == self.arg
        if self.kind == "lemma":
            return token.lemma == self.arg
        if self.kind == "pos_major":
            return token.pos_major.value == self.arg
        if self.kind == "pos_sub":
            return token.pos_sub == self.arg
        return token.conj_form.value == self.arg

    def describe(self) -> str:
        if self.kind == "any":
            return "any token"
        if self.kind == "literal":
            return self.arg
        if self.kind == "lemma":
            return f"{self.arg} (any form)"
        if self.kind == "pos_major":
            return f"any {self.arg}"
        if self.kind == "pos_sub":
            return f"{self.arg} word"
        return f"{self.arg.replace('_', ' ')} form"


def literal(surface: str) -> Predicate:
    return Predicate("literal", surface)


def lemma_of(lemma: str) -> Predicate:
    return Predicate("lemma", lemma)


def pos(pos_major: str | PosMajor) -> Predicate:
    return Predicate("pos_major", PosMajor(pos_major).value)


def pos_sub(sub: str) -> Predicate:
    return Predicate("pos_sub", sub)


def form(conj: str | ConjForm) -> Predicate:
    return Predicate("conj_form", ConjForm(conj).value)


ANY = Predicate("any")


@dataclass
class Node:
    id: int
    is_final: bool = False
    action: str | None = None


@dataclass
class Edge:
    source: int
    target: int
    predicate: Predicate
    before: str | None = None
    after: str | None = None


@dataclass(frozen=True)
class MatchOutcome:
    matched: bool
    length: int | None = None
    # accepting path as (node id, index of the next unconsumed token),
    # starting at the start node and ending at the final node
    steps: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class ActiveState:
    node_id: int
    consumed: int
    is_final: bool
    expected: tuple[str, ...]


@dataclass(frozen=True)
class PartialReport:
    states: tuple[ActiveState, ...]
    completed: bool


class Automaton:
    """Validated automaton structure plus one live context store.

    Structure (nodes, edges, start) is immutable after construction and can
    be shared; the context is private to a match run. Use
    :meth:`instantiate` to get a fresh-context clone of a template."""

    def __init__(self, nodes: list[Node], edges: list[Edge], start: int,
                 *, _validate_hooks: bool = True):
        self.nodes: dict[int, Node] = {}
        for node in nodes:
            if node.id in self.nodes:
                raise DuplicateNodeId(node.id)
            if node.id < 0:
                raise MalformedPayload(f"node id must be >= 0, got {node.id}")
            self.nodes[node.id] = node
        if start not in self.nodes:
            raise NoStartNode(start)
        self.start = start
        self.edges: list[Edge] = list(edges)
        self.adjacency: dict[int, list[tuple[int, Edge]]] = {nid: [] for nid in self.nodes}
        for index, edge in enumerate(self.edges):
            if edge.source not in self.nodes:
                raise DanglingEdge(edge.source)
            if edge.target not in self.nodes:
                raise DanglingEdge(edge.target)
            self.adjacency[edge.source].append((index, edge))
        if _validate_hooks:
            for name in self._hook_names():
                if not hook_registered(name):
                    raise UnknownHook(name)
        self.context = ContextStore()

    def _hook_names(self) -> list[str]:
        names = []
        for node in self.nodes.values():
            if node.action:
                names.append(node.action)
        for edge in self.edges:
            if edge.before:
                names.append(edge.before)
            if edge.after:
                names.append(edge.after)
        return names

    def instantiate(self) -> "Automaton":
        clone = object.__new__(Automaton)
        clone.nodes = self.nodes
        clone.start = self.start
        clone.edges = self.edges
        clone.adjacency = self.adjacency
        clone.context = ContextStore()
        return clone

    def final_ids(self) -> set[int]:
        return {nid for nid, node in self.nodes.items() if node.is_final}


def build_automaton(spec: dict) -> Automaton:
    """Build and validate an automaton from its JSON-shaped description."""
    if not isinstance(spec, dict):
        raise MalformedPayload("automaton description must be an object")
    allowed = {"version", "start", "nodes", "edges"}
    unknown = set(spec) - allowed
    if unknown:
        raise MalformedPayload(f"unknown fields: {sorted(unknown)}")
    if "start" not in spec:
        raise NoStartNode()
    if not isinstance(spec.get("nodes"), list) or not isinstance(spec.get("edges"), list):
        raise MalformedPayload("'nodes' and 'edges' must be lists")

    nodes = []
    for raw in spec["nodes"]:
        unknown = set(raw) - {"id", "final", "action"}
        if unknown:
            raise MalformedPayload(f"unknown node fields: {sorted(unknown)}")
        if "id" not in raw or not isinstance(raw["id"], int):
            raise MalformedPayload("node requires an integer 'id'")
        nodes.append(Node(id=raw["id"], is_final=bool(raw.get("final", False)),
                          action=raw.get("action")))
    edges = []
    for raw in spec["edges"]:
        unknown = set(raw) - {"from", "to", "pred", "before", "after"}
        if unknown:
            raise MalformedPayload(f"unknown edge fields: {sorted(unknown)}")
        pred_raw = raw.get("pred")
        if not isinstance(pred_raw, dict) or set(pred_raw) - {"kind", "arg"}:
            raise MalformedPayload(f"bad predicate object: {pred_raw!r}")
        if not isinstance(raw.get("from"), int) or not isinstance(raw.get("to"), int):
            raise MalformedPayload("edge requires integer 'from' and 'to'")
        edges.append(Edge(
            source=raw["from"], target=raw["to"],
            predicate=Predicate(pred_raw.get("kind"), pred_raw.get("arg")),
            before=raw.get("before"), after=raw.get("after"),
        ))
    return Automaton(nodes, edges, spec["start"])


def _run_hook(name: str, ctx: ContextStore, token: Token | None, where: str) -> bool:
    fn = _HOOK_REGISTRY.get(name)
    if fn is None:
        raise UnknownHook(name)
    try:
        return bool(fn(ctx, token))
    except AutomataError:
        raise
    except Exception as exc:
        raise HookPanic(name, where, exc) from exc


@dataclass
class _Frame:
    node_id: int
    pos: int
    snap: dict
    edge_idx: int = 0


def _search(a: Automaton, tokens: list[Token], start: int, budget: int,
            base_ctx: ContextStore, collect_ends: bool):
    """Shared DFS core.

    With collect_ends=False: returns (best_length, best_path) where path is
    the committed list of (edge_index, token_pos); lengths tie-break by DFS
    (= edge insertion) order. With collect_ends=True: returns the set of
    (node_id,) states reached having consumed every remaining token.
    """
    ctx = ContextStore(base_ctx.snapshot())
    start_node = a.nodes[a.start]
    if start_node.action:
        _run_hook(start_node.action, ctx, None, f"node {a.start}")

    steps = 0
    best_len = 0
    best_path: list[tuple[int, int]] | None = None
    end_states: set[int] = set()
    total = len(tokens)

    stack = [_Frame(a.start, start, ctx.snapshot())]
    path: list[tuple[int, int]] = []
    while stack:
        frame = stack[-1]
        out_edges = a.adjacency[frame.node_id]
        advanced = False
        while frame.edge_idx < len(out_edges):
            edge_index, edge = out_edges[frame.edge_idx]
            frame.edge_idx += 1
            if frame.pos >= total:
                break
            steps += 1
            if steps > budget:
                raise BudgetExceeded(budget)
            token = tokens[frame.pos]
            if not edge.predicate.accepts(token):
                continue
            ctx.restore(frame.snap)
            where = f"edge {edge.source}->{edge.target}"
            if edge.before and not _run_hook(edge.before, ctx, token, where):
                continue
            if edge.after:
                _run_hook(edge.after, ctx, token, where)
            target = a.nodes[edge.target]
            if target.action:
                _run_hook(target.action, ctx, token, f"node {target.id}")
            path.append((edge_index, frame.pos))
            new_pos = frame.pos + 1
            if collect_ends:
                if new_pos == total:
                    end_states.add(target.id)
            elif target.is_final and new_pos - start > best_len:
                best_len = new_pos - start
                best_path = list(path)
            stack.append(_Frame(target.id, new_pos, ctx.snapshot()))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if path and len(path) == len(stack):
                path.pop()

    if collect_ends:
        return end_states
    return best_len, best_path


def match_at(a: Automaton, tokens: list[Token], start: int = 0,
             *, step_budget: int = DEFAULT_STEP_BUDGET) -> MatchOutcome:
    """Longest match of ``tokens[start..]`` from the automaton's start node.

    All accepting paths are explored depth-first (context mutations on
    abandoned branches are rolled back); the longest consumed length wins,
    ties going to the lowest edge insertion order. Hooks are re-executed on
    the winning path against the automaton's live context, so a failed match
    leaves the context untouched.
    """
    if not 0 <= start <= len(tokens):
        raise IndexError(f"start {start} out of range 0..{len(tokens)}")
    best_len, best_path = _search(a, tokens, start, step_budget, a.context,
                                  collect_ends=False)
    if not best_path:
        return MatchOutcome(matched=False)

    # Commit: replay hooks along the winning path on the live context.
    start_node = a.nodes[a.start]
    if start_node.action:
        _run_hook(start_node.action, a.context, None, f"node {a.start}")
    trail: list[tuple[int, int]] = [(a.start, start)]
    for edge_index, pos in best_path:
        edge = a.edges[edge_index]
        token = tokens[pos]
        where = f"edge {edge.source}->{edge.target}"
        if edge.before:
            _run_hook(edge.before, a.context, token, where)
        if edge.after:
            _run_hook(edge.after, a.context, token, where)
        target = a.nodes[edge.target]
        if target.action:
            _run_hook(target.action, a.context, token, f"node {target.id}")
        trail.append((target.id, pos + 1))
    return MatchOutcome(matched=True, length=best_len, steps=tuple(trail))


def _continuation(a: Automaton, node_id: int, limit: int = 8) -> tuple[str, ...]:
    """Human-readable predicate chain expected after ``node_id``: follows
    single-edge nodes forward, stops at finals, branches, or loops."""
    descs: list[str] = []
    seen = {node_id}
    current = node_id
    while len(descs) < limit:
        if a.nodes[current].is_final:
            break
        out = a.adjacency[current]
        if not out:
            break
        if len(out) > 1:
            descs.append(" | ".join(edge.predicate.describe() for _, edge in out))
            break
        edge = out[0][1]
        descs.append(edge.predicate.describe())
        if edge.target in seen:
            break
        seen.add(edge.target)
        current = edge.target
    return tuple(descs)


def feed_partial(a: Automaton, tokens: list[Token],
                 *, step_budget: int = DEFAULT_STEP_BUDGET) -> PartialReport:
    """States the automaton can be in after consuming some suffix of
    ``tokens`` to its end (every suffix start is tried). A reached final
    state marks the report completed; non-final reachable states carry the
    predicates admissible next."""
    reached: dict[int, int] = {}  # node_id -> max tokens consumed
    total = len(tokens)
    for start in range(total):
        ends = _search(a, tokens, start, step_budget, a.context, collect_ends=True)
        for node_id in ends:
            if node_id == a.start:
                continue
            consumed = total - start
            if consumed > reached.get(node_id, 0):
                reached[node_id] = consumed
    states = []
    completed = False
    for node_id, consumed in reached.items():
        is_final = a.nodes[node_id].is_final
        completed = completed or is_final
        states.append(ActiveState(
            node_id=node_id,
            consumed=consumed,
            is_final=is_final,
            expected=_continuation(a, node_id),
        ))
    states.sort(key=lambda s: (-s.consumed, s.node_id))
    return PartialReport(states=tuple(states), completed=completed)


def to_obj(a: Automaton) -> dict:
    nodes = []
    for node_id in sorted(a.nodes):
        node = a.nodes[node_id]
        raw: dict = {"id": node.id, "final": node.is_final}
        if node.action:
            raw["action"] = node.action
        nodes.append(raw)
    edges = []
    for edge in a.edges:
        pred: dict = {"kind": edge.predicate.kind}
        if edge.predicate.arg is not None:
            pred["arg"] = edge.predicate.arg
        raw = {"from": edge.source, "to": edge.target, "pred": pred}
        if edge.before:
            raw["before"] = edge.before
        if edge.after:
            raw["after"] = edge.after
        edges.append(raw)
    return {"version": 1, "start": a.start, "nodes": nodes, "edges": edges}


def serialize(a: Automaton) -> bytes:
    """Versioned JSON encoding of the structure; hooks by registry name."""
    return json.dumps(to_obj(a), ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def deserialize(data: bytes | str) -> Automaton:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedPayload(f"payload is not UTF-8: {exc}") from exc
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedPayload(f"payload is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedPayload("payload must be a JSON object")
    if obj.get("version") != 1:
        raise MalformedPayload(f"unsupported version: {obj.get('version')!r}")
    try:
        return build_automaton(obj)
    except UnknownHookName:
        raise
    except UnknownHook as exc:
        raise UnknownHookName(exc.name) from None
