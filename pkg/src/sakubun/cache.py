"""Registry cache: pre-compiled automata bundled with pattern metadata so a
warm start skips DSL compilation. A cache is bound to the exact pattern
files it came from by content hash; stale or version-skewed caches are
rejected."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

from . import automata
from .grammar import GrammarPattern, Registry

CACHE_VERSION = 1


class CacheError(Exception):
    pass


class StaleCache(CacheError):
    def __init__(self, expected: str, found: str):
        super().__init__(f"pattern files changed since cache was written "
                         f"(hash {found[:12]}.. != {expected[:12]}..)")
        self.expected = expected
        self.found = found


class VersionMismatch(CacheError):
    def __init__(self, version):
        super().__init__(f"cache version {version!r} not supported")
        self.version = version


def _pattern_files(patterns: str | Path) -> list[Path]:
    path = Path(patterns)
    return sorted(path.glob("*.json")) if path.is_dir() else [path]


def content_hash(patterns: str | Path) -> str:
    digest = hashlib.sha256()
    for file in _pattern_files(patterns):
        digest.update(file.name.encode("utf-8"))
        digest.update(b"\x00")
        digest.update(file.read_bytes())
    return digest.hexdigest()


def cache_registry(registry: Registry, path: str | Path, patterns: str | Path) -> None:
    entries = []
    for pattern, template in registry.items():
        entries.append({
            "id": pattern.id,
            "display_name": pattern.display_name,
            "level": pattern.level,
            "description": pattern.description,
            "dsl": pattern.body,
            "fixtures": {"positive": list(pattern.fixtures_positive),
                         "negative": list(pattern.fixtures_negative)},
            "automaton": automata.to_obj(template),
        })
    payload = {"version": CACHE_VERSION,
               "source_hash": content_hash(patterns),
               "patterns": entries}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, ensure_ascii=False, separators=(",", ":"))


def load_cached(path: str | Path, patterns: str | Path) -> Registry:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CacheError(f"cache is not valid JSON: {exc}") from None
    if payload.get("version") != CACHE_VERSION:
        raise VersionMismatch(payload.get("version"))
    expected = payload.get("source_hash", "")
    found = content_hash(patterns)
    if expected != found:
        raise StaleCache(expected, found)
    entries = {}
    for raw in payload["patterns"]:
        pattern = GrammarPattern(
            id=raw["id"],
            display_name=raw["display_name"],
            level=raw["level"],
            description=raw.get("description", ""),
            body=raw.get("dsl", ""),
            fixtures_positive=tuple(raw.get("fixtures", {}).get("positive", ())),
            fixtures_negative=tuple(raw.get("fixtures", {}).get("negative", ())),
        )
        template = automata.build_automaton(raw["automaton"])
        entries[pattern.id] = (pattern, template)
    return Registry(entries)
