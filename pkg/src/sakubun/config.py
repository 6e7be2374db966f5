"""Runtime configuration: one JSON file, every field overridable by a CLI
flag of the same name."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

from .scoring import ScoreRange, ScoringParams


class ConfigError(Exception):
    pass


_DEFAULT_GRADE_RANGES = {"A": [90.0, 100.0], "B": [80.0, 90.0],
                         "C": [70.0, 80.0], "D": [60.0, 70.0]}


@dataclass
class Config:
    mode: str = "sum"
    score_range: list = field(default_factory=lambda: [50.0, 100.0])
    k: int = 4
    labels: list = field(default_factory=lambda: ["A", "B", "C", "D"])
    grade_ranges: dict = field(default_factory=lambda: dict(_DEFAULT_GRADE_RANGES))
    seed: int = 0
    outlier_multiplier: float = 2.0
    penalty_factor: float = 0.8
    any_star_bound: int = 12
    step_budget: int = 10_000
    dictionary_mode: str = "corpus_local"
    lexicon_path: str | None = None
    patterns_path: str | None = None
    cache_path: str | None = None

    def validate(self) -> "Config":
        if self.mode not in ("sum", "cluster"):
            raise ConfigError(f"mode: must be 'sum' or 'cluster', got {self.mode!r}")
        if not (isinstance(self.score_range, (list, tuple)) and len(self.score_range) == 2
                and self.score_range[0] < self.score_range[1]):
            raise ConfigError(f"score_range: need [lo, hi] with lo < hi, got {self.score_range!r}")
        if not isinstance(self.k, int) or self.k < 2:
            raise ConfigError(f"k: must be an integer >= 2, got {self.k!r}")
        if len(self.labels) != self.k:
            raise ConfigError(f"labels: need exactly k={self.k} labels, got {self.labels!r}")
        for label in self.labels:
            if label not in self.grade_ranges:
                raise ConfigError(f"grade_ranges: missing range for label {label!r}")
            lo_hi = self.grade_ranges[label]
            if not (len(lo_hi) == 2 and lo_hi[0] < lo_hi[1]):
                raise ConfigError(f"grade_ranges[{label}]: need [lo, hi] with lo < hi")
        if not 0.0 <= self.penalty_factor <= 1.0:
            raise ConfigError(f"penalty_factor: must be in [0, 1], got {self.penalty_factor!r}")
        if self.outlier_multiplier <= 0:
            raise ConfigError(f"outlier_multiplier: must be > 0, got {self.outlier_multiplier!r}")
        if not isinstance(self.any_star_bound, int) or not 1 <= self.any_star_bound <= 50:
            raise ConfigError(f"any_star_bound: must be in 1..50, got {self.any_star_bound!r}")
        if not isinstance(self.step_budget, int) or self.step_budget < 1:
            raise ConfigError(f"step_budget: must be a positive integer, got {self.step_budget!r}")
        if self.dictionary_mode not in ("corpus_local", "global"):
            raise ConfigError(f"dictionary_mode: must be 'corpus_local' or 'global', "
                              f"got {self.dictionary_mode!r}")
        return self

    def scoring_params(self, seed: int | None = None) -> ScoringParams:
        return ScoringParams(
            mode=self.mode,
            score_range=ScoreRange(*map(float, self.score_range)),
            k=self.k,
            labels=tuple(self.labels),
            grade_ranges={label: ScoreRange(*map(float, self.grade_ranges[label]))
                          for label in self.labels},
            seed=self.seed if seed is None else seed,
            outlier_multiplier=self.outlier_multiplier,
            penalty_factor=self.penalty_factor,
        )


def load_config(path: str | Path | None = None, **overrides) -> Config:
    """Defaults <- JSON file <- keyword overrides (CLI flags)."""
    values: dict = {}
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config is not valid JSON: {exc}") from None
        known = {f.name for f in fields(Config)}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        values.update(raw)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Config(**values).validate()
