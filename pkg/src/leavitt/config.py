"""Run configuration shared by the CLI, the self-check suite and scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import DEFAULT_LATTICE_CAP
from .monoid import DEFAULT_EQ_DEPTH, DEFAULT_SEARCH_CAP


@dataclass(frozen=True)
class Bounds:
    eq_depth: int = DEFAULT_EQ_DEPTH
    search_cap: int = DEFAULT_SEARCH_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP

    def __post_init__(self):
        for name in ("eq_depth", "search_cap", "lattice_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class SelfcheckConfig:
    seed: int = 0
    samples: int = 40          # random draws per algebra/monoid property
    max_terms: int = 4
    max_len: int = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    paths: tuple[str, ...] = ()
    args: tuple[str, ...] = ()
    fmt: str = "text"
    bounds: Bounds = field(default_factory=Bounds)
    seed: int = 0

    def __post_init__(self):
        if self.fmt not in ("text", "json"):
            raise ValueError("format must be text or json")
