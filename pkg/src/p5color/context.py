"""Solver configuration, metrics and the shared per-solve context."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from typing import Literal, TextIO

from .errors import BudgetExceeded
from .instance import colours_of

DEFAULT_MAX_INSTANCES = 10**7


@dataclass(frozen=True)
class SolveConfig:
    method: Literal["one", "two"] = "two"
    validate_input: Literal["off", "full_p5_check"] = "off"
    max_instances: int | None = DEFAULT_MAX_INSTANCES
    parallelism: int = 1
    # which dominating seed is tried first; "clique" follows the smallest-clique-first rule
    prefer: Literal["clique", "p3"] = "clique"
    # re-check partition, independence and shrinkage invariants on every branch
    check_invariants: bool = False

    def __post_init__(self) -> None:
        if self.method not in ("one", "two"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.validate_input not in ("off", "full_p5_check"):
            raise ValueError(f"unknown validation mode {self.validate_input!r}")
        if self.max_instances is not None and self.max_instances < 1:
            raise ValueError("max_instances must be at least 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.prefer not in ("clique", "p3"):
            raise ValueError(f"unknown seed preference {self.prefer!r}")


@dataclass
class SolveMetrics:
    instances_created: int = 0
    max_depth: int = 0
    dominating_searches: int = 0
    wall_time: float = 0.0
    # largest leaf count produced for one stable pair (Method I) / dynamic pair (Method II)
    max_pair_leaves: int = 0

    def merge(self, other: SolveMetrics) -> None:
        self.instances_created += other.instances_created
        self.max_depth = max(self.max_depth, other.max_depth)
        self.dominating_searches += other.dominating_searches
        self.max_pair_leaves = max(self.max_pair_leaves, other.max_pair_leaves)

    def as_dict(self) -> dict[str, int | float]:
        return {
            "instances_created": self.instances_created,
            "max_depth": self.max_depth,
            "dominating_searches": self.dominating_searches,
            "max_pair_leaves": self.max_pair_leaves,
            "wall_time": self.wall_time,
        }


def trace_from_env() -> TextIO | None:
    value = os.environ.get("P5COLOR_TRACE", "")
    if value in ("", "0"):
        return None
    if value in ("1", "-", "stderr"):
        return sys.stderr
    return open(value, "a")


@dataclass
class Context:
    config: SolveConfig = field(default_factory=SolveConfig)
    metrics: SolveMetrics = field(default_factory=SolveMetrics)
    trace: TextIO | None = None

    def created(self, count: int = 1) -> None:
        self.metrics.instances_created += count
        limit = self.config.max_instances
        if limit is not None and self.metrics.instances_created > limit:
            raise BudgetExceeded(limit)

    def reached(self, depth: int) -> None:
        if depth > self.metrics.max_depth:
            self.metrics.max_depth = depth

    def pair_leaves(self, count: int) -> None:
        if count > self.metrics.max_pair_leaves:
            self.metrics.max_pair_leaves = count

    def emit(
        self,
        depth: int,
        action: str,
        vertex: int | None = None,
        colours: int = 0,
        children: int | None = None,
    ) -> None:
        if self.trace is None:
            return
        fields = [f"depth={depth}", f"action={action}"]
        if vertex is not None:
            fields.append(f"vertex={vertex + 1}")
        if colours:
            fields.append("colours=" + ",".join(map(str, colours_of(colours))))
        if children is not None:
            fields.append(f"children={children}")
        print(" ".join(fields), file=self.trace)


def ensure_context(ctx: Context | None) -> Context:
    return Context() if ctx is None else ctx
