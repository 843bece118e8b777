"""Ground truth and inputs for testing: brute-force oracle, generators, corpus.

Nothing here uses the solver's algorithmic code; the oracle and generators
depend on ``graph`` (and ``structure.is_p5_free`` for rejection sampling).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .graph import Graph, complete_multipartite, iter_bits
from .instance import Instance, make_instance
from .structure import is_p5_free

ORACLE_CAP = 20


class OracleCapExceeded(ValueError):
    pass


def oracle_list_colouring(inst: Instance, cap: int = ORACLE_CAP) -> tuple[int, ...] | None:
    """Exhaustive backtracking; returns a colouring or None when uncolourable.

    Vertices are taken by decreasing degree; the only pruning is dropping a
    branch as soon as some uncoloured vertex runs out of colours.
    """
    g = inst.graph
    if g.n > cap:
        raise OracleCapExceeded(f"oracle limited to {cap} vertices, got {g.n}")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colours = [0] * g.n

    def extend(i: int, lists: list[int]) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in iter_bits(lists[v]):
            bit = 1 << c
            new = lists[:]
            ok = True
            for u in iter_bits(g.adj[v]):
                if not colours[u] and new[u] & bit:
                    new[u] &= ~bit
                    if not new[u]:
                        ok = False
                        break
            if not ok:
                continue
            colours[v] = c
            if extend(i + 1, new):
                return True
            colours[v] = 0
        return False

    lists = list(inst.lists)
    if any(not lst for lst in lists):
        return None
    return tuple(colours) if extend(0, lists) else None


@dataclass(frozen=True)
class GenSpec:
    """One generated graph. ``params`` holds family-specific settings.

    split: ``clique`` (clique size, default random), ``p`` (cross-edge prob.)
    cograph: ``p_join`` (probability an internal cotree node is a join)
    multipartite: ``parts`` (tuple of part sizes; ``n`` is ignored)
    er_rejection: ``p`` (edge probability), ``tries`` (retry limit)
    """

    family: str
    n: int
    rng_seed: int
    params: dict = field(default_factory=dict)

    def describe(self) -> str:
        fields = [self.family, f"n={self.n}"]
        for key in sorted(self.params):
            value = self.params[key]
            if isinstance(value, (tuple, list)):
                value = ",".join(map(str, value))
            fields.append(f"{key}={value}")
        fields.append(f"seed={self.rng_seed}")
        return " ".join(fields)


FAMILIES = ("split", "cograph", "multipartite", "er_rejection")


class GenerationFailed(RuntimeError):
    pass


def generate(spec: GenSpec) -> Graph:
    rng = random.Random(spec.rng_seed)
    if spec.family == "split":
        return _split(spec.n, rng, spec.params)
    if spec.family == "cograph":
        return _cograph(spec.n, rng, spec.params.get("p_join", 0.5))
    if spec.family == "multipartite":
        parts = spec.params.get("parts")
        if parts is None:
            parts = _random_parts(spec.n, rng)
        return complete_multipartite(tuple(parts))
    if spec.family == "er_rejection":
        return _er_rejection(spec.n, rng, spec.params)
    raise ValueError(f"unknown family {spec.family!r}")


def _split(n: int, rng: random.Random, params: dict) -> Graph:
    size = params.get("clique")
    if size is None:
        size = rng.randint(1, max(1, n))
    size = min(size, n)
    p = params.get("p", 0.5)
    edges = [(u, v) for u in range(size) for v in range(u + 1, size)]
    for s in range(size, n):
        for c in range(size):
            if rng.random() < p:
                edges.append((c, s))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def _cograph(n: int, rng: random.Random, p_join: float) -> Graph:
    # random cotree: split the vertex range recursively, join or union the halves
    adj = [0] * n

    def build(lo: int, hi: int) -> None:
        if hi - lo <= 1:
            return
        cut = rng.randint(lo + 1, hi - 1)
        build(lo, cut)
        build(cut, hi)
        if rng.random() < p_join:
            left = ((1 << cut) - 1) & ~((1 << lo) - 1)
            right = ((1 << hi) - 1) & ~((1 << cut) - 1)
            for v in range(lo, cut):
                adj[v] |= right
            for v in range(cut, hi):
                adj[v] |= left

    build(0, n)
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u]) if u < v]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def _random_parts(n: int, rng: random.Random) -> tuple[int, ...]:
    parts = []
    left = n
    while left:
        size = rng.randint(1, left)
        parts.append(size)
        left -= size
    return tuple(parts)


def _er_rejection(n: int, rng: random.Random, params: dict) -> Graph:
    if n > 12:
        raise ValueError("rejection sampling is limited to n <= 12")
    p = params.get("p", 0.3)
    tries = params.get("tries", 10_000)
    for _ in range(tries):
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if is_p5_free(g):
            return g
    raise GenerationFailed(f"no P5-free G({n}, {p}) sample in {tries} tries")


def random_sublists(g: Graph, k: int, seed: int) -> Instance:
    """Every vertex gets a uniformly random non-empty subset of 1..k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rng = random.Random(seed)
    lists = []
    for _ in range(g.n):
        mask = rng.randint(1, (1 << k) - 1)
        lists.append([c + 1 for c in range(k) if mask >> c & 1])
    return make_instance(g, lists, k)


def parse_manifest_line(line: str) -> tuple[str, GenSpec] | None:
    """``<id> <family> n=<n> [key=value ...] seed=<s>``; ``#`` starts a comment."""
    line = line.split("#", 1)[0].strip()
    if not line:
        return None
    fields = line.split()
    if len(fields) < 3:
        raise ValueError(f"malformed manifest line {line!r}")
    ident, family, *pairs = fields
    values = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {pair!r}")
        values[key] = value
    n = int(values.pop("n"))
    seed = int(values.pop("seed"))
    params: dict = {}
    for key, value in values.items():
        if key == "parts":
            params[key] = tuple(int(x) for x in value.split(","))
        elif key in ("clique", "tries"):
            params[key] = int(value)
        else:
            params[key] = float(value)
    return ident, GenSpec(family, n, seed, params)


def read_manifest(path: str | Path) -> list[tuple[str, GenSpec]]:
    out = []
    for line in Path(path).read_text().splitlines():
        parsed = parse_manifest_line(line)
        if parsed is not None:
            out.append(parsed)
    return out


def write_manifest(entries: Iterable[tuple[str, GenSpec]]) -> str:
    return "".join(f"{ident} {spec.describe()}\n" for ident, spec in entries)


def default_corpus(count_per_family: int = 130, max_n: int = 14, base_seed: int = 20240501) -> list[tuple[str, GenSpec]]:
    """The checked-in acceptance corpus (regenerated by ``scripts/make_corpus.py``)."""
    rng = random.Random(base_seed)
    out = []
    for family in FAMILIES:
        for i in range(count_per_family):
            seed = rng.getrandbits(32)
            top = 12 if family == "er_rejection" else max_n
            n = rng.randint(3, top)
            params: dict = {}
            if family == "split":
                params = {"clique": rng.randint(1, min(n, 5)), "p": round(rng.uniform(0.2, 0.8), 2)}
            elif family == "cograph":
                params = {"p_join": round(rng.uniform(0.3, 0.7), 2)}
            elif family == "multipartite":
                parts = _random_parts_bounded(n, rng, 5)
                params = {"parts": parts}
                n = sum(parts)
            elif family == "er_rejection":
                # mid densities are almost never P5-free at n=12
                band = (0.08, 0.2) if rng.random() < 0.5 else (0.65, 0.9)
                params = {"p": round(rng.uniform(*band), 2)}
            out.append((f"{family}-{i:03d}", GenSpec(family, n, seed, params)))
    return out


def _random_parts_bounded(n: int, rng: random.Random, max_parts: int) -> tuple[int, ...]:
    count = rng.randint(1, min(n, max_parts))
    cuts = sorted(rng.sample(range(1, n), count - 1))
    bounds = [0, *cuts, n]
    return tuple(bounds[i + 1] - bounds[i] for i in range(count))
