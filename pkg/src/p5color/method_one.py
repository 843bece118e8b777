"""Dependency removal between two fixed sets by stable-set decomposition.

Each fixed set is split into stable sets; for every pair of stable sets
(X from one fixed set, Y from the other) a vertex of X' adjacent to all of
Y' is branched on with the colours ``col(Y')`` until X' is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .context import Context, ensure_context
from .errors import NoLemma1Vertex
from .graph import Graph, iter_bits, lowest_bit
from .instance import Instance, branch_on_vertex, col, dependents_into, has_dependency

# (graph, region mask, number of colours) -> {vertex: colour} or None
ColourCallback = Callable[[Graph, int, int], "dict[int, int] | None"]


@dataclass(frozen=True)
class StableSetDecomposition:
    parts: tuple[int, ...]
    source: int


@dataclass(frozen=True)
class DependentPair:
    x_side: int
    y_side: int

    def __bool__(self) -> bool:
        return bool(self.x_side)


def greedy_parts(adj, region: int, limit: int) -> list[int] | None:
    """Largest-degree-first greedy split of ``region`` into at most ``limit`` stable sets."""
    order = sorted(iter_bits(region), key=lambda v: (-(adj[v] & region).bit_count(), v))
    parts: list[int] = []
    for v in order:
        for i, part in enumerate(parts):
            if not adj[v] & part:
                parts[i] = part | (1 << v)
                break
        else:
            if len(parts) == limit:
                return None
            parts.append(1 << v)
    return parts


def stable_decomposition(
    inst: Instance,
    a: int,
    colour_region: ColourCallback,
) -> StableSetDecomposition | None:
    """Split the fixed set ``a`` into at most ``|col(a)|`` stable sets.

    Greedy first; if greedy needs too many parts, ``colour_region`` decides
    ``|col(a)|``-colourability of ``G[a]`` exactly. ``None`` means ``G[a]``
    cannot be coloured from its own colours, so the instance is dead.
    """
    if not a:
        return StableSetDecomposition((), 0)
    width = col(inst, a).bit_count()
    parts = greedy_parts(inst.graph.adj, a, width)
    if parts is None:
        colouring = colour_region(inst.graph, a, width)
        if colouring is None:
            return None
        by_colour: dict[int, int] = {}
        for v, c in colouring.items():
            by_colour[c] = by_colour.get(c, 0) | (1 << v)
        parts = [by_colour[c] for c in sorted(by_colour)]
    return StableSetDecomposition(tuple(parts), a)


def dependent_pair(inst: Instance, x: int, y: int) -> DependentPair:
    xs = ys = 0
    for v in iter_bits(x):
        hit = dependents_into(inst, v, y)
        if hit:
            xs |= 1 << v
            ys |= hit
    return DependentPair(xs, ys)


def lemma1_vertex(inst: Instance, pair: DependentPair, pivot: int | None = None) -> int:
    """A vertex of X' adjacent to every vertex of Y'.

    Picks the X' vertex with the most neighbours in Y' (smallest id on ties)
    and checks it covers Y'. ``pivot`` is the dominator adjacent to exactly
    one of the two fixed sets; it is only used to build the certificate.
    """
    if not pair:
        raise ValueError("empty dependent pair")
    adj = inst.graph.adj
    xs, ys = pair.x_side, pair.y_side
    best, best_count = -1, -1
    for v in iter_bits(xs):
        count = (adj[v] & ys).bit_count()
        if count > best_count:
            best, best_count = v, count
    if not ys & ~adj[best]:
        return best

    x1 = best
    y2 = lowest_bit(ys & ~adj[x1])
    x2 = lowest_bit(xs & adj[y2])
    y1 = lowest_bit(adj[x1] & ys & ~adj[x2])
    certificate = None
    if pivot is not None:
        if adj[pivot] >> x1 & 1:
            certificate = (y1, x1, pivot, x2, y2)
        else:
            certificate = (x1, y1, pivot, y2, x2)
    raise NoLemma1Vertex(
        f"no vertex of X' dominates Y' (x1={x1}, x2={x2}, y1={y1}, y2={y2})", certificate
    )


def iter_stable_pair(
    inst: Instance,
    x: int,
    y: int,
    pivot: int | None = None,
    ctx: Context | None = None,
) -> Iterator[Instance]:
    """Leaves (dead ones included) in which X and Y carry no dependency."""
    ctx = ensure_context(ctx)
    stack = [inst]
    leaves = 0
    while stack:
        cur = stack.pop()
        if cur.dead:
            leaves += 1
            yield cur
            continue
        pair = dependent_pair(cur, x, y)
        if not pair:
            leaves += 1
            yield cur
            continue
        v = lemma1_vertex(cur, pair, pivot)
        cset = col(cur, pair.y_side)
        children = branch_on_vertex(cur, v, cset)
        ctx.created(len(children))
        ctx.emit(cur.depth, "lemma1-branch", v, cset, len(children))
        stack.extend(reversed(children))
    ctx.pair_leaves(leaves)


def remove_stable_pair(
    inst: Instance,
    x: int,
    y: int,
    pivot: int | None = None,
    ctx: Context | None = None,
) -> list[Instance]:
    return list(iter_stable_pair(inst, x, y, pivot, ctx))


def iter_fixed_pair_m1(
    inst: Instance,
    da: StableSetDecomposition,
    db: StableSetDecomposition,
    pivot: int | None = None,
    ctx: Context | None = None,
) -> Iterator[Instance]:
    """Live leaves with no dependency between ``da.source`` and ``db.source``."""
    ctx = ensure_context(ctx)
    pairs = [(xa, yb) for xa in da.parts for yb in db.parts]

    def walk(cur: Instance, index: int) -> Iterator[Instance]:
        while index < len(pairs) and not has_dependency(cur, *pairs[index]):
            index += 1
        if index == len(pairs):
            yield cur
            return
        xa, yb = pairs[index]
        for leaf in iter_stable_pair(cur, xa, yb, pivot, ctx):
            if not leaf.dead:
                yield from walk(leaf, index + 1)

    for leaf in walk(inst, 0):
        # lists only shrink, so a cleared stable pair stays clear; this is a guard
        if has_dependency(leaf, da.source, db.source):
            yield from walk(leaf, 0)
        else:
            yield leaf


def remove_fixed_pair_m1(
    inst: Instance,
    a: int,
    b: int,
    colour_region: ColourCallback,
    pivot: int | None = None,
    ctx: Context | None = None,
) -> list[Instance]:
    if inst.dead:
        return []
    if not has_dependency(inst, a, b):
        return [inst]
    da = stable_decomposition(inst, a, colour_region)
    if da is None:
        return []
    db = stable_decomposition(inst, b, colour_region)
    if db is None:
        return []
    return list(iter_fixed_pair_m1(inst, da, db, pivot, ctx))
