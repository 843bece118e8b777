"""Dependency removal between two fixed sets via dynamic sets.

A dynamic block is the set of unassigned vertices of one fixed set whose
list is exactly a given colour set. Blocks change as lists shrink, so they
are always recomputed from the current instance.

Terminology used throughout: a vertex *touches* a component when it is
adjacent to at least one of its vertices, and *dominates* it when it is
adjacent to all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .context import Context, ensure_context
from .errors import ClaimViolated, HDisconnected, TwoCrossingComponents
from .graph import component_masks, iter_bits, lowest_bit
from .instance import (
    FixedSetPartition,
    Instance,
    assign,
    branch_on_vertex,
    col,
    colour_key,
    dependents_into,
    has_dependency,
)
from .structure import dominating_seed_mask, explain_missing_seed, find_p5_mask


class Block(NamedTuple):
    fixed_index: int
    colours: int


@dataclass(frozen=True)
class DynamicPartition:
    by_list: dict[int, int]


@dataclass(frozen=True)
class HGraph:
    p_side: tuple[int, ...]
    q_side: tuple[int, ...]
    pivot: int

    @property
    def empty(self) -> bool:
        return not self.q_side

    @property
    def p_mask(self) -> int:
        out = 0
        for c in self.p_side:
            out |= c
        return out

    @property
    def q_mask(self) -> int:
        out = 0
        for c in self.q_side:
            out |= c
        return out


def dynamic_partition(inst: Instance, fixed_set: int) -> DynamicPartition:
    """Group the unassigned, non-empty-list vertices of ``fixed_set`` by exact list."""
    groups: dict[int, int] = {}
    for v in iter_bits(fixed_set):
        lv = inst.lists[v]
        if lv and not inst.assigned[v]:
            groups[lv] = groups.get(lv, 0) | (1 << v)
    return DynamicPartition({k: groups[k] for k in sorted(groups, key=colour_key)})


def pair_schedule(pa: DynamicPartition, pb: DynamicPartition) -> list[tuple[int, int]]:
    """Cross pairs of colour sets: larger first on the first side, then the second."""
    pairs = [(la, lb) for la in pa.by_list for lb in pb.by_list]
    pairs.sort(key=lambda p: (-p[0].bit_count(), -p[1].bit_count(), colour_key(p[0]), colour_key(p[1])))
    return pairs


def block_members(inst: Instance, part: FixedSetPartition, block: Block) -> int:
    out = 0
    lists, assigned = inst.lists, inst.assigned
    for v in iter_bits(part.fixed_sets[block.fixed_index]):
        if lists[v] == block.colours and not assigned[v]:
            out |= 1 << v
    return out


def _fixed_index(part: FixedSetPartition, block: int) -> int:
    for i, f in enumerate(part.fixed_sets):
        if block & ~f == 0:
            return i
    raise ValueError("block is not contained in a single fixed set")


def find_pivot(inst: Instance, part: FixedSetPartition, p: int, q: int) -> tuple[int, str]:
    """The dominator that sees all of one block and none of the other.

    Returns ``(vertex, side)`` where ``side`` names the dominated block,
    ``"P"`` or ``"Q"``. Empty blocks are rejected.
    """
    if not p or not q:
        raise ValueError("blocks must be non-empty")
    ia, ib = _fixed_index(part, p), _fixed_index(part, q)
    if ia == ib:
        raise ValueError("both blocks lie in the same fixed set")
    first = min(ia, ib)
    pivot = part.dominators[first]
    dominated, other = (p, q) if first == ia else (q, p)
    adj = inst.graph.adj[pivot]
    if dominated & ~adj or other & adj:
        raise AssertionError("fixed-set invariant broken: pivot does not separate the blocks")
    return pivot, "P" if first == ia else "Q"


def build_h(inst: Instance, p: int, q: int, pivot: int) -> HGraph:
    """Components of G(P) and G(Q) that carry a P-Q dependency.

    ``pivot`` must see every vertex of ``q`` and no vertex of ``p``. Without
    the pivot, the kept components must still form one connected piece,
    because two separate pieces with edges a-b and c-d (a, c in P) give the
    induced path a, b, pivot, d, c.
    """
    adj = inst.graph.adj
    p_keep = []
    for comp in component_masks(adj, p):
        if any(dependents_into(inst, v, q) for v in iter_bits(comp)):
            p_keep.append(comp)
    q_keep = []
    for comp in component_masks(adj, q):
        if any(dependents_into(inst, v, p) for v in iter_bits(comp)):
            q_keep.append(comp)
    h = HGraph(tuple(p_keep), tuple(q_keep), pivot)
    if h.empty:
        return h
    pieces = component_masks(adj, h.p_mask | h.q_mask)
    if len(pieces) > 1:
        ends = []
        for piece in pieces[:2]:
            a = next(v for v in iter_bits(piece & h.p_mask) if adj[v] & piece & h.q_mask)
            b = lowest_bit(adj[a] & piece & h.q_mask)
            ends.append((a, b))
        (a, b), (c, d) = ends
        raise HDisconnected("dependency graph between blocks is disconnected", (a, b, pivot, d, c))
    return h


def _touch_sets(adj, comp: int, q_side: tuple[int, ...]) -> dict[int, int]:
    out = {}
    for v in iter_bits(comp):
        t = 0
        for i, y in enumerate(q_side):
            if adj[v] & y:
                t |= 1 << i
        out[v] = t
    return out


def _crossing_witness(touch: dict[int, int]) -> tuple[int, int, int, int] | None:
    """``(a, b, i, j)`` with a touching Y_i but not Y_j and b the other way round."""
    items = list(touch.items())
    for idx, (a, ta) in enumerate(items):
        for b, tb in items[idx + 1:]:
            if ta & ~tb and tb & ~ta:
                return a, b, lowest_bit(ta & ~tb), lowest_bit(tb & ~ta)
    return None


def find_crossing_component(h: HGraph, inst: Instance) -> int | None:
    """The component of H(P) holding two vertices that see H(Q) crosswise, if any.

    A second such component means the graph is not P5-free.
    """
    adj = inst.graph.adj
    found = []
    for comp in h.p_side:
        witness = _crossing_witness(_touch_sets(adj, comp, h.q_side))
        if witness is not None:
            found.append((comp, witness))
    if not found:
        return None
    if len(found) > 1:
        (c1, (_, _, i1, j1)), (c2, (_, _, i2, j2)) = found[:2]
        region = (1 << h.pivot) | c1 | c2
        for i in (i1, j1, i2, j2):
            region |= h.q_side[i]
        certificate = find_p5_mask(adj, region)
        raise TwoCrossingComponents("two crossing components in H(P)", certificate)
    return found[0][0]


def seed_colourings(inst: Instance, seed: tuple[int, ...]) -> Iterator[Instance]:
    """Every proper list colouring of the seed vertices, applied in turn."""

    def walk(cur: Instance, i: int) -> Iterator[Instance]:
        if i == len(seed):
            yield cur
            return
        v = seed[i]
        for c in iter_bits(cur.lists[v]):
            child = assign(cur, v, c)
            if not child.dead:
                yield from walk(child, i + 1)

    return walk(inst, 0)


def remove_component(inst: Instance, comp: int, ctx: Context | None = None) -> list[Instance]:
    """Branch on all colourings of a dominating clique or P3 of ``G[comp]``.

    In every child each vertex of ``comp`` is assigned or has lost a colour.
    No seed within the colour budget means ``G[comp]`` holds a clique too
    large to colour, and the result is empty. Children that leave two
    adjacent vertices of ``comp`` with the same single colour are dropped.
    """
    ctx = ensure_context(ctx)
    adj = inst.graph.adj
    budget = col(inst, comp).bit_count()
    ctx.metrics.dominating_searches += 1
    seed = dominating_seed_mask(adj, comp, max(budget, 1), ctx.config.prefer)
    if seed is None:
        explain_missing_seed(adj, comp, max(budget, 1))
        return []
    children = [c for c in seed_colourings(inst, seed.vertices) if not _singleton_clash(c, comp)]
    ctx.created(len(children))
    ctx.emit(inst.depth, "remove-component", lowest_bit(comp), 0, len(children))
    return children


def _singleton_clash(inst: Instance, comp: int) -> bool:
    # two adjacent vertices left with the same single colour: certainly dead
    adj, lists = inst.graph.adj, inst.lists
    for v in iter_bits(comp):
        lv = lists[v]
        if lv & (lv - 1) == 0:
            for u in iter_bits(adj[v] & comp):
                if u > v and lists[u] == lv:
                    return True
    return False


def claim_vertex(inst: Instance, h: HGraph) -> tuple[int, int | None]:
    """A P-vertex touching every H(Q) component and dominating all but at most one.

    Returns the vertex and the one component it fails to dominate (or None).
    Chooses by most components touched, then most dominated, then smallest id.
    """
    adj = inst.graph.adj
    qs = h.q_side
    best = None
    for x in iter_bits(h.p_mask):
        touched = dominated = 0
        for y in qs:
            if adj[x] & y:
                touched += 1
                if not y & ~adj[x]:
                    dominated += 1
        key = (-touched, -dominated, x)
        if best is None or key < best[0]:
            best = (key, x)
    assert best is not None
    x = best[1]
    missed = [y for y in qs if not adj[x] & y]
    if missed:
        y2_comp = missed[0]
        tx = _touch_mask(adj, x, qs)
        x2 = y1_comp = None
        for cand in iter_bits(_touchers(adj, h.p_mask, y2_comp)):
            extra = tx & ~_touch_mask(adj, cand, qs)
            if extra and (x2 is None or not adj[x] >> cand & 1):
                x2, y1_comp = cand, qs[lowest_bit(extra)]
                if not adj[x] >> cand & 1:
                    break
        certificate = None
        if x2 is not None and not adj[x] >> x2 & 1:
            y1 = lowest_bit(y1_comp & adj[x])
            y2 = lowest_bit(y2_comp & adj[x2])
            certificate = (x, y1, h.pivot, y2, x2)
        else:
            certificate = find_p5_mask(adj, h.p_mask | h.q_mask | (1 << h.pivot))
        raise ClaimViolated("best P-vertex misses a component of H(Q)", certificate)
    partial = [y for y in qs if y & ~adj[x]]
    if len(partial) > 1:
        ends = []
        for y in partial[:2]:
            inner = next(v for v in iter_bits(y & adj[x]) if adj[v] & y & ~adj[x])
            outer = lowest_bit(adj[inner] & y & ~adj[x])
            ends.append((inner, outer))
        (y1, y1o), (y2, y2o) = ends
        raise ClaimViolated(
            "best P-vertex fails to dominate two components of H(Q)", (y1o, y1, x, y2, y2o)
        )
    return x, (partial[0] if partial else None)


def _touch_mask(adj, v: int, qs: tuple[int, ...]) -> int:
    out = 0
    for i, y in enumerate(qs):
        if adj[v] & y:
            out |= 1 << i
    return out


def _touchers(adj, candidates: int, comp: int) -> int:
    out = 0
    for v in iter_bits(candidates):
        if adj[v] & comp:
            out |= 1 << v
    return out


def _relabel(inst: Instance, part: FixedSetPartition, a: Block, b: Block) -> tuple[Block, Block, int]:
    """Order the blocks as (P, Q) with Q inside the pivot's fixed set."""
    first = min(a.fixed_index, b.fixed_index)
    pivot = part.dominators[first]
    if a.fixed_index == first:
        return b, a, pivot
    return a, b, pivot


def iter_dynamic_pair(
    inst: Instance,
    a: Block,
    b: Block,
    part: FixedSetPartition,
    ctx: Context | None = None,
) -> Iterator[Instance]:
    """Leaves (dead ones included) with no dependency between the two blocks."""
    ctx = ensure_context(ctx)
    if a.fixed_index == b.fixed_index:
        raise ValueError("blocks must come from different fixed sets")
    pb, qb, pivot = _relabel(inst, part, a, b)
    shared = pb.colours & qb.colours
    if not shared:
        yield inst
        return
    check = ctx.config.check_invariants
    leaves = 0
    stack = [inst]
    while stack:
        cur = stack.pop()
        if cur.dead:
            leaves += 1
            yield cur
            continue
        p = block_members(cur, part, pb)
        q = block_members(cur, part, qb)
        if check and p and q:
            find_pivot(cur, part, p, q)
        h = build_h(cur, p, q, pivot)
        if h.empty:
            leaves += 1
            yield cur
            continue
        crossing = find_crossing_component(h, cur)
        if crossing is not None:
            children = remove_component(cur, crossing, ctx)
        else:
            x, odd = claim_vertex(cur, h)
            children = []
            branched = branch_on_vertex(cur, x, shared)
            ctx.created(len(branched))
            ctx.emit(cur.depth, "claim-branch", x, shared, len(branched))
            for child in branched:
                if child.assigned[x] and odd is not None and not child.dead:
                    p_now = block_members(child, part, pb)
                    if has_dependency(child, odd & block_members(child, part, qb), p_now):
                        children.extend(remove_component(child, odd, ctx))
                        continue
                children.append(child)
        stack.extend(reversed(children))
    ctx.pair_leaves(leaves)


def remove_dynamic_pair(
    inst: Instance,
    a: Block,
    b: Block,
    part: FixedSetPartition,
    ctx: Context | None = None,
) -> list[Instance]:
    return list(iter_dynamic_pair(inst, a, b, part, ctx))


def next_dependent_pair(
    inst: Instance, part: FixedSetPartition, ia: int, ib: int
) -> tuple[Block, Block] | None:
    pa = dynamic_partition(inst, part.fixed_sets[ia])
    pb = dynamic_partition(inst, part.fixed_sets[ib])
    for la, lb in pair_schedule(pa, pb):
        if la & lb and has_dependency(inst, pa.by_list[la], pb.by_list[lb]):
            return Block(ia, la), Block(ib, lb)
    return None


def iter_fixed_pair_m2(
    inst: Instance,
    part: FixedSetPartition,
    ia: int,
    ib: int,
    ctx: Context | None = None,
) -> Iterator[Instance]:
    """Live leaves with no dependency between fixed sets ``ia`` and ``ib``.

    Always works on the first dependent pair of the schedule, recomputed from
    the current lists, so a vertex pushed into an already-visited block by a
    later assignment is still picked up.
    """
    ctx = ensure_context(ctx)
    if ia == ib:
        raise ValueError("need two distinct fixed sets")
    stack = [inst]
    while stack:
        cur = stack.pop()
        if cur.dead:
            continue
        nxt = next_dependent_pair(cur, part, ia, ib)
        if nxt is None:
            yield cur
            continue
        leaves = [leaf for leaf in iter_dynamic_pair(cur, *nxt, part, ctx) if not leaf.dead]
        stack.extend(reversed(leaves))


def remove_fixed_pair_m2(
    inst: Instance,
    part: FixedSetPartition,
    ia: int,
    ib: int,
    ctx: Context | None = None,
) -> list[Instance]:
    return list(iter_fixed_pair_m2(inst, part, ia, ib, ctx))
