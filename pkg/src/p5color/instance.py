"""List-colouring subproblems.

A colour set is an int bitmask where bit ``c`` stands for colour ``c``
(colours are ``1..k``, bit 0 is never used). ``Instance`` is a persistent
value: every operation returns new instances and leaves its input alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .graph import Graph, iter_bits


def colour_mask(colours: Iterable[int]) -> int:
    mask = 0
    for c in colours:
        if c < 1:
            raise ValueError(f"colours are positive integers, got {c}")
        mask |= 1 << c
    return mask


def colours_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def universe_mask(k: int) -> int:
    return ((1 << k) - 1) << 1


def colour_key(mask: int) -> tuple[int, ...]:
    """Sort key for colour sets: lexicographic on the sorted colour tuple."""
    return colours_of(mask)


@dataclass(frozen=True, slots=True)
class Instance:
    graph: Graph
    lists: tuple[int, ...]
    assigned: tuple[int, ...]  # 0 means unassigned
    universe: int
    depth: int = 0
    label: str | None = None
    dead: bool = field(default=False, compare=False)

    def colours(self, v: int) -> tuple[int, ...]:
        return colours_of(self.lists[v])

    def is_assigned(self, v: int) -> bool:
        return self.assigned[v] != 0


def make_instance(g: Graph, lists: Sequence[Iterable[int]], k: int) -> Instance:
    """Instance with explicit lists (each a collection of colours in 1..k)."""
    if len(lists) != g.n:
        raise ValueError("need one list per vertex")
    universe = universe_mask(k)
    masks = []
    for v, lst in enumerate(lists):
        m = colour_mask(lst)
        if m & ~universe:
            raise ValueError(f"list of vertex {v} leaves the universe 1..{k}")
        masks.append(m)
    return Instance(g, tuple(masks), (0,) * g.n, universe, dead=0 in masks)


def full_instance(g: Graph, k: int) -> Instance:
    if k < 0:
        raise ValueError("k must be non-negative")
    u = universe_mask(k)
    return Instance(g, (u,) * g.n, (0,) * g.n, u, dead=g.n > 0 and k == 0)


class ColourNotInList(ValueError):
    pass


def assign(inst: Instance, v: int, c: int) -> Instance:
    """Colour ``v`` with ``c`` and strike ``c`` from every neighbour's list."""
    lists = inst.lists
    bit = 1 << c
    if not lists[v] & bit:
        raise ColourNotInList(f"colour {c} not in list of vertex {v}")
    new = list(lists)
    new[v] = bit
    dead = False
    for u in iter_bits(inst.graph.adj[v]):
        lu = new[u]
        if lu & bit:
            lu &= ~bit
            new[u] = lu
            if not lu:
                dead = True
    assigned = list(inst.assigned)
    assigned[v] = c
    return Instance(
        inst.graph,
        tuple(new),
        tuple(assigned),
        inst.universe,
        inst.depth + 1,
        f"{v}={c}",
        dead or inst.dead,
    )


def restrict(inst: Instance, v: int, keep: int) -> Instance:
    """Shrink the list of ``v`` to ``lists[v] & keep``."""
    new = list(inst.lists)
    new[v] &= keep
    return Instance(
        inst.graph,
        tuple(new),
        inst.assigned,
        inst.universe,
        inst.depth + 1,
        f"{v}:{','.join(map(str, colours_of(new[v])))}",
        inst.dead or not new[v],
    )


def branch_on_vertex(inst: Instance, v: int, cset: int) -> list[Instance]:
    """Split ``inst`` on the colour of ``v``.

    One child per colour in ``lists[v] & cset`` (assigned and propagated),
    then a residual child with ``lists[v] - cset`` unless that is empty.
    Some child is colourable iff ``inst`` is.
    """
    lv = inst.lists[v]
    children = [assign(inst, v, c) for c in iter_bits(lv & cset)]
    rest = lv & ~cset
    if rest:
        children.append(restrict(inst, v, rest) if rest != lv else inst)
    return children


def dependent(inst: Instance, u: int, v: int) -> bool:
    return bool(inst.graph.adj[u] >> v & 1) and bool(inst.lists[u] & inst.lists[v])


def col(inst: Instance, s: Iterable[int] | int) -> int:
    """Union of the lists over ``s`` (a vertex mask or iterable)."""
    lists = inst.lists
    out = 0
    vertices = iter_bits(s) if isinstance(s, int) else s
    for v in vertices:
        out |= lists[v]
    return out


def dependents_into(inst: Instance, v: int, target: int) -> int:
    """Members of ``target`` adjacent to ``v`` whose lists meet that of ``v``."""
    lv = inst.lists[v]
    out = 0
    lists = inst.lists
    for u in iter_bits(inst.graph.adj[v] & target):
        if lists[u] & lv:
            out |= 1 << u
    return out


def has_dependency(inst: Instance, a: int, b: int) -> bool:
    """Any dependent pair with one end in mask ``a`` and the other in ``b``."""
    lists = inst.lists
    adj = inst.graph.adj
    for u in iter_bits(a):
        lu = lists[u]
        for w in iter_bits(adj[u] & b):
            if lists[w] & lu:
                return True
    return False


@dataclass(frozen=True)
class FixedSetPartition:
    """Ordered dominators with their colours and the fixed sets they induce.

    ``fixed_sets[i]`` (a vertex mask) holds the vertices adjacent to
    ``dominators[i]`` but to none of the earlier dominators.
    """

    dominators: tuple[int, ...]
    colours: tuple[int, ...]
    fixed_sets: tuple[int, ...]


class PartitionError(AssertionError):
    pass


def fixed_set_partition(inst: Instance, seed: Sequence[int], component: int) -> FixedSetPartition:
    adj = inst.graph.adj
    seed_mask = 0
    for d in seed:
        if not inst.assigned[d]:
            raise PartitionError(f"dominator {d} is not coloured")
        seed_mask |= 1 << d
    rest = component & ~seed_mask
    sets = []
    for d in seed:
        f = rest & adj[d]
        sets.append(f)
        rest &= ~f
    if rest:
        raise PartitionError("seed does not dominate the component")
    return FixedSetPartition(tuple(seed), tuple(inst.assigned[d] for d in seed), tuple(sets))


def check_partition(inst: Instance, part: FixedSetPartition, component: int) -> None:
    """Raise ``PartitionError`` if any fixed-set invariant fails."""
    adj = inst.graph.adj
    covered = 0
    for d in part.dominators:
        covered |= 1 << d
    for i, (d, f) in enumerate(zip(part.dominators, part.fixed_sets)):
        if f & covered:
            raise PartitionError("fixed sets overlap")
        covered |= f
        for v in iter_bits(f):
            if not adj[d] >> v & 1:
                raise PartitionError(f"vertex {v} of F_{i + 1} not adjacent to its dominator")
            for earlier in part.dominators[:i]:
                if adj[earlier] >> v & 1:
                    raise PartitionError(f"vertex {v} of F_{i + 1} sees an earlier dominator")
            if inst.lists[v] & (1 << part.colours[i]):
                raise PartitionError(f"vertex {v} still lists its dominator's colour")
    if covered != component:
        raise PartitionError("partition does not cover the component")


def format_instance(inst: Instance) -> str:
    """Line-based dump: ``v: c1 c2 ...`` (1-based vertex), ``*`` marks an assignment."""
    lines = []
    for v in range(inst.graph.n):
        fields = [f"{v + 1}:", *map(str, inst.colours(v))]
        if inst.assigned[v]:
            fields.append("*")
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def parse_lists(text: str, n: int) -> list[tuple[int, ...]]:
    """Read a lists file (``v: c1 c2 ...`` per line, 1-based vertices).

    Vertices with no line keep ``None`` and are filled in by the caller.
    """
    out: list[tuple[int, ...] | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'v: colours'")
        v = int(head) - 1
        if not 0 <= v < n:
            raise ValueError(f"line {lineno}: vertex {v + 1} out of range")
        out[v] = tuple(int(t) for t in tail.replace("*", " ").split())
    return out  # type: ignore[return-value]


def with_depth(inst: Instance, depth: int) -> Instance:
    return replace(inst, depth=depth)
