"""Induced-P5 detection and the dominating clique / P3 search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .errors import GraphNotConnected, NotP5Free
from .graph import Graph, bits_of, component_masks, dominates, iter_bits


@dataclass(frozen=True)
class P5Certificate:
    vertices: tuple[int, int, int, int, int]


@dataclass(frozen=True)
class DominatingSeed:
    vertices: tuple[int, ...]
    kind: Literal["clique", "p3"]

    @property
    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


def validate_p5(adj: Sequence[int], path: Sequence[int]) -> bool:
    """Check that ``path`` is an induced P5 listed in path order.

    Deliberately pair-by-pair so it shares nothing with the detector.
    """
    if len(path) != 5 or len(set(path)) != 5:
        return False
    for i in range(5):
        for j in range(i + 1, 5):
            adjacent = bool(adj[path[i]] >> path[j] & 1)
            if adjacent != (j == i + 1):
                return False
    return True


def find_p5_mask(adj: Sequence[int], within: int) -> tuple[int, ...] | None:
    """Search ``G[within]`` for an induced P5 a-b-c-d-e.

    Grows induced P3s (a, b, c) into P4s and P5s: ``d`` must see ``c`` and
    miss ``a`` and ``b``; ``e`` must see ``d`` and miss ``a``, ``b``, ``c``.
    """
    for b in iter_bits(within):
        nb = adj[b] & within
        for a in iter_bits(nb):
            na = adj[a]
            for c in iter_bits(nb & ~na & ~(1 << a)):
                nc = adj[c]
                d_cands = nc & within & ~na & ~nb & ~(1 << b)
                if not d_cands:
                    continue
                blocked = na | nb | nc
                for d in iter_bits(d_cands):
                    e_cands = adj[d] & within & ~blocked & ~(1 << c)
                    if e_cands:
                        e = (e_cands & -e_cands).bit_length() - 1
                        return (a, b, c, d, e)
    return None


def find_induced_p5(g: Graph) -> P5Certificate | None:
    path = find_p5_mask(g.adj, g.all_mask)
    return None if path is None else P5Certificate(path)


def is_p5_free(g: Graph) -> bool:
    return find_p5_mask(g.adj, g.all_mask) is None


def cliques_mask(adj: Sequence[int], within: int, size_cap: int) -> Iterator[tuple[int, ...]]:
    # breadth-first by size; within a size, lexicographic
    layer = [((v,), adj[v] & within & ~((1 << (v + 1)) - 1)) for v in iter_bits(within)]
    size = 1
    while layer and size <= size_cap:
        for clique, _ in layer:
            yield clique
        if size == size_cap:
            return
        nxt = []
        for clique, cand in layer:
            for u in iter_bits(cand):
                nxt.append((clique + (u,), cand & adj[u] & ~((1 << (u + 1)) - 1)))
        layer = nxt
        size += 1


def enumerate_cliques_up_to(g: Graph, size_cap: int) -> Iterator[frozenset[int]]:
    """All cliques with 1..size_cap vertices, by size then lexicographically."""
    if size_cap < 1:
        raise ValueError("size_cap must be at least 1")
    for clique in cliques_mask(g.adj, g.all_mask, size_cap):
        yield frozenset(clique)


def _p3s_mask(adj: Sequence[int], within: int) -> list[tuple[int, int, int]]:
    triples = []
    for mid in iter_bits(within):
        nbrs = bits_of(adj[mid] & within)
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                if not adj[a] >> c & 1:
                    triples.append(tuple(sorted((a, mid, c))))
    triples.sort()
    return triples


def dominating_seed_mask(
    adj: Sequence[int],
    within: int,
    size_cap: int,
    prefer: Literal["clique", "p3"] = "clique",
) -> DominatingSeed | None:
    """Dominating clique of at most ``size_cap`` vertices, else dominating P3.

    With ``prefer="p3"`` the P3 search runs first. Ties go to the
    lexicographically smallest sorted vertex tuple.
    """
    if size_cap < 1:
        raise ValueError("size_cap must be at least 1")

    def clique_seed():
        for clique in cliques_mask(adj, within, size_cap):
            if dominates(adj, _mask(clique), within):
                return DominatingSeed(clique, "clique")
        return None

    def p3_seed():
        for triple in _p3s_mask(adj, within):
            if dominates(adj, _mask(triple), within):
                return DominatingSeed(triple, "p3")
        return None

    order = (clique_seed, p3_seed) if prefer == "clique" else (p3_seed, clique_seed)
    for search in order:
        seed = search()
        if seed is not None:
            return seed
    return None


def _mask(vertices: Sequence[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def find_dominating_clique_or_p3(
    g: Graph,
    size_cap: int,
    prefer: Literal["clique", "p3"] = "clique",
) -> DominatingSeed | None:
    """Seed search over a connected graph.

    Returns the smallest dominating clique of at most ``size_cap`` vertices
    if any exists, otherwise the first dominating P3, otherwise ``None``.
    """
    if len(component_masks(g.adj, g.all_mask)) > 1:
        raise GraphNotConnected("dominating seed search needs a connected graph")
    return dominating_seed_mask(g.adj, g.all_mask, size_cap, prefer)


def clique_number(g: Graph) -> int:
    """Size of a largest clique (plain branch and bound; fine for small graphs)."""
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            grow(size + 1, cand & g.adj[v])

    grow(0, g.all_mask)
    return best


def explain_missing_seed(adj: Sequence[int], within: int, size_cap: int) -> None:
    """Justify a failed seed search on the connected subgraph ``G[within]``.

    In a P5-free graph a failed search can only mean a clique with more than
    ``size_cap`` vertices, which makes the subproblem uncolourable. If there
    is no such clique the graph cannot be P5-free and ``NotP5Free`` is raised.
    """
    for clique in cliques_mask(adj, within, size_cap + 1):
        if len(clique) == size_cap + 1:
            return
    raise NotP5Free(
        "connected subgraph without a dominating clique or P3", find_p5_mask(adj, within)
    )
