"""Immutable simple graphs over dense integer vertices with bitset adjacency.

Vertices are ``0..n-1``. A vertex set is passed around internally as an int
bitmask (bit ``v`` set means ``v`` is a member); the public helpers accept
any iterable of vertices as well.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph.

    ``labels[v]`` is the identifier ``v`` had in the graph this one was cut
    from (identity for graphs built directly), so induced subgraphs can
    always report vertices of the original graph.
    """

    __slots__ = ("n", "adj", "labels", "_m")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[int] | None = None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        if labels is None:
            self.labels: tuple[int, ...] = tuple(range(n))
        else:
            if len(labels) != n:
                raise ValueError("labels must have one entry per vertex")
            self.labels = tuple(labels)
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_adjacency(cls, adj: Sequence[int], labels: Sequence[int] | None = None) -> Graph:
        g = cls.__new__(cls)
        n = len(adj)
        for v, a in enumerate(adj):
            if a >> n:
                raise ValueError(f"neighbour of {v} out of range")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g.n = n
        g.adj = tuple(adj)
        g.labels = tuple(range(n)) if labels is None else tuple(labels)
        g._m = sum(a.bit_count() for a in adj) // 2
        return g

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbours(self, v: int) -> int:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph.from_adjacency, (self.adj, self.labels))


def _check_mask(g: Graph, vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        mask = vertices
    else:
        mask = 0
        for v in vertices:
            if not isinstance(v, int) or not 0 <= v < g.n:
                raise ValueError(f"unknown vertex {v!r}")
            mask |= 1 << v
    if mask < 0 or mask >> g.n:
        raise ValueError("vertex set contains unknown vertices")
    return mask


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> Graph:
    """Subgraph induced by ``s``; vertices renumbered in increasing order.

    The result's ``labels`` map each new vertex back to ``g.labels``.
    """
    mask = _check_mask(g, s)
    members = bits_of(mask)
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        a = 0
        for u in iter_bits(g.adj[v] & mask):
            a |= 1 << index[u]
        adj.append(a)
    return Graph.from_adjacency(adj, [g.labels[v] for v in members])


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by ``within``.

    Ordered by smallest member.
    """
    comps = []
    rest = within
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = lowest_bit(frontier)
            frontier &= frontier - 1
            new = adj[v] & within & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected_mask(adj: Sequence[int], within: int) -> bool:
    return len(component_masks(adj, within)) <= 1


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(g.adj, g.all_mask)]


def is_clique(g: Graph, s: Iterable[int] | int) -> bool:
    mask = _check_mask(g, s)
    for v in iter_bits(mask):
        if (mask & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def is_p3(g: Graph, s: Iterable[int] | int) -> bool:
    """True iff ``s`` has three vertices inducing a path."""
    mask = _check_mask(g, s)
    if mask.bit_count() != 3:
        return False
    degrees = sorted((g.adj[v] & mask).bit_count() for v in iter_bits(mask))
    return degrees == [1, 1, 2]


def dominates(adj: Sequence[int], seed: int, within: int) -> bool:
    """Every vertex of ``within`` outside ``seed`` has a neighbour in ``seed``."""
    covered = seed
    for d in iter_bits(seed):
        covered |= adj[d]
    return within & ~covered == 0


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]])
