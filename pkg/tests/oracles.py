"""Independent checks shared by the test modules.

The brute-force scans here use only itertools and the adjacency sets, so
they share no code with the detector under test.
"""

from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import strategies as st

from p5color.graph import Graph, mask_of
from p5color.instance import FixedSetPartition, make_instance


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def _edge(g: Graph, u: int, v: int) -> bool:
    return g.has_edge(u, v)


def induces_path(g: Graph, order) -> bool:
    for i, j in combinations(range(len(order)), 2):
        if _edge(g, order[i], order[j]) != (j == i + 1):
            return False
    return True


def brute_has_path(g: Graph, length: int) -> bool:
    for subset in combinations(range(g.n), length):
        for order in permutations(subset):
            if order[0] < order[-1] and induces_path(g, order):
                return True
    return False


def brute_has_p5(g: Graph) -> bool:
    return brute_has_path(g, 5)


def brute_has_p4(g: Graph) -> bool:
    return brute_has_path(g, 4)


def house() -> Graph:
    # C5 plus the chord 2-5 (0-based 1-4)
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def all_lists(g: Graph, colours, k: int = 2):
    return make_instance(g, [colours] * g.n, k)


# Non-P5-free configurations. Each returns the instance plus whatever the
# relevant routine needs; vertex names are spelled out in the comments.


def lemma1_config():
    # x1=0, x2=1 (one fixed set, pivot 4 sees both), y1=2, y2=3; matching x1y1, x2y2
    g = Graph(5, [(0, 2), (1, 3), (4, 0), (4, 1)])
    return all_lists(g, (1, 2)), mask_of([0, 1]), mask_of([2, 3]), 4


def h_disconnected_config():
    # P = {a=0, c=2}, Q = {b=1, d=3}, pivot 4 sees Q; edges a-b and c-d only
    g = Graph(5, [(0, 1), (2, 3), (4, 1), (4, 3)])
    return all_lists(g, (1, 2)), mask_of([0, 2]), mask_of([1, 3]), 4


def two_crossing_config():
    # P components {0,1} and {2,3}; Q singletons y1=4, y2=5; pivot 6 sees Q
    edges = [(0, 1), (2, 3), (0, 4), (1, 5), (2, 4), (3, 5), (6, 4), (6, 5)]
    g = Graph(7, edges)
    return all_lists(g, (1, 2)), mask_of([0, 1, 2, 3]), mask_of([4, 5]), 6


def claim_config():
    # x=0 touches Y1={1,2} and Y2={3,4} at 1 and 3 only; pivot 5 sees all of Q
    edges = [(1, 2), (3, 4), (0, 1), (0, 3)] + [(5, q) for q in (1, 2, 3, 4)]
    g = Graph(6, edges)
    return all_lists(g, (1, 2)), mask_of([0]), mask_of([1, 2, 3, 4]), 5


def two_set_partition(dominators, colours, sets) -> FixedSetPartition:
    return FixedSetPartition(tuple(dominators), tuple(colours), tuple(mask_of(s) for s in sets))
