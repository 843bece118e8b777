import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_lists, brute_has_p5, claim_config, h_disconnected_config, two_crossing_config, two_set_partition

from p5color.errors import ClaimViolated, HDisconnected, TwoCrossingComponents
from p5color.graph import Graph, complete_graph, component_masks, induced_subgraph, iter_bits, mask_of
from p5color.instance import (
    Instance,
    assign,
    col,
    colour_mask,
    fixed_set_partition,
    has_dependency,
    make_instance,
)
from p5color.method_two import (
    Block,
    build_h,
    claim_vertex,
    dynamic_partition,
    find_crossing_component,
    find_pivot,
    pair_schedule,
    remove_component,
    remove_dynamic_pair,
    remove_fixed_pair_m2,
    seed_colourings,
)
from p5color.structure import dominating_seed_mask, validate_p5
from p5color.testkit import GenSpec, generate, oracle_list_colouring, random_sublists

cm = colour_mask


def seeded_partitions(inst):
    """(child, partition) for every seed colouring of every component."""
    g = inst.graph
    for comp in component_masks(g.adj, g.all_mask):
        seed = dominating_seed_mask(g.adj, comp, max(col(inst, comp).bit_count(), 1))
        if seed is None:
            continue
        for child in seed_colourings(inst, seed.vertices):
            yield child, fixed_set_partition(child, seed.vertices, comp)


def test_dynamic_partition_blocks():
    inst = all_lists(Graph(3, []), (1, 2, 3), 3)
    assert dynamic_partition(inst, 0b111).by_list == {cm([1, 2, 3]): 0b111}
    inst = make_instance(Graph(3, []), [(1, 2), (1, 2), (2,)], 2)
    blocks = dynamic_partition(inst, 0b111).by_list
    assert sorted(m.bit_count() for m in blocks.values()) == [1, 2]
    assert dynamic_partition(inst, 0).by_list == {}


def test_pair_schedule_order():
    inst = make_instance(Graph(3, []), [(1, 2, 3), (1, 2), (3,)], 3)
    pa = dynamic_partition(inst, mask_of([0]))
    pb = dynamic_partition(inst, mask_of([1, 2]))
    assert pair_schedule(pa, pb) == [(cm([1, 2, 3]), cm([1, 2])), (cm([1, 2, 3]), cm([3]))]
    one = dynamic_partition(inst, mask_of([1]))
    assert len(pair_schedule(one, one)) == 1
    inst = make_instance(Graph(3, []), [(1, 2), (1, 3), (2, 3)], 3)
    pa = dynamic_partition(inst, mask_of([0]))
    pb = dynamic_partition(inst, mask_of([1, 2]))
    assert pair_schedule(pa, pb) == [(cm([1, 2]), cm([1, 3])), (cm([1, 2]), cm([2, 3]))]


def three_dominators():
    # dominators 0,1,2 (triangle); fixed sets {3}, {4}, {5}
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    inst = make_instance(g, [(1,), (2,), (3,)] + [(1, 2, 3, 4)] * 3, 4)
    for v, c in ((0, 1), (1, 2), (2, 3)):
        inst = assign(inst, v, c)
    return inst, two_set_partition((0, 1, 2), (1, 2, 3), ([3], [4], [5]))


def test_find_pivot():
    inst, part = three_dominators()
    assert find_pivot(inst, part, mask_of([3]), mask_of([5])) == (0, "P")
    assert find_pivot(inst, part, mask_of([4]), mask_of([3])) == (0, "Q")
    with pytest.raises(ValueError):
        find_pivot(inst, part, mask_of([3]), mask_of([3]))


def test_build_h_simple():
    # pivot 2 sees q=1; p=0 with one dependent edge; p=3 has no cross edge
    g = Graph(4, [(0, 1), (2, 1)])
    inst = all_lists(g, (1, 2))
    h = build_h(inst, mask_of([0, 3]), mask_of([1]), 2)
    assert h.p_side == (mask_of([0]),) and h.q_side == (mask_of([1]),)
    quiet = make_instance(g, [(1,), (2,), (1, 2), (1, 2)], 2)
    assert build_h(quiet, mask_of([0]), mask_of([1]), 2).empty


def test_crossing_component_detection():
    # P component {0,1}: 0 sees Y1={2}, 1 sees Y2={3}; pivot 4
    g = Graph(5, [(0, 1), (0, 2), (1, 3), (4, 2), (4, 3)])
    inst = all_lists(g, (1, 2))
    h = build_h(inst, mask_of([0, 1]), mask_of([2, 3]), 4)
    assert find_crossing_component(h, inst) == mask_of([0, 1])
    g = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (0, 1)])
    inst = all_lists(g, (1, 2))
    h = build_h(inst, mask_of([0, 1]), mask_of([2, 3]), 0)
    assert find_crossing_component(h, inst) is None


def test_remove_component_children():
    single = all_lists(Graph(1, []), (1, 2))
    assert [c.assigned[0] for c in remove_component(single, 1)] == [1, 2]
    k2 = all_lists(complete_graph(2), (1, 2))
    # one endpoint dominates K2; its neighbour is left with a single colour
    assert [(c.colours(0), c.colours(1)) for c in remove_component(k2, 0b11)] == [((1,), (2,)), ((2,), (1,))]
    assert remove_component(all_lists(complete_graph(3), (1, 2)), 0b111) == []


def test_claim_vertex_full_and_partial():
    # x=0 dominates Y1={1}; pivot 4 sees Q
    g = Graph(5, [(0, 1), (4, 1)])
    inst = all_lists(g, (1, 2))
    h = build_h(inst, mask_of([0]), mask_of([1]), 4)
    assert claim_vertex(inst, h) == (0, None)
    # x=0 sees all of Y1={1} and only 2 of Y2={2,3}
    g = Graph(5, [(2, 3), (0, 1), (0, 2)] + [(4, q) for q in (1, 2, 3)])
    inst = all_lists(g, (1, 2))
    h = build_h(inst, mask_of([0]), mask_of([1, 2, 3]), 4)
    assert claim_vertex(inst, h) == (0, mask_of([2, 3]))


@pytest.mark.parametrize(
    "config, error",
    [
        (h_disconnected_config, HDisconnected),
        (two_crossing_config, TwoCrossingComponents),
        (claim_config, ClaimViolated),
    ],
)
def test_violating_configurations(config, error):
    inst, p, q, pivot = config()
    assert brute_has_p5(inst.graph)
    with pytest.raises(error) as info:
        h = build_h(inst, p, q, pivot)
        assert find_crossing_component(h, inst) is None
        claim_vertex(inst, h)
    assert validate_p5(inst.graph.adj, info.value.certificate)


def dynamic_pair_setup(lx, ly, colours, k):
    # d1=0 sees y=2 (fixed set 0); d2=1 sees x=3 (fixed set 1)
    g = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    inst = make_instance(g, [(colours[0],), (colours[1],), ly, lx], k)
    inst = assign(assign(inst, 0, colours[0]), 1, colours[1])
    part = two_set_partition((0, 1), colours, ([2], [3]))
    return inst, part


def test_dynamic_pair_without_residual():
    inst, part = dynamic_pair_setup((1, 2), (1, 2), (3, 4), 4)
    leaves = remove_dynamic_pair(inst, Block(1, cm([1, 2])), Block(0, cm([1, 2])), part)
    assert len(leaves) == 2 and not any(leaf.dead for leaf in leaves)
    assert sorted((leaf.assigned[3], leaf.colours(2)) for leaf in leaves) == [(1, (2,)), (2, (1,))]


def test_dynamic_pair_with_residual():
    inst, part = dynamic_pair_setup((1, 2), (2, 3), (1, 3), 3)
    leaves = remove_dynamic_pair(inst, Block(1, cm([1, 2])), Block(0, cm([2, 3])), part)
    assert len(leaves) == 2
    by_x = {leaf.colours(3): leaf for leaf in leaves}
    assert by_x[(2,)].colours(2) == (3,)
    assert by_x[(1,)].colours(2) == (2, 3)
    for leaf in leaves:
        assert not has_dependency(leaf, mask_of([3]), mask_of([2]))


def test_independent_dynamic_pair():
    inst, part = dynamic_pair_setup((1,), (2, 3), (2, 3), 3)
    inst = make_instance(inst.graph, [(2,), (3,), (2,), (1,)], 3)
    assert remove_dynamic_pair(inst, Block(1, cm([1])), Block(0, cm([2])), part) == [inst]


def _colourable_on(inst, region):
    sub = induced_subgraph(inst.graph, region)
    lists = [inst.lists[v] for v in iter_bits(region)]
    return oracle_list_colouring(Instance(sub, tuple(lists), (0,) * sub.n, inst.universe)) is not None


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["split", "cograph", "er_rejection"]), st.integers(4, 10), st.integers(0, 2**32), st.integers(2, 4))
def test_fixed_pair_leaves_are_equivalent(family, n, seed, k):
    params = {"p": 0.15} if family == "er_rejection" else {}
    g = generate(GenSpec(family, n, seed, params))
    for child, part in seeded_partitions(random_sublists(g, k, seed)):
        sets = part.fixed_sets
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                leaves = remove_fixed_pair_m2(child, part, i, j)
                for leaf in leaves:
                    assert not has_dependency(leaf, sets[i], sets[j])
                    assert all(leaf.lists[v] & ~child.lists[v] == 0 for v in range(g.n))
                region = sets[i] | sets[j] | mask_of(part.dominators)
                before = _colourable_on(child, region)
                after = any(_colourable_on(leaf, region) for leaf in leaves)
                assert before == after
