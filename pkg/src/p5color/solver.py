"""Exact k-colourability / restricted list colouring for P5-free graphs.

The search, per connected piece of the still-dependent vertices:

1. find a dominating clique (at most |colours| vertices) or dominating P3;
2. for each proper colouring of it, split the rest into fixed sets and clear
   every dependency between two fixed sets (Method I or Method II);
3. colour each fixed set of each resulting instance recursively. Fixed sets
   have strictly fewer colours available, so recursion depth is at most k.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .context import Context, SolveConfig, SolveMetrics
from .errors import NotP5Free
from .graph import Graph, component_masks, iter_bits
from .instance import (
    FixedSetPartition,
    Instance,
    check_partition,
    col,
    dependents_into,
    fixed_set_partition,
    full_instance,
    has_dependency,
    universe_mask,
)
from .method_one import StableSetDecomposition, iter_fixed_pair_m1, stable_decomposition
from .method_two import iter_fixed_pair_m2, seed_colourings
from .structure import dominating_seed_mask, explain_missing_seed, find_p5_mask


@dataclass
class Decision:
    sat: bool
    colouring: tuple[int, ...] | None
    metrics: SolveMetrics = field(default_factory=SolveMetrics)

    @property
    def status(self) -> str:
        return "sat" if self.sat else "unsat"


def verify_colouring(inst: Instance, colouring: Sequence[int] | dict[int, int]) -> bool:
    """Colouring is total, picks from every list, and has no monochromatic edge."""
    n = inst.graph.n
    if isinstance(colouring, dict):
        if set(colouring) != set(range(n)):
            return False
        colours = [colouring[v] for v in range(n)]
    else:
        colours = list(colouring)
        if len(colours) != n:
            return False
    for v, c in enumerate(colours):
        if not isinstance(c, int) or c < 1 or not inst.lists[v] >> c & 1:
            return False
    for u, v in inst.graph.edges():
        if colours[u] == colours[v]:
            return False
    return True


class _Search:
    def __init__(self, ctx: Context) -> None:
        self.ctx = ctx
        self.config = ctx.config

    # region: vertices still to colour; every dependency of a region vertex stays inside it
    def region(self, inst: Instance, region: int, level: int) -> dict[int, int] | None:
        self.ctx.reached(level)
        lists, assigned = inst.lists, inst.assigned
        out: dict[int, int] = {}
        active = 0
        for v in iter_bits(region):
            if not lists[v]:
                return None
            if assigned[v]:
                out[v] = assigned[v]
            elif dependents_into(inst, v, region):
                active |= 1 << v
            else:
                # no neighbour in the region shares a colour, and lists only shrink
                out[v] = (lists[v] & -lists[v]).bit_length() - 1
        if not active:
            return out
        if all(lists[v] & (lists[v] - 1) == 0 for v in iter_bits(active)):
            return None
        for comp in component_masks(inst.graph.adj, active):
            sub = self.component(inst, comp, level)
            if sub is None:
                return None
            out.update(sub)
        return out

    def component(self, inst: Instance, comp: int, level: int) -> dict[int, int] | None:
        adj = inst.graph.adj
        budget = col(inst, comp).bit_count()
        self.ctx.metrics.dominating_searches += 1
        seed = dominating_seed_mask(adj, comp, budget, self.config.prefer)
        if seed is None:
            explain_missing_seed(adj, comp, budget)
            self.ctx.emit(level, "no-seed", min(iter_bits(comp)))
            return None
        self.ctx.emit(level, f"seed-{seed.kind}", seed.vertices[0])
        branches = seed_colourings(inst, seed.vertices)
        if level == 0 and self.config.parallelism > 1:
            return self._parallel(list(branches), seed.vertices, comp, level)
        for child in branches:
            result = self.seed_branch(child, seed.vertices, comp, level)
            if result is not None:
                return result
        return None

    def seed_branch(
        self, child: Instance, seed: tuple[int, ...], comp: int, level: int
    ) -> dict[int, int] | None:
        self.ctx.created(1)
        part = fixed_set_partition(child, seed, comp)
        if self.config.check_invariants:
            check_partition(child, part, comp)
        for leaf in self.clear_all_pairs(child, part, level):
            if self.config.check_invariants:
                self._check_leaf(child, leaf, part)
            result = {d: leaf.assigned[d] for d in seed}
            for f in part.fixed_sets:
                sub = self.region(leaf, f, level + 1)
                if sub is None:
                    break
                result.update(sub)
            else:
                return result
        return None

    def _parallel(self, branches, seed, comp, level):
        with ProcessPoolExecutor(self.config.parallelism) as pool:
            futures = [
                pool.submit(_seed_branch_worker, self.config, child, seed, comp, level)
                for child in branches
            ]
            found = None
            for fut in futures:
                if found is not None:
                    fut.cancel()
                    continue
                result, metrics = fut.result()
                self.ctx.metrics.merge(metrics)
                found = result
            return found

    def clear_all_pairs(self, inst: Instance, part: FixedSetPartition, level: int) -> Iterator[Instance]:
        sets = part.fixed_sets
        pairs = [
            (i, j)
            for i in range(len(sets))
            for j in range(i + 1, len(sets))
            if sets[i] and sets[j]
        ]
        decomps: dict[int, StableSetDecomposition | None] = {}

        def decomposition(cur: Instance, i: int) -> StableSetDecomposition | None:
            if i not in decomps:
                decomps[i] = stable_decomposition(
                    cur, sets[i], lambda g, r, k: self.plain(g, r, k, level)
                )
            return decomps[i]

        def walk(cur: Instance, index: int) -> Iterator[Instance]:
            while index < len(pairs) and not has_dependency(cur, sets[pairs[index][0]], sets[pairs[index][1]]):
                index += 1
            if index == len(pairs):
                yield cur
                return
            i, j = pairs[index]
            pivot = part.dominators[i]
            if self.config.method == "one":
                da = decomposition(cur, i)
                db = decomposition(cur, j) if da is not None else None
                if da is None or db is None:
                    return
                leaves = iter_fixed_pair_m1(cur, da, db, pivot, self.ctx)
            else:
                leaves = iter_fixed_pair_m2(cur, part, i, j, self.ctx)
            for leaf in leaves:
                yield from walk(leaf, index + 1)

        return walk(inst, 0)

    def plain(self, g: Graph, region: int, k: int, level: int) -> dict[int, int] | None:
        """Decide k-colourability of ``G[region]`` (used for stable-set splits)."""
        u = universe_mask(k)
        sub = Instance(g, (u,) * g.n, (0,) * g.n, u)
        return self.region(sub, region, level + 1)

    def _check_leaf(self, before: Instance, leaf: Instance, part: FixedSetPartition) -> None:
        sets = part.fixed_sets
        for v in range(leaf.graph.n):
            if leaf.lists[v] & ~before.lists[v]:
                raise AssertionError(f"list of vertex {v} grew")
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if has_dependency(leaf, sets[i], sets[j]):
                    raise AssertionError(f"fixed sets {i} and {j} still dependent")
        for d, c, f in zip(part.dominators, part.colours, sets):
            if col(leaf, f) & (1 << c):
                raise AssertionError(f"fixed set of dominator {d} still offers colour {c}")


def _seed_branch_worker(config, child, seed, comp, level):
    ctx = Context(config)
    result = _Search(ctx).seed_branch(child, seed, comp, level)
    return result, ctx.metrics


def solve_list_colouring(inst: Instance, cfg: SolveConfig | None = None, trace=None) -> Decision:
    """Decide the restricted list-colouring instance ``inst``.

    A SAT answer always carries a colouring that passed ``verify_colouring``.
    Raises ``NotP5Free`` when the input (checked or not) turns out not to be
    P5-free, and ``BudgetExceeded`` past ``cfg.max_instances``.
    """
    cfg = cfg or SolveConfig()
    ctx = Context(cfg, SolveMetrics(), trace)
    start = time.perf_counter()
    g = inst.graph
    if cfg.validate_input == "full_p5_check":
        path = find_p5_mask(g.adj, g.all_mask)
        if path is not None:
            raise NotP5Free("input graph contains an induced P5", path)
    ctx.created(1)
    found = None if inst.dead else _Search(ctx).region(inst, g.all_mask, 0)
    ctx.metrics.wall_time = time.perf_counter() - start
    if found is None:
        return Decision(False, None, ctx.metrics)
    colouring = tuple(found[v] for v in range(g.n))
    if not verify_colouring(inst, colouring):
        raise AssertionError("solver produced an invalid colouring")
    return Decision(True, colouring, ctx.metrics)


def k_colourable(g: Graph, k: int, cfg: SolveConfig | None = None, trace=None) -> Decision:
    return solve_list_colouring(full_instance(g, k), cfg, trace)
