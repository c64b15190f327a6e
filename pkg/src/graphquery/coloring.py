"""Deterministic proper k-coloring search, pair separability, and unique colorability.

The searches here are exponential and intended for desk-scale inputs only;
every entry point takes a node budget and aborts with BudgetExceededError
when the backtracking tree outgrows it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, normalize_edge
from .partitions import Partition

DEFAULT_NODE_BUDGET = 5_000_000

# Instrumentation: every backtracking search bumps these. Polynomial-time
# code paths must leave them untouched (tests rely on that).
SEARCH_STATS = {"invocations": 0, "nodes": 0}


def reset_search_stats() -> None:
    SEARCH_STATS["invocations"] = 0
    SEARCH_STATS["nodes"] = 0


class BudgetExceededError(RuntimeError):
    """The configured node-expansion budget was exhausted."""


@dataclass(frozen=True)
class Coloring:
    """Assignment of colors 1..palette_size to vertices 0..n-1."""

    colors: tuple[int, ...]
    palette_size: int

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError("palette must have at least one color")
        for c in self.colors:
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"color {c} outside palette 1..{self.palette_size}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> Partition:
        """Partition into the nonempty color classes."""
        blocks: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            blocks.setdefault(c, []).append(v)
        return Partition.from_blocks(blocks.values())

    def is_proper(self, g: Graph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def _search_colorings(g: Graph, k: int, forbidden_equal, limit, node_budget):
    """Backtracking over color-class partitions.

    Vertices are assigned in ascending label order and colors in ascending
    palette order; a vertex may introduce color c only when colors 1..c-1
    already appear. This visits each proper color-class partition exactly
    once, so outputs are deterministic and palette permutations are never
    enumerated. Yields solutions as color tuples until `limit` of them.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    SEARCH_STATS["invocations"] += 1
    n = g.n
    if forbidden_equal is not None:
        i, j = forbidden_equal
        if i == j:
            raise ValueError("forbidden pair must be two distinct vertices")
        if g.has_edge(i, j):
            raise ValueError("forbidden pair is already an edge")
        forbid_at, forbid_other = max(i, j), min(i, j)
    else:
        forbid_at, forbid_other = -1, -1

    masks = g.adjacency_masks()
    colors = [0] * n
    found = 0
    budget = [node_budget]

    def rec(v: int, used: int):
        nonlocal found
        if v == n:
            found += 1
            yield tuple(colors)
            return
        blocked = 0
        mask = masks[v]
        for u in range(v):
            if (mask >> u) & 1:
                blocked |= 1 << colors[u]
        if v == forbid_at:
            blocked |= 1 << colors[forbid_other]
        top = min(used + 1, k)
        for c in range(1, top + 1):
            if (blocked >> c) & 1:
                continue
            budget[0] -= 1
            SEARCH_STATS["nodes"] += 1
            if budget[0] < 0:
                raise BudgetExceededError(
                    f"coloring search exceeded {node_budget} node expansions"
                )
            colors[v] = c
            yield from rec(v + 1, max(used, c))
            if limit is not None and found >= limit:
                return
        colors[v] = 0

    yield from rec(0, 0)


def find_k_coloring(
    g: Graph,
    k: int,
    forbidden_equal: tuple[int, int] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Coloring | None:
    """First proper k-coloring of g in the fixed search order, or None.

    When forbidden_equal=(i, j) is given, the returned coloring assigns i and
    j distinct colors; the pair must be nonadjacent.
    """
    for colors in _search_colorings(g, k, forbidden_equal, limit=1, node_budget=node_budget):
        return Coloring(colors, k)
    return None


def proper_partitions(
    g: Graph,
    k: int,
    limit: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Partition]:
    """Distinct proper color-class partitions of g with at most k classes.

    With `limit` set, stops as soon as that many have been found.
    """
    out = []
    for colors in _search_colorings(g, k, None, limit=limit, node_budget=node_budget):
        out.append(Coloring(colors, k).classes())
    return out


def is_uniquely_k_colorable(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff g has exactly one proper k-coloring up to palette permutation.

    Equivalently: exactly one induced color-class partition. Counting stops
    early after a second partition turns up.
    """
    return len(proper_partitions(g, k, limit=2, node_budget=node_budget)) == 1


def is_k_separable(
    g: Graph,
    i: int,
    j: int,
    k: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Coloring | None:
    """A k-coloring separating the nonadjacent pair {i, j}, or None if inseparable."""
    if i == j:
        raise ValueError("separability needs two distinct vertices")
    if normalize_edge(i, j) in g.edges:
        raise ValueError(f"pair ({i}, {j}) is an edge; separability is undefined")
    return find_k_coloring(g, k, forbidden_equal=(i, j), node_budget=node_budget)
