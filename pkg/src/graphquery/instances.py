"""Seeded instance generators for experiments and tests."""

from __future__ import annotations

import random
from functools import lru_cache

from .graphs import Graph, clique_union_graph, complete_graph, empty_graph
from .partitions import Partition, stirling_partition_count

KINDS = ("worst-case-prop1", "random-partition", "random-graph", "edgeless", "clique")


def worst_case_graph(n: int, k: int) -> Graph:
    """k-1 isolated vertices 0..k-2 plus one clique on the rest.

    This is the instance on which the representative learner hits its exact
    worst case when vertices are processed in ascending order.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    clique = list(range(k - 1, n))
    return clique_union_graph([clique], n)


@lru_cache(maxsize=None)
def _completions(remaining: int, open_blocks: int, k: int) -> int:
    """Ways to place `remaining` labeled elements onto `open_blocks` existing
    blocks so that exactly k blocks exist at the end."""
    if remaining == 0:
        return 1 if open_blocks == k else 0
    total = 0
    if open_blocks < k:
        total += _completions(remaining - 1, open_blocks + 1, k)
    if open_blocks > 0:
        total += open_blocks * _completions(remaining - 1, open_blocks, k)
    return total


def random_partition_exactly(n: int, k: int, rng: random.Random) -> Partition:
    """Uniform random partition of {0..n-1} into exactly k blocks.

    Integer-exact sampling: element placements are drawn proportional to the
    count of completions, so no float rounding skews the distribution.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    assert _completions(n, 0, k) == stirling_partition_count(n, k)
    blocks: list[list[int]] = []
    for v in range(n):
        remaining = n - v - 1
        weighted: list[tuple[int, int]] = []
        if len(blocks) < k:
            weighted.append((-1, _completions(remaining, len(blocks) + 1, k)))
        join = _completions(remaining, len(blocks), k)
        weighted.extend((i, join) for i in range(len(blocks)))
        total = sum(w for _, w in weighted)
        draw = rng.randrange(total)
        for pick, w in weighted:
            if draw < w:
                break
            draw -= w
        if pick == -1:
            blocks.append([v])
        else:
            blocks[pick].append(v)
    return Partition.from_blocks(blocks)


def random_partition_graph(n: int, k: int, seed: int) -> Graph:
    """Disjoint cliques realizing a uniform random k-block partition."""
    rng = random.Random(seed)
    partition = random_partition_exactly(n, k, rng)
    return clique_union_graph(partition.blocks, n)


def random_edge_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly m edges."""
    top = n * (n - 1) // 2
    if not 0 <= m <= top:
        raise ValueError(f"need 0 <= m <= {top} for n={n}")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, frozenset(rng.sample(pairs, m)))


def generate_instance(kind: str, n: int, k: int | None = None, m: int | None = None,
                      seed: int | None = None) -> Graph:
    """Build a hidden graph of the given kind; seeds make output deterministic."""
    if kind not in KINDS:
        raise ValueError(f"unknown instance kind {kind!r}; choose from {KINDS}")
    if kind == "worst-case-prop1":
        if k is None:
            raise ValueError("worst-case-prop1 needs k")
        return worst_case_graph(n, k)
    if kind == "random-partition":
        if k is None or seed is None:
            raise ValueError("random-partition needs k and seed")
        return random_partition_graph(n, k, seed)
    if kind == "random-graph":
        if m is None or seed is None:
            raise ValueError("random-graph needs m and seed")
        return random_edge_graph(n, m, seed)
    if kind == "edgeless":
        return empty_graph(n)
    return complete_graph(n)


def worst_case_order(partition: Partition) -> list[int]:
    """Adversarial processing order: smallest components first.

    Ties break by the component's smallest label, then by label.
    """
    ranked = sorted(
        range(partition.n),
        key=lambda v: (len(partition.block_of(v)), partition.block_of(v)[0], v),
    )
    return ranked
