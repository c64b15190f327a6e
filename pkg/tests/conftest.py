"""Shared strategies and brute-force reference helpers for the test suite."""

from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import strategies as st

from graphquery.graphs import Graph
from graphquery.partitions import Partition


@st.composite
def graphs(draw, min_n=1, max_n=8, max_density=1.0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs), max_size=int(len(pairs) * max_density)))if pairs else set()
    return Graph(n, frozenset(edges))


def brute_force_proper_partitions(g: Graph, k: int) -> set[Partition]:
    """All distinct proper color-class partitions with at most k classes,
    found by trying every raw color assignment."""
    found = set()
    for assign in product(range(k), repeat=g.n):
        if all(assign[u] != assign[v] for u, v in g.edges):
            blocks: dict[int, list[int]] = {}
            for v, c in enumerate(assign):
                blocks.setdefault(c, []).append(v)
            found.add(Partition.from_blocks(blocks.values()))
    return found


def brute_force_separable(g: Graph, i: int, j: int, k: int) -> bool:
    """Pair separability by exhaustive coloring enumeration."""
    for assign in product(range(k), repeat=g.n):
        if assign[i] == assign[j]:
            continue
        if all(assign[u] != assign[v] for u, v in g.edges):
            return True
    return False


def brute_force_components(g: Graph) -> Partition:
    """Components via repeated reachability scans."""
    seen = set()
    blocks = []
    for v in range(g.n):
        if v in seen:
            continue
        stack, block = [v], set()
        while stack:
            u = stack.pop()
            if u in block:
                continue
            block.add(u)
            stack.extend(g.neighbors(u))
        seen |= block
        blocks.append(sorted(block))
    return Partition.from_blocks(blocks)


@pytest.fixture
def figure_partition_graph():
    """Cliques on {0,1,2}, {3,4}, {5}: the walkthrough's hidden partition."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4)])
