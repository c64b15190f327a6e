import random
from collections import Counter

import pytest

from graphquery.graphs import connected_components
from graphquery.instances import (
    generate_instance,
    random_partition_exactly,
    worst_case_graph,
    worst_case_order,
)
from graphquery.partitions import Partition, stirling_partition_count


def test_worst_case_structure():
    g = worst_case_graph(6, 3)
    assert connected_components(g) == Partition.from_blocks([[0], [1], [2, 3, 4, 5]])
    assert g.m == 6  # a 4-clique


def test_worst_case_edge_cases():
    assert worst_case_graph(4, 1).m == 6  # all one clique
    assert worst_case_graph(4, 4).m == 0  # all isolated
    with pytest.raises(ValueError):
        worst_case_graph(3, 4)


def test_generate_instance_kinds():
    assert generate_instance("edgeless", 5).m == 0
    assert generate_instance("clique", 5).m == 10
    g = generate_instance("random-graph", 8, m=9, seed=3)
    assert g.n == 8 and g.m == 9
    p = generate_instance("random-partition", 8, k=3, seed=7)
    assert connected_components(p).k == 3
    with pytest.raises(ValueError):
        generate_instance("nope", 5)
    with pytest.raises(ValueError):
        generate_instance("random-graph", 4, m=99, seed=0)
    with pytest.raises(ValueError):
        generate_instance("random-partition", 4, k=2)  # seed required


def test_generators_are_deterministic():
    a = generate_instance("random-partition", 8, k=3, seed=7)
    b = generate_instance("random-partition", 8, k=3, seed=7)
    assert a == b
    c = generate_instance("random-graph", 10, m=12, seed=41)
    d = generate_instance("random-graph", 10, m=12, seed=41)
    assert c == d


def test_random_partition_block_count_always_exact():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(1, 12)
        k = rng.randint(1, n)
        assert random_partition_exactly(n, k, rng).k == k


def test_random_partition_is_uniform_on_small_case():
    # n=4, k=2 has 7 equally likely partitions
    rng = random.Random(123)
    counts = Counter(random_partition_exactly(4, 2, rng) for _ in range(7000))
    assert len(counts) == stirling_partition_count(4, 2) == 7
    for seen in counts.values():
        assert 800 < seen < 1200


def test_worst_case_order_smallest_components_first():
    g = worst_case_graph(6, 3)
    order = worst_case_order(connected_components(g))
    assert order == [0, 1, 2, 3, 4, 5]
    p = Partition.from_blocks([[0, 1, 2], [3], [4, 5]])
    assert worst_case_order(p) == [3, 4, 5, 0, 1, 2]
