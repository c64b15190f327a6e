import pytest
from hypothesis import given, strategies as st

from graphquery.graphs import Graph, empty_graph
from graphquery.ledger import QueryLedger, replay_matches_partition, replay_on_session
from graphquery.oracles import HonestOracle
from graphquery.partitions import Partition

from conftest import graphs


@pytest.fixture
def oracle(figure_partition_graph):
    return HonestOracle(figure_partition_graph)


def test_membership_examples(oracle):
    assert oracle.membership_query(0, 4) == 0
    assert oracle.membership_query(0, 1) == 1
    assert oracle.ledger.count == 2


def test_membership_rejects_self_and_range(oracle):
    with pytest.raises(ValueError):
        oracle.membership_query(5, 5)
    with pytest.raises(ValueError):
        oracle.membership_query(0, 6)


def test_multi_membership_examples(oracle):
    assert oracle.multi_membership_query(5, {0, 1, 2, 3, 4}) == 0  # isolated block
    assert oracle.multi_membership_query(0, {3, 4, 1}) == 1
    assert oracle.multi_membership_query(0, frozenset()) == 0
    assert oracle.ledger.count == 3


def test_multi_membership_rejects_self_in_set(oracle):
    with pytest.raises(ValueError):
        oracle.multi_membership_query(2, {1, 2})


def test_neighborhood_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    o = HonestOracle(star)
    assert o.neighborhood_query(0, {1, 2, 3}) == 1
    assert o.neighborhood_query(1, {2, 3}) == 0
    o2 = HonestOracle(empty_graph(3))
    assert o2.neighborhood_query(0, {1, 2}) == 0
    path = HonestOracle(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert path.neighborhood_query(0, {2}) == 0
    with pytest.raises(ValueError):
        o.neighborhood_query(1, {1, 2})


@given(graphs(min_n=2, max_n=8), st.data())
def test_honest_answers_are_stateless(g, data):
    o = HonestOracle(g)
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
    first = o.membership_query(u, v)
    assert all(o.membership_query(u, v) == first for _ in range(3))
    rest = frozenset(range(g.n)) - {u}
    first_m = o.multi_membership_query(u, rest)
    assert o.multi_membership_query(u, rest) == first_m
    first_b = o.neighborhood_query(u, rest)
    assert o.neighborhood_query(u, rest) == first_b


def test_ledger_append_only_and_count(oracle):
    oracle.membership_query(0, 1)
    oracle.multi_membership_query(0, {3})
    entries = oracle.ledger.entries
    assert [e.index for e in entries] == [0, 1]
    assert oracle.ledger.count == 2
    oracle.membership_query(2, 3)
    assert entries == oracle.ledger.entries[:2]  # earlier view unchanged


def test_ledger_jsonl_round_trip(oracle):
    oracle.membership_query(0, 4)
    oracle.multi_membership_query(0, {3, 4, 1})
    oracle.neighborhood_query(5, {0, 1})
    text = oracle.ledger.to_jsonl()
    lines = text.strip().splitlines()
    assert '"kind": "alpha"' in lines[0] or '"kind":"alpha"' in lines[0].replace(" ", "")
    back = QueryLedger.from_jsonl(text)
    assert back.entries == oracle.ledger.entries


def test_ledger_rejects_bad_entries():
    ledger = QueryLedger()
    with pytest.raises(ValueError):
        ledger.append("gamma", (0, 1), 0)
    with pytest.raises(ValueError):
        ledger.append("alpha", (0, 1), 2)


def test_replay_against_partition(oracle):
    oracle.membership_query(0, 4)
    oracle.membership_query(0, 1)
    oracle.multi_membership_query(5, {0, 1})
    truth = oracle.hidden_partition
    assert replay_matches_partition(oracle.ledger.entries, truth)
    wrong = Partition.from_blocks([[0, 4], [1, 2], [3, 5]])
    assert not replay_matches_partition(oracle.ledger.entries, wrong)


def test_replay_on_fresh_session(oracle, figure_partition_graph):
    oracle.membership_query(0, 4)
    oracle.neighborhood_query(5, {0, 1})
    fresh = HonestOracle(figure_partition_graph)
    assert replay_on_session(oracle.ledger.entries, fresh)


def test_replay_partition_rejects_beta():
    ledger = QueryLedger()
    ledger.append("beta", (0, frozenset({1})), 0)
    with pytest.raises(ValueError):
        replay_matches_partition(ledger.entries, Partition.singletons(2))


def test_declare_checks_ground_truth(oracle):
    truth = oracle.hidden_partition
    assert oracle.declare(truth).forced
    verdict = oracle.declare(Partition.singletons(6))
    assert not verdict.forced and verdict.witness == truth
