import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from powergraph import groups as g
from powergraph.catalog import build
from powergraph.pgraph import (
    INDEPENDENCE_LIMIT, PowerGraph, TooLarge, common_neighbors, from_edges, from_json,
    independence_number, is_adjacent, power_graph, to_dot, to_json,
)

from conftest import naive_adjacency


def as_nx(graph):
    H = nx.Graph()
    H.add_nodes_from(range(graph.n))
    H.add_edges_from(graph.edges())
    return H


def alpha_oracle(graph):
    comp = nx.complement(as_nx(graph))
    return max(len(c) for c in nx.find_cliques(comp))


def alpha_brute(graph):
    for k in range(graph.n, 0, -1):
        for combo in itertools.combinations(range(graph.n), k):
            if all(not is_adjacent(graph, a, b) for a, b in itertools.combinations(combo, 2)):
                return k
    return 0


def test_adjacency_matches_naive(small_catalog):
    for label, G, graph in small_catalog:
        assert set((u, v) for u, v in graph.edges()) | set((v, u) for u, v in graph.edges()) \
            == naive_adjacency(G), label


def test_structural_shape(catalog200):
    for label, G, graph in catalog200:
        e = G.identity
        assert graph.rows[e] == graph.vertices & ~(1 << e), label
        for u in range(graph.n):
            assert not graph.rows[u] >> u & 1
            for v in g.bits.iter_bits(graph.rows[u]):
                assert graph.rows[v] >> u & 1
                ou, ov = int(G.orders[u]), int(G.orders[v])
                assert ou % ov == 0 or ov % ou == 0, (label, u, v)


@pytest.mark.parametrize("n", [7, 8, 9, 16, 27, 32])
def test_cyclic_prime_power_is_complete(n):
    graph = power_graph(g.cyclic(n))
    assert graph.edge_count() == n * (n - 1) // 2


@pytest.mark.parametrize("n", [12, 30, 36, 60])
def test_cyclic_divisibility_oracle(n):
    # in a cyclic group, x ~ y iff one order divides the other
    G = g.cyclic(n)
    graph = power_graph(G)
    for u, v in itertools.combinations(range(n), 2):
        ou, ov = int(G.orders[u]), int(G.orders[v])
        assert is_adjacent(graph, u, v) == (ou % ov == 0 or ov % ou == 0)


def test_elementary_two_group_is_star():
    graph = power_graph(g.elementary_abelian(2, 3))
    assert graph.edge_count() == 7 and graph.degree(0) == 7
    assert all(graph.degree(v) == 1 for v in range(1, 8))


def test_q8_degrees():
    Q = g.generalized_quaternion(8)
    graph = power_graph(Q)
    minus = next(x for x in range(8) if Q.orders[x] == 2)
    assert graph.degree(0) == 7 and graph.degree(minus) == 7
    for x in range(8):
        if Q.orders[x] == 4:
            assert graph.degree(x) == 3
    # automorphisms permute the order-4 elements, so degrees agree within an orbit
    assert len({graph.degree(x) for x in range(8) if Q.orders[x] == 4}) == 1


def test_common_neighbors_z6():
    graph = power_graph(g.cyclic(6))
    assert common_neighbors(graph, 2, 3) == 0b100011


def test_independence_examples():
    assert independence_number(power_graph(g.cyclic(6))) == 2
    assert independence_number(power_graph(g.cyclic(9))) == 1
    assert independence_number(power_graph(g.abelian([2, 2]))) == 3
    assert independence_number(power_graph(g.symmetric(4))) == 13
    assert independence_number(power_graph(g.cyclic(1))) == 1
    assert independence_number(from_edges(0, [])) == 0


def test_independence_vs_networkx(small_catalog):
    for label, G, graph in small_catalog:
        if G.n <= 40:
            assert independence_number(graph) == alpha_oracle(graph), label


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_independence_random_graphs(data):
    n, pairs = data
    graph = from_edges(n, [(u, v) for u, v in pairs if u != v])
    assert independence_number(graph) == alpha_brute(graph)


def test_independence_limit():
    big = PowerGraph(INDEPENDENCE_LIMIT + 1, (0,) * (INDEPENDENCE_LIMIT + 1))
    with pytest.raises(TooLarge):
        independence_number(big)


def test_dot_export():
    graph = power_graph(build("Z6"))
    text = to_dot(graph)
    assert text.startswith("graph power_graph {")
    assert text.count(" -- ") == graph.edge_count()
    assert '0 [label="0 (1)"]' in text
    assert to_dot(graph) == text


def test_json_roundtrip(small_catalog):
    for label, G, graph in small_catalog:
        text = to_json(graph)
        doc = json.loads(text)
        assert doc["schema"] == 1 and doc["n"] == G.n
        back = from_json(text)
        assert back == graph and back.orders == graph.orders


def test_from_edges_rejects_loops():
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
