import pytest

from reconlab.canon import canonical_form
from reconlab.core import SimpleGraph
from reconlab.generate import (
    MAX_GRAPH_N,
    all_colored,
    all_graphs,
    all_hypergraphs,
    all_multigraphs,
    random_graph,
)

from oracles import (
    all_labeled_colored,
    all_labeled_graphs,
    all_labeled_hypergraphs,
    brute_canonical_key,
    burnside_count,
)


@pytest.mark.parametrize("n", range(0, 6))
def test_graph_classes_match_labeled_dedup(n):
    expected = len({brute_canonical_key(g) for g in all_labeled_graphs(n)})
    reps = all_graphs(n)
    assert len(reps) == expected
    assert len({canonical_form(g) for g in reps}) == len(reps)


@pytest.mark.parametrize("n", range(0, 8))
def test_graph_class_counts_match_burnside(n):
    assert len(all_graphs(n)) == burnside_count(n)


def test_graph_examples():
    assert len(all_graphs(3)) == 4
    assert len(all_graphs(4)) == 11
    assert all_graphs(0) == [SimpleGraph.empty(0)]


def test_graph_cap():
    with pytest.raises(ValueError):
        all_graphs(MAX_GRAPH_N + 1)


def test_colored_examples():
    assert sorted(g.colors for g in all_colored(2, 3)) == [(0,), (1,), (2,)]
    assert len(all_colored(3, 2)) == len(all_graphs(3)) == 4
    brute = len({brute_canonical_key(g) for g in all_labeled_colored(3, 3)})
    assert len(all_colored(3, 3)) == brute == 10


@pytest.mark.parametrize("n,k,va", [(3, 3, 1), (4, 3, 1), (3, 2, 2), (3, 3, 3), (4, 2, 2)])
def test_colored_counts_match_oracles(n, k, va):
    reps = all_colored(n, k, va)
    assert len(reps) == burnside_count(n, 2, k, va)
    if k ** (n * (n - 1) // 2) * va ** n <= 5000:
        assert len(reps) == len({brute_canonical_key(g) for g in all_labeled_colored(n, k, va)})


def test_colored_cap():
    with pytest.raises(ValueError):
        all_colored(7, 3)


def test_hypergraph_examples():
    assert len(all_hypergraphs(3, 3)) == 2
    reps = all_hypergraphs(4, 3)
    assert len(reps) == 5 == len({brute_canonical_key(g) for g in all_labeled_hypergraphs(4, 3)})
    assert sorted(g.edge_count() for g in reps) == [0, 1, 2, 3, 4]


@pytest.mark.parametrize("n", range(2, 6))
def test_hypergraph_arity_two_matches_graphs(n):
    assert len(all_hypergraphs(n, 2)) == len(all_graphs(n))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_hypergraph_counts_match_burnside(n):
    assert len(all_hypergraphs(n, 3)) == burnside_count(n, 3)


def test_multigraph_counts():
    assert len(all_multigraphs(3, 2)) == burnside_count(3, 2, 4)
    assert len(all_multigraphs(4, 2)) == burnside_count(4, 2, 4)


def test_threads_do_not_change_output():
    assert all_graphs(6, threads=1) == all_graphs(6, threads=3)
    assert all_hypergraphs(5, 3, threads=1) == all_hypergraphs(5, 3, threads=2)


def test_stream_order_is_deterministic():
    first = [canonical_form(g) for g in all_graphs(6)]
    assert first == [canonical_form(g) for g in all_graphs(6)]
    edges = [g.edge_count() for g in all_graphs(6)]
    assert edges == sorted(edges)


def test_random_graph():
    assert random_graph(6, 0.0, seed=1) == SimpleGraph.empty(6)
    assert random_graph(6, 1.0, seed=1) == SimpleGraph.complete(6)
    assert random_graph(10, 0.3, seed=42) == random_graph(10, 0.3, seed=42)
    with pytest.raises(ValueError):
        random_graph(5, 1.5, seed=0)


def test_random_graph_density():
    total = sum(random_graph(20, 0.3, seed=s).edge_count() for s in range(100))
    assert abs(total / (100 * 190) - 0.3) < 0.02
