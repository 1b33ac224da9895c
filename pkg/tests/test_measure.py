import random
from itertools import combinations

import pytest

from reconlab.canon import canonical_form
from reconlab.core import Permutation, SimpleGraph, apply_permutation
from reconlab.deck import are_hypomorphic, deck
from reconlab.generate import all_graphs, all_hypergraphs, random_graph
from reconlab.measure import TypeId, measure, measure_vector, profile, vectors_equal

K3 = SimpleGraph.complete(3)
P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
K2, E2, K1 = SimpleGraph.complete(2), SimpleGraph.empty(2), SimpleGraph.empty(1)


def tid(g):
    return TypeId(g.n, canonical_form(g))


def test_measure_examples():
    assert measure(K3, {0, 2}) == tid(K2)
    assert measure(P3, {0, 2}) == tid(E2)
    with pytest.raises(ValueError):
        measure(P3, {5})


def test_measure_invariance_random():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randrange(1, 9)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        images = list(range(n))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        chi = {v for v in range(n) if rng.random() < 0.5}
        assert measure(g, chi) == measure(apply_permutation(p, g), {p(v) for v in chi})


def test_measure_vector_examples():
    assert measure_vector(K3).as_dict() == {tid(K2): 3}
    assert measure_vector(P3).as_dict() == {tid(K2): 2, tid(E2): 1}


def test_vector_total_is_n():
    for n in range(1, 7):
        for g in all_graphs(n):
            assert measure_vector(g).total() == n


def test_profile_examples():
    assert profile(K3, 2) == {tid(K2): 3}
    assert profile(P3, 1) == {tid(K1): 3}
    with pytest.raises(ValueError):
        profile(P3, 0)
    with pytest.raises(ValueError):
        profile(P3, 4)


def test_profile_of_full_size_is_the_type():
    g = random_graph(6, 0.5, seed=9)
    assert profile(g, 6) == {tid(g): 1}


def test_vectors_equal_examples():
    assert not vectors_equal(K3, P3)
    g = random_graph(7, 0.5, seed=2)
    assert vectors_equal(g, apply_permutation(Permutation((3, 1, 4, 0, 6, 5, 2)), g))


@pytest.mark.parametrize("n", range(1, 7))
def test_vectors_equal_iff_hypomorphic(n):
    reps = all_graphs(n)
    for a, b in combinations(reps, 2):
        assert vectors_equal(a, b) == are_hypomorphic(a, b)


def test_vectors_equal_iff_hypomorphic_hypergraphs():
    reps = all_hypergraphs(5, 3)
    for a, b in combinations(reps, 2):
        assert vectors_equal(a, b) == are_hypomorphic(a, b)


def test_vector_regroups_deck():
    for g in all_graphs(5):
        vec = measure_vector(g).as_dict()
        assert sorted(t.certificate for t, c in vec.items() for _ in range(c)) == list(deck(g).cards)
