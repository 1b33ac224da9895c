import random
from itertools import combinations

import pytest

from reconlab.canon import are_isomorphic, canonical_form
from reconlab.core import Permutation, SimpleGraph, apply_permutation, induced_subgraph
from reconlab.deck import Deck, are_hypomorphic, cards, deck, deck_hash
from reconlab.generate import all_graphs, all_hypergraphs, random_graph
from reconlab.measure import profile

from oracles import brute_deck_multiset, brute_isomorphic

K2, E2 = SimpleGraph.complete(2), SimpleGraph.empty(2)
K3 = SimpleGraph.complete(3)
P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
K1 = SimpleGraph.empty(1)


def test_deck_examples():
    assert deck(K3).cards == (canonical_form(K2),) * 3
    assert sorted(deck(P3).cards) == sorted([canonical_form(K2)] * 2 + [canonical_form(E2)])
    assert deck(K2) == deck(E2) == Deck(2, (canonical_form(K1),) * 2)


def test_deck_of_empty_structure_rejected():
    with pytest.raises(ValueError):
        deck(SimpleGraph.empty(0))


def test_cards_are_in_vertex_order():
    assert cards(P3)[1] == canonical_form(E2)
    assert cards(P3)[0] == cards(P3)[2] == canonical_form(K2)


def test_hypomorphic_examples():
    assert are_hypomorphic(K2, E2) and are_isomorphic(K2, E2) is None
    assert not are_hypomorphic(P3, K3)
    with pytest.raises(ValueError):
        are_hypomorphic(K3, SimpleGraph.complete(4))


def test_no_deck_collisions_n6():
    reps = all_graphs(6)
    assert len(reps) == 156
    decks = [deck(g) for g in reps]
    for i, j in combinations(range(len(reps)), 2):
        assert decks[i] != decks[j]


@pytest.mark.parametrize("reps", [all_graphs(5), all_hypergraphs(5, 3)], ids=["graphs", "hypergraphs"])
def test_deck_matches_brute_force_oracle(reps):
    brute = [brute_deck_multiset(g) for g in reps]
    decks = [deck(g) for g in reps]
    for i, j in combinations(range(len(reps)), 2):
        assert (decks[i] == decks[j]) == (brute[i] == brute[j])


def test_deck_hash():
    assert deck_hash(deck(K3)) == deck_hash(deck(K3))
    assert deck_hash(deck(P3)) != deck_hash(deck(K3))
    d = deck(P3)
    shuffled = Deck(3, tuple(reversed(d.cards)))
    assert deck_hash(shuffled) == deck_hash(d) and len(deck_hash(d)) == 16


def test_deck_size_and_invariance():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randrange(1, 10)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        d = deck(g)
        assert len(d) == n
        images = list(range(n))
        rng.shuffle(images)
        assert deck(apply_permutation(Permutation(tuple(images)), g)) == d


def test_edge_count_identity_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(2, 10)
        g = random_graph(n, rng.random(), rng.randrange(1 << 30))
        full = (1 << n) - 1
        total = sum(induced_subgraph(g, full ^ (1 << x)).edge_count() for x in range(n))
        assert total == (n - 2) * g.edge_count()


def test_kelly_profiles_on_hypomorphic_pairs():
    # simple graphs on 3..6 vertices have no non-trivial hypomorphic pairs,
    # so pairs come from relabelings plus the colliding hypergraphs at n=5
    rng = random.Random(3)
    pairs = []
    for n in range(1, 7):
        for g in all_graphs(n):
            images = list(range(n))
            rng.shuffle(images)
            pairs.append((g, apply_permutation(Permutation(tuple(images)), g)))
    pairs.append((K2, E2))
    hyper = all_hypergraphs(5, 3)
    pairs += [(g, h) for g, h in combinations(hyper, 2) if are_hypomorphic(g, h)]
    for g, h in pairs:
        for i in range(1, g.n):
            assert profile(g, i) == profile(h, i)


def test_hypergraph_decks_collide_at_n5():
    reps = all_hypergraphs(5, 3)
    colliding = [(g, h) for g, h in combinations(reps, 2) if are_hypomorphic(g, h)]
    assert len(colliding) == 3
    for g, h in colliding:
        assert brute_deck_multiset(g) == brute_deck_multiset(h)
        assert not brute_isomorphic(g, h)
