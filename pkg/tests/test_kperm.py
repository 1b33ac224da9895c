from itertools import permutations, product
from math import factorial

import pytest

from reconlab.canon import are_isomorphic
from reconlab.core import Permutation, SimpleGraph
from reconlab.deck import are_hypomorphic
from reconlab.generate import all_graphs
from reconlab.kperm import (
    SubsetPermutation,
    enumerate_subset_permutations,
    induced_subset_permutation,
    induces,
    is_measure_preserving,
    lift,
    lift_intersection,
)

from oracles import set_lift

K3 = SimpleGraph.complete(3)
P3 = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
# {0,1} -> {1,2}, {1,2} -> {0,2}, {0,2} -> {0,1}
CYCLE3 = SubsetPermutation.from_mapping(3, {
    frozenset({0, 1}): frozenset({1, 2}),
    frozenset({1, 2}): frozenset({0, 2}),
    frozenset({0, 2}): frozenset({0, 1}),
})


def test_cycle_example():
    p = lift(CYCLE3)
    assert p == Permutation((1, 2, 0))
    for chi in CYCLE3.subsets():
        assert p.map_mask(chi) == CYCLE3(chi)


def test_identity_lifts_to_identity():
    for n in range(1, 6):
        assert lift(SubsetPermutation(tuple(range(n)))) == Permutation.identity(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lift_matches_set_oracle(n):
    for s in enumerate_subset_permutations(n):
        expected, mapping = set_lift(n, s.images)
        assert lift(s).images == expected
        for chi, image in mapping.items():
            assert s(sum(1 << v for v in chi)) == sum(1 << v for v in image)


@pytest.mark.parametrize("n", [3, 4])
def test_lift_is_a_homomorphism(n):
    perms = list(enumerate_subset_permutations(n))
    for s, t in product(perms, perms):
        assert lift(s.compose(t)) == lift(s).compose(lift(t))


def test_intersection_examples():
    for n in range(2, 6):
        ident = SubsetPermutation(tuple(range(n)))
        assert all(lift_intersection(ident, x) == {x} for x in range(n))
    assert lift_intersection(CYCLE3, 2) == {0}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_intersection_is_singleton_lift(n):
    for s in enumerate_subset_permutations(n):
        p = lift(s)
        for x in range(n):
            assert lift_intersection(s, x) == {p(x)}


def test_intersection_needs_two_points():
    with pytest.raises(ValueError):
        lift_intersection(SubsetPermutation((0,)), 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lift_induces(n):
    assert all(induces(lift(s), s) for s in enumerate_subset_permutations(n))


def test_identity_does_not_induce_nonidentity():
    assert not induces(Permutation.identity(3), CYCLE3)
    with pytest.raises(ValueError):
        induces(Permutation.identity(4), CYCLE3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vertex_permutations_biject_onto_subset_permutations(n):
    subset_perms = set(enumerate_subset_permutations(n))
    induced = [induced_subset_permutation(Permutation(p)) for p in permutations(range(n))]
    assert len(subset_perms) == len(set(induced)) == factorial(n)
    assert set(induced) == subset_perms


def test_unique_inducer_n4():
    vertex_perms = [Permutation(p) for p in permutations(range(4))]
    for s in enumerate_subset_permutations(4):
        assert [p for p in vertex_perms if induces(p, s)] == [lift(s)]


def test_enumeration_counts():
    assert len(list(enumerate_subset_permutations(3))) == 6
    assert len(list(enumerate_subset_permutations(4))) == 24
    assert len(list(enumerate_subset_permutations(1))) == 1
    with pytest.raises(ValueError):
        list(enumerate_subset_permutations(7))


def test_subset_permutation_validation():
    with pytest.raises(ValueError):
        SubsetPermutation((0, 0, 1))
    with pytest.raises(ValueError):
        CYCLE3(0b111)


def test_measure_preserving_examples():
    ident = SubsetPermutation((0, 1, 2))
    assert is_measure_preserving(ident, K3, K3)
    assert not any(is_measure_preserving(s, K3, P3) for s in enumerate_subset_permutations(3))
    with pytest.raises(ValueError):
        is_measure_preserving(ident, K3, SimpleGraph.complete(4))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_measure_preserving_exists_iff_hypomorphic(n):
    reps = all_graphs(n)
    subset_perms = list(enumerate_subset_permutations(n))
    for a in reps:
        for b in reps:
            exists = any(is_measure_preserving(s, a, b) for s in subset_perms)
            assert exists == are_hypomorphic(a, b)
            if n >= 3 and exists:
                assert are_isomorphic(a, b) is not None
