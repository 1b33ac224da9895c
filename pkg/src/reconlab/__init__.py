"""Exhaustive verification tools for finite graph reconstruction claims."""

from .canon import Certificate, are_isomorphic, canonical_form, canonical_graph
from .core import (
    EdgeColoredGraph,
    MultiGraphTuple,
    Permutation,
    SimpleGraph,
    UniformHypergraph,
    apply_permutation,
    degree,
    fuse_multigraph,
    induced_subgraph,
)
from .deck import Deck, are_hypomorphic, deck, deck_hash
from .kperm import (
    SubsetPermutation,
    enumerate_subset_permutations,
    induces,
    is_measure_preserving,
    lift,
    lift_intersection,
)
from .measure import MeasureVector, TypeId, measure, measure_vector, profile, vectors_equal

__version__ = "0.1.0"
