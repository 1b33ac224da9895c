"""Measures of vertex subsets, per-size type profiles and the card-type count vector."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .canon import Certificate, canonical_form
from .core import Structure, check_same_kind, induced_subgraph, to_mask, VertexSet
from .deck import cards


@dataclass(frozen=True, order=True)
class TypeId:
    """Isomorphism type of an induced substructure: its size and certificate."""

    size: int
    certificate: Certificate


@dataclass(frozen=True)
class MeasureVector:
    """Sparse count vector over card types; ``counts`` is sorted by type."""

    n: int
    counts: tuple[tuple[TypeId, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(sorted(dict(self.counts).items())))

    def as_dict(self) -> dict[TypeId, int]:
        return dict(self.counts)

    def total(self) -> int:
        return sum(c for _, c in self.counts)


def measure(g: Structure, subset: VertexSet) -> TypeId:
    mask = to_mask(g.n, subset)
    return TypeId(mask.bit_count(), canonical_form(induced_subgraph(g, mask)))


def measure_vector(g: Structure) -> MeasureVector:
    counts = Counter(TypeId(g.n - 1, c) for c in cards(g))
    return MeasureVector(g.n, tuple(counts.items()))


def profile(g: Structure, i: int) -> dict[TypeId, int]:
    """How many i-subsets carry each type."""
    if not 1 <= i <= g.n:
        raise ValueError(f"profile size must lie in [1, {g.n}], got {i}")
    return dict(Counter(measure(g, combo) for combo in combinations(range(g.n), i)))


def vectors_equal(a: Structure, b: Structure) -> bool:
    check_same_kind(a, b)
    return measure_vector(a) == measure_vector(b)
