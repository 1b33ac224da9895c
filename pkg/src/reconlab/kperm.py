"""Permutations of the (n-1)-subsets of a base and their lift to the base itself.

An (n-1)-subset is the complement of one vertex, so a subset permutation is
stored as ``images[x] = y`` meaning ``s(E - {x}) = E - {y}``. With that
representation the lifted vertex permutation is ``x -> images[x]``; the
set-level functions below recompute everything from explicit subsets so the
representation shortcut can be checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .canon import canonical_form
from .core import Permutation, Structure, check_same_kind, induced_subgraph, mask_members

MAX_EXHAUSTIVE_N = 6


@dataclass(frozen=True)
class SubsetPermutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on the (n-1)-subsets: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def __call__(self, subset: int) -> int:
        """Image of an (n-1)-subset given as a bitmask."""
        missing = self.full ^ subset
        if subset >> self.n or missing.bit_count() != 1:
            raise ValueError(f"{subset:#x} is not an (n-1)-subset of [0, {self.n})")
        return self.full ^ (1 << self.images[missing.bit_length() - 1])

    @classmethod
    def from_mapping(cls, n: int, mapping: dict) -> SubsetPermutation:
        """Build from ``{frozenset(chi): frozenset(image)}`` over all (n-1)-subsets."""
        base = frozenset(range(n))
        images = [None] * n
        for chi, image in mapping.items():
            (x,) = base - frozenset(chi)
            (y,) = base - frozenset(image)
            images[x] = y
        if None in images:
            raise ValueError("mapping does not cover every (n-1)-subset")
        return cls(tuple(images))

    def compose(self, other: SubsetPermutation) -> SubsetPermutation:
        """``self ∘ other``."""
        return SubsetPermutation(tuple(self.images[other.images[x]] for x in range(self.n)))

    def subsets(self) -> list[int]:
        return [self.full ^ (1 << x) for x in range(self.n)]


def lift(s: SubsetPermutation) -> Permutation:
    """The vertex permutation x -> the single element of E minus s(E - {x})."""
    images = []
    for x in range(s.n):
        rest = mask_members(s.full ^ s(s.full ^ (1 << x)))
        if len(rest) != 1:
            raise AssertionError("complement of an (n-1)-subset is not a singleton")
        images.append(rest[0])
    return Permutation(tuple(images))


def lift_intersection(s: SubsetPermutation, x: int) -> frozenset[int]:
    """Intersection of s(E - {j}) over all j != x."""
    if s.n < 2:
        raise ValueError("the intersection formula needs n >= 2")
    if not 0 <= x < s.n:
        raise ValueError(f"vertex {x} out of range for n={s.n}")
    acc = s.full
    for j in range(s.n):
        if j != x:
            acc &= s(s.full ^ (1 << j))
    return frozenset(mask_members(acc))


def induced_subset_permutation(p: Permutation) -> SubsetPermutation:
    """The subset permutation chi -> p(chi) on (n-1)-subsets."""
    full = (1 << p.n) - 1
    return SubsetPermutation.from_mapping(p.n, {
        frozenset(mask_members(full ^ (1 << x))): frozenset(mask_members(p.map_mask(full ^ (1 << x))))
        for x in range(p.n)
    })


def induces(p: Permutation, s: SubsetPermutation) -> bool:
    """True iff p(chi) = s(chi) for every (n-1)-subset chi."""
    if p.n != s.n:
        raise ValueError(f"size mismatch: permutation on {p.n}, subset permutation on {s.n}")
    return all(p.map_mask(chi) == s(chi) for chi in s.subsets())


def enumerate_subset_permutations(n: int) -> Iterator[SubsetPermutation]:
    """All n! subset permutations, in lexicographic order of ``images``."""
    if not 0 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration supports n <= {MAX_EXHAUSTIVE_N}")
    for images in permutations(range(n)):
        yield SubsetPermutation(images)


def is_measure_preserving(s: SubsetPermutation, a: Structure, b: Structure) -> bool:
    """True iff a restricted to chi and b restricted to s(chi) are isomorphic for every chi."""
    check_same_kind(a, b)
    if s.n != a.n:
        raise ValueError(f"size mismatch: subset permutation on {s.n}, structures on {a.n}")
    return all(
        canonical_form(induced_subgraph(a, chi)) == canonical_form(induced_subgraph(b, s(chi)))
        for chi in s.subsets()
    )
