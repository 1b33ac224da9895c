"""Vertex-deleted decks and (-1)-hypomorphy."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property

from .canon import Certificate, canonical_form
from .core import Structure, check_same_kind, induced_subgraph


@dataclass(frozen=True)
class Deck:
    """Multiset of card certificates, stored sorted so equality is multiset equality."""

    n: int
    cards: tuple[Certificate, ...]

    def __post_init__(self):
        cards = tuple(sorted(self.cards))
        if len(cards) != self.n:
            raise ValueError(f"a deck on {self.n} vertices has {self.n} cards, got {len(cards)}")
        object.__setattr__(self, "cards", cards)

    def __len__(self) -> int:
        return len(self.cards)

    @cached_property
    def digest(self) -> bytes:
        return deck_hash(self)


def cards(g: Structure) -> list[Certificate]:
    """Card certificates in vertex order: entry ``x`` certifies ``g`` minus ``x``."""
    full = (1 << g.n) - 1
    return [canonical_form(induced_subgraph(g, full ^ (1 << x))) for x in range(g.n)]


def deck(g: Structure) -> Deck:
    if g.n < 1:
        raise ValueError("the deck of an empty structure is undefined")
    return Deck(g.n, tuple(cards(g)))


def deck_hash(d: Deck) -> bytes:
    """128-bit digest of the sorted card digests; independent of card order."""
    h = hashlib.blake2b(digest_size=16)
    h.update(d.n.to_bytes(2, "big"))
    for digest in sorted(c.digest for c in d.cards):
        h.update(digest)
    return h.digest()


def are_hypomorphic(a: Structure, b: Structure) -> bool:
    check_same_kind(a, b)
    da, db = deck(a), deck(b)
    return da.digest == db.digest and da == db
