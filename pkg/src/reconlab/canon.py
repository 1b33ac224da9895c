"""Canonical labeling, certificates and isomorphism tests.

The search is the classic individualization-refinement scheme: refine an
ordered vertex partition to an equitable one, branch on the vertices of the
first non-singleton cell, and keep the lexicographically smallest encoding
found at the discrete leaves. Branches are pruned only when two candidates
are exchanged by a transposition that is itself an automorphism (twins),
which keeps the set of leaf encodings invariant under relabeling.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .core import (
    EdgeColoredGraph,
    MultiGraphTuple,
    Permutation,
    SimpleGraph,
    Structure,
    UniformHypergraph,
    apply_permutation,
    check_same_kind,
    fuse_multigraph,
    mask_members,
)

MAX_CANON_N = 32

_TAGS = {"simple": 1, "colored": 2, "multigraph": 3, "hypergraph": 4}


@dataclass(frozen=True, order=True)
class Certificate:
    """Canonical byte encoding of an isomorphism class.

    Equality and ordering compare the full bytes; ``digest`` is a 128-bit
    hash used only for bucketing and display.
    """

    data: bytes

    @cached_property
    def digest(self) -> bytes:
        return hashlib.blake2b(self.data, digest_size=16).digest()

    def hex(self) -> str:
        return self.digest.hex()

    def __repr__(self) -> str:
        return f"Certificate({self.hex()[:12]})"


def _refine(n, cell_of, signature):
    """Iterate ``signature`` to a fixed point; returns (cell_of, number of cells)."""
    ncells = len(set(cell_of))
    while True:
        sigs = [signature(v, cell_of) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncells:
            return new, ncells
        cell_of, ncells = new, len(ranks)


def _search(n, initial, signature, leaf, swaps_ok):
    """Return (best leaf encoding, labeling) where labeling[v] is v's canonical position."""
    best = None
    best_lab = None

    def visit(cell_of, ncells):
        nonlocal best, best_lab
        cell_of, ncells = _refine(n, cell_of, signature)
        if ncells == n:
            enc = leaf(cell_of)
            if best is None or enc < best:
                best, best_lab = enc, cell_of
            return
        sizes = [0] * ncells
        for c in cell_of:
            sizes[c] += 1
        target = next(c for c in range(ncells) if sizes[c] > 1)
        chosen = []
        for v in range(n):
            if cell_of[v] != target:
                continue
            if any(swaps_ok(u, v) for u in chosen):
                continue
            chosen.append(v)
            split = [2 * c + (c == target and w != v) for w, c in enumerate(cell_of)]
            visit(split, ncells + 1)

    if n == 0:
        return leaf([]), []
    ranks = {c: i for i, c in enumerate(sorted(set(initial)))}
    start = [ranks[c] for c in initial]
    visit(start, len(ranks))
    return best, best_lab


def _canon_simple(g: SimpleGraph):
    n, adj = g.n, g.adj

    def signature(v, cell_of):
        row = adj[v]
        counts = [0] * (max(cell_of) + 1)
        for w in mask_members(row):
            counts[cell_of[w]] += 1
        return (cell_of[v], tuple(counts))

    def leaf(cell_of):
        order = [0] * n
        for v, c in enumerate(cell_of):
            order[c] = v
        bits = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                bits = bits << 1 | (row >> order[j] & 1)
        return bits

    def swaps_ok(u, v):
        mask = ~((1 << u) | (1 << v))
        return adj[u] & mask == adj[v] & mask

    bits, lab = _search(n, [0] * n, signature, leaf, swaps_ok)
    nbytes = (n * (n - 1) // 2 + 7) // 8
    return bytes([_TAGS["simple"], n]) + bits.to_bytes(nbytes, "big"), lab


def _canon_colored(g: EdgeColoredGraph, tag: str, param: int):
    n = g.n
    mat = g.to_matrix()
    for x in range(n):
        mat[x][x] = -1

    def signature(v, cell_of):
        row = mat[v]
        return (cell_of[v], tuple(sorted((cell_of[w], row[w]) for w in range(n) if w != v)))

    def leaf(cell_of):
        order = [0] * n
        for v, c in enumerate(cell_of):
            order[c] = v
        return tuple(mat[order[i]][order[j]] for i, j in combinations(range(n), 2))

    def swaps_ok(u, v):
        if g.vertex_colors[u] != g.vertex_colors[v]:
            return False
        ru, rv = mat[u], mat[v]
        return all(ru[w] == rv[w] for w in range(n) if w != u and w != v)

    enc, lab = _search(n, list(g.vertex_colors), signature, leaf, swaps_ok)
    vcols = sorted(g.vertex_colors)
    words = [n, param, *vcols, *enc]
    if any(w >= 1 << 16 for w in words):
        raise ValueError("colors must be below 65536")
    data = bytes([_TAGS[tag]]) + b"".join(w.to_bytes(2, "big") for w in words)
    return data, lab


def _canon_hypergraph(g: UniformHypergraph):
    n = g.n
    edges = list(g.edges)
    incident = [[e for e in edges if e >> v & 1] for v in range(n)]

    def signature(v, cell_of):
        return (cell_of[v], tuple(sorted(
            tuple(sorted(cell_of[w] for w in mask_members(e) if w != v))
            for e in incident[v]
        )))

    def leaf(cell_of):
        return tuple(sorted(sum(1 << cell_of[w] for w in mask_members(e)) for e in edges))

    edge_set = g.edges

    def swaps_ok(u, v):
        both = (1 << u) | (1 << v)
        for e in edges:
            inter = e & both
            if inter and inter != both and (e ^ both) not in edge_set:
                return False
        return True

    enc, lab = _search(n, [0] * n, signature, leaf, swaps_ok)
    data = bytes([_TAGS["hypergraph"], n, g.m]) + b"".join(e.to_bytes(8, "big") for e in enc)
    return data, lab


def canonical_labeling_uncached(g: Structure) -> tuple[Certificate, Permutation]:
    if g.n > MAX_CANON_N:
        raise ValueError(f"n={g.n} exceeds the canonical-form cap {MAX_CANON_N}")
    if isinstance(g, SimpleGraph):
        data, lab = _canon_simple(g)
    elif isinstance(g, EdgeColoredGraph):
        data, lab = _canon_colored(g, "colored", g.k)
    elif isinstance(g, MultiGraphTuple):
        data, lab = _canon_colored(fuse_multigraph(g), "multigraph", g.k)
    elif isinstance(g, UniformHypergraph):
        data, lab = _canon_hypergraph(g)
    else:
        raise TypeError(f"not a structure: {type(g).__name__}")
    return Certificate(data), Permutation(tuple(lab))


@lru_cache(maxsize=1 << 18)
def canonical_labeling(g: Structure) -> tuple[Certificate, Permutation]:
    """Certificate of ``g`` and a permutation taking ``g`` to its canonical form."""
    return canonical_labeling_uncached(g)


def canonical_form(g: Structure) -> Certificate:
    return canonical_labeling(g)[0]


def canonical_graph(g: Structure) -> Structure:
    """The canonical representative of ``g``'s isomorphism class."""
    return apply_permutation(canonical_labeling(g)[1], g)


def are_isomorphic(a: Structure, b: Structure) -> Permutation | None:
    """A permutation ``p`` with ``apply_permutation(p, a) == b``, or None."""
    check_same_kind(a, b)
    cert_a, lab_a = canonical_labeling(a)
    cert_b, lab_b = canonical_labeling(b)
    if cert_a != cert_b:
        return None
    witness = lab_b.inverse().compose(lab_a)
    if apply_permutation(witness, a) != b:
        raise AssertionError("canonical labelings disagree with certificates")
    return witness


__all__ = [
    "Certificate",
    "MAX_CANON_N",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
]
