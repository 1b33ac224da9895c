"""Exhaustive and random generation of small structures.

Isomorphism classes are generated level by level: level ``e`` holds the
classes with ``e`` nonzero slots (edges, colored pairs or hyperedges), and
level ``e + 1`` is obtained by filling one more slot in every representative
of level ``e`` and deduplicating by certificate. Every class is reached,
since clearing any filled slot of a structure lands in the previous level.
Representatives are canonical graphs, so the output does not depend on
which parent produced a class or on how the work was sharded.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Callable, Iterator

import numpy as np

from .canon import canonical_labeling_uncached as canonical_labeling
from .core import (
    EdgeColoredGraph,
    MultiGraphTuple,
    SimpleGraph,
    Structure,
    UniformHypergraph,
    apply_permutation,
    split_multigraph,
)
from .parallel import parallel_map

MAX_GRAPH_N = 9
MAX_COLORED_LABELINGS = 10 ** 6
MAX_HYPERGRAPH_SLOTS = 20


def _children_simple(g: SimpleGraph) -> Iterator[SimpleGraph]:
    n, adj = g.n, g.adj
    for x, y in combinations(range(n), 2):
        if not adj[x] >> y & 1:
            new = list(adj)
            new[x] |= 1 << y
            new[y] |= 1 << x
            yield SimpleGraph._trusted(n, tuple(new))


def _children_colored(g: EdgeColoredGraph) -> Iterator[EdgeColoredGraph]:
    for i, c in enumerate(g.colors):
        if c == 0:
            for color in range(1, g.k):
                new = list(g.colors)
                new[i] = color
                yield EdgeColoredGraph(g.n, g.k, tuple(new), g.vertex_colors)


def _children_hypergraph(g: UniformHypergraph) -> Iterator[UniformHypergraph]:
    for combo in combinations(range(g.n), g.m):
        e = sum(1 << v for v in combo)
        if e not in g.edges:
            yield UniformHypergraph(g.n, g.m, g.edges | {e})


def _expand(args) -> dict:
    children, parents = args
    found = {}
    for parent in parents:
        for child in children(parent):
            cert, lab = canonical_labeling(child)
            if cert not in found:
                found[cert] = apply_permutation(lab, child)
    return found


def _classes(seeds: list[Structure], children: Callable, threads: int = 1) -> list[Structure]:
    level = {}
    for s in seeds:
        cert, lab = canonical_labeling(s)
        level.setdefault(cert, apply_permutation(lab, s))
    out = []
    while level:
        certs = sorted(level)
        reps = [level[c] for c in certs]
        out.extend(reps)
        shards = [reps[i::max(threads, 1)] for i in range(max(threads, 1))]
        merged = {}
        for found in parallel_map(_expand, [(children, s) for s in shards if s], threads):
            for cert, rep in found.items():
                merged.setdefault(cert, rep)
        level = merged
    return out


def all_graphs(n: int, threads: int = 1) -> list[SimpleGraph]:
    """One canonical representative per isomorphism class of graphs on ``n`` vertices.

    Ordered by edge count, then certificate.
    """
    if not 0 <= n <= MAX_GRAPH_N:
        raise ValueError(f"exhaustive graph generation supports 0 <= n <= {MAX_GRAPH_N}")
    return _classes([SimpleGraph.empty(n)], _children_simple, threads)


def all_colored(n: int, k: int, vertex_alphabet: int = 1,
                threads: int = 1) -> list[EdgeColoredGraph]:
    """Classes of ``k``-edge-colored graphs on ``n`` vertices.

    ``vertex_alphabet > 1`` also varies vertex colors over ``[0, vertex_alphabet)``
    (the free-diagonal mode for symmetric matrices).
    """
    if k < 1 or vertex_alphabet < 1 or n < 0:
        raise ValueError("need n >= 0, k >= 1 and vertex_alphabet >= 1")
    if k ** comb(n, 2) * vertex_alphabet ** n > MAX_COLORED_LABELINGS:
        raise ValueError(f"too many labelings for exhaustive generation (n={n}, k={k})")
    seeds = [
        EdgeColoredGraph(n, k, (0,) * comb(n, 2), vc)
        for vc in combinations_with_replacement(range(vertex_alphabet), n)
    ]
    return _classes(seeds, _children_colored, threads)


def all_multigraphs(n: int, layers: int, threads: int = 1) -> list[MultiGraphTuple]:
    """Classes of ``layers``-tuples of graphs on a common base, via fused colors."""
    if layers < 1:
        raise ValueError("need at least one layer")
    return [split_multigraph(g, layers) for g in all_colored(n, 1 << layers, threads=threads)]


def all_hypergraphs(n: int, m: int, threads: int = 1) -> list[UniformHypergraph]:
    if m < 2 or n < m:
        raise ValueError("need m >= 2 and n >= m")
    if comb(n, m) > MAX_HYPERGRAPH_SLOTS:
        raise ValueError(f"C({n},{m}) hyperedge slots exceed the exhaustive cap")
    return _classes([UniformHypergraph(n, m, frozenset())], _children_hypergraph, threads)


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    """G(n, p) graph drawn with numpy's PCG64 seeded by ``seed``.

    One uniform draw per pair, in row-major upper-triangle order.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    draws = rng.random(comb(n, 2))
    adj = [0] * n
    for (x, y), u in zip(combinations(range(n), 2), draws):
        if u < p:
            adj[x] |= 1 << y
            adj[y] |= 1 << x
    return SimpleGraph(n, tuple(adj))
