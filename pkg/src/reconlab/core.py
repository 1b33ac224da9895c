"""Finite structures on a labeled base ``{0, ..., n-1}``.

Four kinds are supported: simple graphs, edge-colored graphs (with optional
vertex colors), tuples of simple graphs sharing one base, and m-uniform
hypergraphs. Every value is immutable; all operations return new values.

Vertex subsets are passed either as iterables of ints or as int bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

MAX_VERTICES = 64

VertexSet = Union[int, Iterable[int]]


def pair_index(n: int, x: int, y: int) -> int:
    """Position of the unordered pair {x, y} in row-major upper-triangle order."""
    if x > y:
        x, y = y, x
    return x * (2 * n - x - 1) // 2 + (y - x - 1)


def pairs(n: int):
    return combinations(range(n), 2)


def to_mask(n: int, vertices: VertexSet) -> int:
    if isinstance(vertices, int):
        mask = vertices
        if mask < 0 or mask >> n:
            raise ValueError(f"vertex mask {mask:#x} out of range for n={n}")
        return mask
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def mask_members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in [0, {MAX_VERTICES}], got {n}")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        if self.n != other.n:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[other.images[x]] for x in range(self.n)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def map_mask(self, mask: int) -> int:
        out = 0
        for v in mask_members(mask):
            out |= 1 << self.images[v]
        return out


@dataclass(frozen=True)
class SimpleGraph:
    """Loop-free undirected graph; ``adj[x]`` is the neighbor bitmask of ``x``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        adj = tuple(self.adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for x, row in enumerate(adj):
            if row >> self.n or row < 0:
                raise ValueError(f"row {x} has out-of-range neighbors")
            if row >> x & 1:
                raise ValueError(f"loop at vertex {x}")
            for y in mask_members(row):
                if not adj[y] >> x & 1:
                    raise ValueError(f"asymmetric adjacency at ({x}, {y})")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> SimpleGraph:
        # hot paths build adjacency that is valid by construction
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj = [0] * n
        for x, y in edges:
            if x == y:
                raise ValueError(f"loop at vertex {x}")
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"edge ({x}, {y}) out of range for n={n}")
            adj[x] |= 1 << y
            adj[y] |= 1 << x
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << x) for x in range(n)))

    @classmethod
    def from_bits(cls, n: int, bits: int) -> SimpleGraph:
        """Build from an upper-triangle bit vector (bit ``pair_index`` set = edge)."""
        adj = [0] * n
        for i, (x, y) in enumerate(pairs(n)):
            if bits >> i & 1:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
        return cls(n, tuple(adj))

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adj[x] >> y & 1)

    def __call__(self, x: int, y: int) -> int:
        return self.adj[x] >> y & 1

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in pairs(self.n) if self.adj[x] >> y & 1]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def to_bits(self) -> int:
        bits = 0
        for i, (x, y) in enumerate(pairs(self.n)):
            if self.adj[x] >> y & 1:
                bits |= 1 << i
        return bits

    def to_colored(self) -> EdgeColoredGraph:
        return EdgeColoredGraph(
            self.n, 2, tuple(self.adj[x] >> y & 1 for x, y in pairs(self.n))
        )


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Complete graph whose pairs carry colors in ``[0, k)``; color 0 is "no edge".

    ``colors`` lists pair colors in upper-triangle row-major order.
    ``vertex_colors`` defaults to all zeros.
    """

    n: int
    k: int
    colors: tuple[int, ...]
    vertex_colors: tuple[int, ...] = None

    def __post_init__(self):
        _check_n(self.n)
        if self.k < 1:
            raise ValueError("k must be at least 1")
        colors = tuple(self.colors)
        if len(colors) != self.n * (self.n - 1) // 2:
            raise ValueError("colors must have one entry per unordered pair")
        if any(not 0 <= c < self.k for c in colors):
            raise ValueError(f"edge colors must lie in [0, {self.k})")
        vcol = self.vertex_colors
        vcol = (0,) * self.n if vcol is None else tuple(vcol)
        if len(vcol) != self.n or any(c < 0 for c in vcol):
            raise ValueError("vertex_colors must be n nonnegative ints")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "vertex_colors", vcol)

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[tuple[int, int, int]],
                   vertex_colors: Iterable[int] | None = None) -> EdgeColoredGraph:
        colors = [0] * (n * (n - 1) // 2)
        for x, y, c in edges:
            if x == y or not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"bad pair ({x}, {y}) for n={n}")
            colors[pair_index(n, x, y)] = c
        return cls(n, k, tuple(colors),
                   None if vertex_colors is None else tuple(vertex_colors))

    @classmethod
    def from_matrix(cls, matrix, k: int) -> EdgeColoredGraph:
        """Symmetric matrix over ``{0..k-1}``: off-diagonal entries become pair
        colors, the diagonal becomes vertex colors."""
        n = len(matrix)
        for x in range(n):
            for y in range(n):
                if matrix[x][y] != matrix[y][x]:
                    raise ValueError("matrix is not symmetric")
        return cls(n, k, tuple(matrix[x][y] for x, y in pairs(n)),
                   tuple(matrix[x][x] for x in range(n)))

    def color(self, x: int, y: int) -> int:
        if x == y:
            raise ValueError("no color on the diagonal; use vertex_colors")
        return self.colors[pair_index(self.n, x, y)]

    def __call__(self, x: int, y: int) -> int:
        return self.color(x, y)

    def to_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for x in range(self.n):
            m[x][x] = self.vertex_colors[x]
        for (x, y), c in zip(pairs(self.n), self.colors):
            m[x][y] = m[y][x] = c
        return m

    def edges(self) -> list[tuple[int, int, int]]:
        return [(x, y, c) for (x, y), c in zip(pairs(self.n), self.colors) if c]

    def edge_count(self) -> int:
        return sum(1 for c in self.colors if c)


@dataclass(frozen=True)
class MultiGraphTuple:
    layers: tuple[SimpleGraph, ...]

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ValueError("a multigraph tuple needs at least one layer")
        if len({g.n for g in layers}) != 1:
            raise ValueError("all layers must share one vertex count")
        object.__setattr__(self, "layers", layers)

    @property
    def n(self) -> int:
        return self.layers[0].n

    @property
    def k(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class UniformHypergraph:
    """m-uniform hypergraph; edges are stored as vertex bitmasks.

    Bases smaller than ``m`` are allowed (they can carry no edge) so that
    small induced substructures stay representable.
    """

    n: int
    m: int
    edges: frozenset[int]

    def __post_init__(self):
        _check_n(self.n)
        if self.m < 2:
            raise ValueError("edge arity must be at least 2")
        edges = frozenset(self.edges)
        for e in edges:
            if e < 0 or e >> self.n or e.bit_count() != self.m:
                raise ValueError(f"edge {e:#x} is not an {self.m}-subset of [0, {self.n})")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, m: int, edges: Iterable[Iterable[int]]) -> UniformHypergraph:
        masks = []
        for e in edges:
            e = tuple(e)
            if len(set(e)) != len(e):
                raise ValueError(f"repeated vertex in edge {e}")
            masks.append(to_mask(n, e))
        return cls(n, m, frozenset(masks))

    def edge_lists(self) -> list[list[int]]:
        return sorted(mask_members(e) for e in self.edges)

    def edge_count(self) -> int:
        return len(self.edges)


Structure = Union[SimpleGraph, EdgeColoredGraph, MultiGraphTuple, UniformHypergraph]


def kind_of(g: Structure) -> str:
    if isinstance(g, SimpleGraph):
        return "simple"
    if isinstance(g, EdgeColoredGraph):
        return "colored"
    if isinstance(g, MultiGraphTuple):
        return "multigraph"
    if isinstance(g, UniformHypergraph):
        return "hypergraph"
    raise TypeError(f"not a structure: {type(g).__name__}")


def params_of(g: Structure) -> tuple:
    """Kind plus the parameters two structures must share to be compared."""
    kind = kind_of(g)
    if kind == "colored":
        return (kind, g.n, g.k)
    if kind == "multigraph":
        return (kind, g.n, g.k)
    if kind == "hypergraph":
        return (kind, g.n, g.m)
    return (kind, g.n)


def check_same_kind(a: Structure, b: Structure) -> None:
    if params_of(a) != params_of(b):
        raise ValueError(f"structures differ in kind or parameters: "
                         f"{params_of(a)} vs {params_of(b)}")


def induced_subgraph(g: Structure, subset: VertexSet) -> Structure:
    """Restrict ``g`` to ``subset``, relabeling kept vertices 0.. in ascending order."""
    mask = to_mask(g.n, subset)
    keep = mask_members(mask)
    if isinstance(g, SimpleGraph):
        adj = []
        for x in keep:
            row = g.adj[x]
            adj.append(sum(1 << i for i, y in enumerate(keep) if row >> y & 1))
        return SimpleGraph._trusted(len(keep), tuple(adj))
    if isinstance(g, EdgeColoredGraph):
        colors = tuple(g.colors[pair_index(g.n, x, y)] for x, y in combinations(keep, 2))
        return EdgeColoredGraph(len(keep), g.k, colors,
                                tuple(g.vertex_colors[x] for x in keep))
    if isinstance(g, MultiGraphTuple):
        return MultiGraphTuple(tuple(induced_subgraph(layer, mask) for layer in g.layers))
    if isinstance(g, UniformHypergraph):
        relabel = {x: i for i, x in enumerate(keep)}
        edges = frozenset(
            sum(1 << relabel[v] for v in mask_members(e))
            for e in g.edges if e & mask == e
        )
        return UniformHypergraph(len(keep), g.m, edges)
    raise TypeError(f"not a structure: {type(g).__name__}")


def apply_permutation(p: Permutation, g: Structure) -> Structure:
    """Transport ``g`` along ``p``: the result R has R(p(x), p(y)) = g(x, y)."""
    if p.n != g.n:
        raise ValueError(f"permutation on {p.n} points applied to structure on {g.n}")
    im = p.images
    if isinstance(g, SimpleGraph):
        adj = [0] * g.n
        for x in range(g.n):
            adj[im[x]] = p.map_mask(g.adj[x])
        return SimpleGraph._trusted(g.n, tuple(adj))
    if isinstance(g, EdgeColoredGraph):
        colors = [0] * len(g.colors)
        for (x, y), c in zip(pairs(g.n), g.colors):
            colors[pair_index(g.n, im[x], im[y])] = c
        vcol = [0] * g.n
        for x in range(g.n):
            vcol[im[x]] = g.vertex_colors[x]
        return EdgeColoredGraph(g.n, g.k, tuple(colors), tuple(vcol))
    if isinstance(g, MultiGraphTuple):
        return MultiGraphTuple(tuple(apply_permutation(p, layer) for layer in g.layers))
    if isinstance(g, UniformHypergraph):
        return UniformHypergraph(g.n, g.m, frozenset(p.map_mask(e) for e in g.edges))
    raise TypeError(f"not a structure: {type(g).__name__}")


def degree(g: SimpleGraph, x: int) -> int:
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for n={g.n}")
    return g.adj[x].bit_count()


def fuse_multigraph(t: MultiGraphTuple) -> EdgeColoredGraph:
    """Encode layer memberships of each pair as one color: bit i set iff layer i has the edge."""
    if not isinstance(t, MultiGraphTuple):
        raise TypeError("fuse_multigraph expects a MultiGraphTuple")
    n = t.n
    colors = tuple(
        sum(layer(x, y) << i for i, layer in enumerate(t.layers))
        for x, y in pairs(n)
    )
    return EdgeColoredGraph(n, 1 << t.k, colors)


def split_multigraph(g: EdgeColoredGraph, k: int) -> MultiGraphTuple:
    """Inverse of :func:`fuse_multigraph`."""
    if g.k > 1 << k:
        raise ValueError(f"{g.k} colors cannot come from {k} layers")
    layers = []
    for i in range(k):
        bits = sum(1 << j for j, c in enumerate(g.colors) if c >> i & 1)
        layers.append(SimpleGraph.from_bits(g.n, bits))
    return MultiGraphTuple(tuple(layers))
