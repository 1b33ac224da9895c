"""graph6 codec and the JSON structure format.

Only the short graph6 header (n <= 62) is supported. JSON structures look like::

    {"kind": "simple", "n": 3, "edges": [[0, 1]]}
    {"kind": "colored", "n": 3, "k": 3, "vertex_colors": [0, 0, 1], "edges": [[0, 1, 2]]}
    {"kind": "multigraph", "n": 3, "layers": [[[0, 1]], []]}
    {"kind": "hypergraph", "n": 4, "m": 3, "edges": [[0, 1, 2]]}
"""

from __future__ import annotations

import json

from .canon import canonical_graph
from .core import (
    EdgeColoredGraph,
    MultiGraphTuple,
    SimpleGraph,
    Structure,
    UniformHypergraph,
    kind_of,
)

GRAPH6_MAX_N = 62
_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Raised for malformed graph6 or JSON structure input."""


def parse_graph6(text: str | bytes) -> SimpleGraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise FormatError("graph6 input is not ASCII") from exc
    text = text.strip("\r\n")
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise FormatError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in text]
    bad = [ch for ch, c in zip(text, codes) if not 0 <= c <= 63]
    if bad:
        raise FormatError(f"byte {bad[0]!r} outside the printable graph6 range")
    if codes[0] == 63:
        if len(codes) < 4:
            raise FormatError("incomplete long-form graph6 header")
        raise FormatError("long-form graph6 (n > 62) is not supported")
    n = codes[0]
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    bits = 0
    for c in body:
        bits = bits << 6 | c
    pad = len(body) * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return SimpleGraph(n, tuple(adj))


def emit_graph6(g: SimpleGraph, canonical: bool = False) -> str:
    if g.n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 output supports n <= {GRAPH6_MAX_N}")
    if canonical:
        g = canonical_graph(g)
    n = g.n
    nbits = n * (n - 1) // 2
    bits = 0
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (g.adj[i] >> j & 1)
    nchunks = (nbits + 5) // 6
    bits <<= nchunks * 6 - nbits
    chunks = [(bits >> (6 * (nchunks - 1 - t))) & 63 for t in range(nchunks)]
    return chr(n + 63) + "".join(chr(c + 63) for c in chunks)


def structure_to_dict(g: Structure) -> dict:
    kind = kind_of(g)
    if kind == "simple":
        return {"kind": kind, "n": g.n, "edges": [list(e) for e in g.edges()]}
    if kind == "colored":
        return {"kind": kind, "n": g.n, "k": g.k, "vertex_colors": list(g.vertex_colors),
                "edges": [list(e) for e in g.edges()]}
    if kind == "multigraph":
        return {"kind": kind, "n": g.n,
                "layers": [[list(e) for e in layer.edges()] for layer in g.layers]}
    return {"kind": kind, "n": g.n, "m": g.m, "edges": g.edge_lists()}


def structure_from_dict(d: dict) -> Structure:
    try:
        kind, n = d["kind"], d["n"]
        if kind == "simple":
            return SimpleGraph.from_edges(n, [tuple(e) for e in d.get("edges", [])])
        if kind == "colored":
            return EdgeColoredGraph.from_edges(
                n, d["k"], [tuple(e) for e in d.get("edges", [])], d.get("vertex_colors"))
        if kind == "multigraph":
            return MultiGraphTuple(tuple(
                SimpleGraph.from_edges(n, [tuple(e) for e in layer]) for layer in d["layers"]))
        if kind == "hypergraph":
            return UniformHypergraph.from_edges(n, d["m"], d.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid structure JSON: {exc}") from exc
    raise FormatError(f"unknown structure kind {kind!r}")


def dump_structure(g: Structure) -> str | dict:
    """graph6 for simple graphs, the JSON dict otherwise."""
    if isinstance(g, SimpleGraph) and g.n <= GRAPH6_MAX_N:
        return emit_graph6(g)
    return structure_to_dict(g)


def load_structure(value: str | dict) -> Structure:
    if isinstance(value, str):
        return parse_graph6(value)
    return structure_from_dict(value)


def read_structure_file(path: str) -> Structure:
    """Read a ``.json`` structure or a graph6 file (first non-empty line)."""
    with open(path, "rb") as fh:
        raw = fh.read()
    text = raw.lstrip()
    if text.startswith(b"{"):
        try:
            return structure_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    lines = [line for line in raw.splitlines() if line.strip()]
    if not lines:
        raise FormatError(f"{path}: no graph found")
    return parse_graph6(lines[0].strip())
