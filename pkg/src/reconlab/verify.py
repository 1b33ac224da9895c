"""Exhaustive sweeps that test each reconstruction claim and collect counterexamples.

Nothing here assumes a claim holds: every verdict comes from enumeration.
"""

from __future__ import annotations

import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial

from .canon import are_isomorphic
from .core import Permutation, Structure, apply_permutation
from .deck import Deck, cards, deck
from .formats import dump_structure
from .generate import all_colored, all_graphs, all_hypergraphs, all_multigraphs
from .kperm import (
    MAX_EXHAUSTIVE_N,
    enumerate_subset_permutations,
    induced_subset_permutation,
    induces,
    lift,
    lift_intersection,
)
from .measure import measure_vector
from .parallel import parallel_map

VERIFIED, REFUTED, PARTIAL = "verified", "refuted", "partial"
KINDS = ("simple", "colored", "multigraph", "hypergraph")


@dataclass
class Report:
    claim_id: str
    parameters: dict
    instances_checked: int = 0
    counterexamples: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return REFUTED
        return VERIFIED if self.instances_checked > 0 else PARTIAL

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "claim_id": self.claim_id,
            "parameters": self.parameters,
            "instances_checked": self.instances_checked,
            "counterexamples": self.counterexamples,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
            "verdict": self.verdict,
            "details": self.details,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


class _Timer:
    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter() - self.start) * 1000.0
        return False


def classes(kind: str, n: int, colors: int = 3, layers: int = 2, arity: int = 3,
            vertex_alphabet: int = 1, threads: int = 1) -> list[Structure]:
    """Exhaustive class representatives for one sweep regime."""
    if kind == "simple":
        return all_graphs(n, threads)
    if kind == "colored":
        return all_colored(n, colors, vertex_alphabet, threads)
    if kind == "multigraph":
        return all_multigraphs(n, layers, threads)
    if kind == "hypergraph":
        return all_hypergraphs(n, arity, threads)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def _decks(reps: list[Structure]) -> list[Deck]:
    return [deck(g) for g in reps]


def _sharded_decks(reps: list[Structure], threads: int) -> list[Deck]:
    size = max(1, -(-len(reps) // max(threads, 1)))
    chunks = [reps[i:i + size] for i in range(0, len(reps), size)]
    return [d for part in parallel_map(_decks, chunks, threads) for d in part]


def _counterexample(a: Structure, b: Structure, d: Deck | None = None, **extra) -> dict:
    entry = {"a": dump_structure(a), "b": dump_structure(b)}
    if d is not None:
        entry["deck_hash"] = d.digest.hex()
    entry["witness_absent"] = True
    entry.update(extra)
    return entry


def hypomorphic_groups(decks: list[Deck]) -> list[list[int]]:
    """Index groups (size >= 2) of equal decks; bucketed by digest, confirmed by full equality."""
    buckets = defaultdict(list)
    for i, d in enumerate(decks):
        buckets[d.digest].append(i)
    groups = []
    for digest in sorted(buckets):
        exact = defaultdict(list)
        for i in buckets[digest]:
            exact[decks[i].cards].append(i)
        groups.extend(g for g in exact.values() if len(g) > 1)
    return sorted(groups)


def _ulam_sweep(report: Report, reps: list[Structure], threads: int) -> None:
    if reps and reps[0].n < 1:
        raise ValueError("decks need n >= 1")
    decks = _sharded_decks(reps, threads)
    groups = hypomorphic_groups(decks)
    for group in groups:
        for i, j in combinations(group, 2):
            if are_isomorphic(reps[i], reps[j]) is not None:
                raise AssertionError("generator produced two isomorphic representatives")
            report.counterexamples.append(_counterexample(reps[i], reps[j], decks[i]))
    report.instances_checked = len(reps)
    report.details["classes"] = len(reps)
    report.details["distinct_decks"] = len({d.cards for d in decks})


def verify_theorem1(n: int) -> Report:
    """Every subset permutation is induced by exactly one vertex permutation, its lift."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"theorem1 sweep supports 1 <= n <= {MAX_EXHAUSTIVE_N}")
    report = Report("theorem1", {"n": n})
    with _Timer(report):
        subset_perms = list(enumerate_subset_permutations(n))
        for s in subset_perms:
            p = lift(s)
            failures = []
            if not induces(p, s):
                failures.append("lift does not induce s")
            if n >= 2 and any(lift_intersection(s, x) != {p(x)} for x in range(n)):
                failures.append("intersection formula disagrees with lift")
            if failures:
                report.counterexamples.append({"s": list(s.images), "failures": failures})
        induced = {induced_subset_permutation(Permutation(q)) for q in permutations(range(n))}
        bijective = len(induced) == factorial(n) == len(subset_perms) and induced == set(subset_perms)
        if not bijective:
            report.counterexamples.append({"failures": ["permutation -> subset permutation map is not a bijection"]})
        report.instances_checked = len(subset_perms)
        report.details["subset_permutations"] = len(subset_perms)
        report.details["induced_by_vertex_permutations"] = len(induced)
    return report


def verify_ulam(n: int, kind: str = "simple", colors: int = 3, layers: int = 2,
                arity: int = 3, threads: int = 1) -> Report:
    """Look for hypomorphic, non-isomorphic pairs among all classes of one kind."""
    params = {"n": n, "kind": kind}
    if kind == "colored":
        params["colors"] = colors
    elif kind == "multigraph":
        params["layers"] = layers
    elif kind == "hypergraph":
        params["arity"] = arity
    report = Report(f"ulam_{kind}", params)
    with _Timer(report):
        reps = classes(kind, n, colors=colors, layers=layers, arity=arity, threads=threads)
        _ulam_sweep(report, reps, threads)
    return report


def verify_measure_theorem(n: int, kind: str = "simple", threads: int = 1,
                           pairwise_limit: int = 2000, **kw) -> Report:
    """Equal card-type vectors must force isomorphism; also checks vector equality = deck equality.

    Up to ``pairwise_limit`` classes every pair is compared directly; above it the
    two equivalence relations are compared as partitions, which decides the same thing.
    """
    if n > 8:
        raise ValueError("measure sweep supports n <= 8")
    report = Report("measure_theorem", {"n": n, "kind": kind, **kw})
    with _Timer(report):
        reps = classes(kind, n, threads=threads, **kw)
        decks = _sharded_decks(reps, threads)
        vectors = [measure_vector(g) for g in reps]
        mismatches = 0
        equal_pairs = []
        if len(reps) <= pairwise_limit:
            report.details["mode"] = "pairwise"
            for i, j in combinations(range(len(reps)), 2):
                same_vec = vectors[i] == vectors[j]
                if same_vec != (decks[i] == decks[j]):
                    mismatches += 1
                if same_vec:
                    equal_pairs.append((i, j))
        else:
            report.details["mode"] = "partition"
            by_vec, by_deck = defaultdict(list), defaultdict(list)
            for i in range(len(reps)):
                by_vec[vectors[i]].append(i)
                by_deck[decks[i]].append(i)
            if sorted(by_vec.values()) != sorted(by_deck.values()):
                mismatches += 1
            for group in sorted(by_vec.values()):
                equal_pairs.extend(combinations(group, 2))
        equal_pairs.sort()
        for i, j in equal_pairs:
            if are_isomorphic(reps[i], reps[j]) is None:
                report.counterexamples.append(_counterexample(reps[i], reps[j], decks[i]))
        if mismatches:
            report.counterexamples.append({"failures": [f"{mismatches} vector/deck equality mismatches"]})
        report.instances_checked = len(reps) * (len(reps) - 1) // 2
        report.details["classes"] = len(reps)
        report.details["equal_vector_pairs"] = len(equal_pairs)
    return report


def verify_matrix_corollary(n: int, alphabet: int, diagonal: str = "constant",
                            threads: int = 1) -> Report:
    """Symmetric matrices over ``{0..alphabet-1}`` whose principal-submatrix decks agree
    up to permutation congruence must themselves be permutation congruent."""
    if diagonal not in ("constant", "free"):
        raise ValueError("diagonal must be 'constant' or 'free'")
    report = Report("matrix_corollary", {"n": n, "alphabet": alphabet, "diagonal": diagonal})
    with _Timer(report):
        reps = all_colored(n, alphabet, alphabet if diagonal == "free" else 1, threads)
        _ulam_sweep(report, reps, threads)
    return report


def verify_lemma_l2(n: int, kind: str = "simple", threads: int = 1, **kw) -> Report:
    """Whenever some subset permutation preserves card types between two structures,
    the structures must be isomorphic."""
    if n > 5:
        raise ValueError("lemma_l2 sweep supports n <= 5")
    report = Report("lemma_l2", {"n": n, "kind": kind, **kw})
    with _Timer(report):
        reps = classes(kind, n, threads=threads, **kw)
        card_lists = [cards(g) for g in reps]
        subset_perms = list(enumerate_subset_permutations(n))
        preserving = lift_isos = 0
        for i in range(len(reps)):
            for j in range(i, len(reps)):
                ca, cb = card_lists[i], card_lists[j]
                found = None
                for s in subset_perms:
                    if all(ca[x] == cb[s.images[x]] for x in range(n)):
                        preserving += 1
                        if found is None:
                            found = s
                        if apply_permutation(lift(s), reps[i]) == reps[j]:
                            lift_isos += 1
                if found is not None and are_isomorphic(reps[i], reps[j]) is None:
                    report.counterexamples.append(
                        _counterexample(reps[i], reps[j], s=list(found.images)))
        pairs = len(reps) * (len(reps) + 1) // 2
        report.instances_checked = pairs * len(subset_perms)
        report.details.update({
            "classes": len(reps),
            "pairs": pairs,
            "measure_preserving_instances": preserving,
            "lift_is_isomorphism": lift_isos,
        })
    return report
