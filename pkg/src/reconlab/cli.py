"""Command-line driver.

Exit codes: 0 success (or claim verified), 2 counterexample found,
1 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .canon import canonical_form, are_isomorphic
from .core import SimpleGraph
from .deck import are_hypomorphic, cards, deck
from .formats import FormatError, dump_structure, emit_graph6, read_structure_file
from .generate import random_graph
from .kperm import SubsetPermutation, lift, lift_intersection
from .verify import (
    KINDS,
    REFUTED,
    classes,
    verify_lemma_l2,
    verify_matrix_corollary,
    verify_measure_theorem,
    verify_theorem1,
    verify_ulam,
)

EXIT_OK, EXIT_ERROR, EXIT_COUNTEREXAMPLE = 0, 1, 2
CLAIMS = ("theorem1", "ulam", "measure", "matrix", "lemma-l2")
LARGE_SIMPLE_N = 9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default=None)
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_kind(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=KINDS, default="simple")
    p.add_argument("--colors", type=int, default=3, help="edge colors for --kind colored")
    p.add_argument("--layers", type=int, default=2, help="layers for --kind multigraph")
    p.add_argument("--arity", type=int, default=3, help="edge arity for --kind hypergraph")
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reconlab", description="Exhaustive checks of graph reconstruction claims.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list one representative per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    _add_kind(p)
    p.add_argument("--random", type=int, metavar="COUNT",
                   help="emit COUNT seeded random simple graphs instead")
    p.add_argument("--p", type=float, default=0.5, help="edge probability for --random")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("deck", help="print the card certificates of a structure")
    p.add_argument("--in", dest="input", required=True, help="graph6 or JSON structure file")
    _add_common(p)

    p = sub.add_parser("hypomorphic", help="compare the decks of two structures")
    p.add_argument("a")
    p.add_argument("b")
    _add_common(p)

    p = sub.add_parser("lift", help="lift a subset permutation to a vertex permutation")
    p.add_argument("images", type=int, nargs="+",
                   help="images[x] = y means E-{x} is sent to E-{y}")
    _add_common(p)

    p = sub.add_parser("verify", help="run an exhaustive sweep for one claim")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--n", type=int, required=True)
    _add_kind(p)
    p.add_argument("--alphabet", type=int, default=2, help="matrix entry alphabet size")
    p.add_argument("--diagonal", choices=("constant", "free"), default="constant")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; sweeps are exhaustive")
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit the simple-graph sweep at n={LARGE_SIMPLE_N}")
    p.add_argument("--no-timing", action="store_true",
                   help="write elapsed_ms as 0 so reports are byte-comparable")
    _add_common(p)
    return parser


def _kind_kwargs(args) -> dict:
    if args.kind == "colored":
        return {"colors": args.colors}
    if args.kind == "multigraph":
        return {"layers": args.layers}
    if args.kind == "hypergraph":
        return {"arity": args.arity}
    return {}


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _encode(g) -> str:
    value = dump_structure(g)
    return value if isinstance(value, str) else json.dumps(value, sort_keys=True)


def cmd_enumerate(args) -> int:
    if args.random is not None:
        if args.random < 0:
            raise UsageError("--random needs a nonnegative count")
        graphs = [random_graph(args.n, args.p, args.seed + i) for i in range(args.random)]
    else:
        graphs = classes(args.kind, args.n, threads=args.threads, **_kind_kwargs(args))
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps([dump_structure(g) for g in graphs], indent=1, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(["index", "certificate", "structure"],
                            [[i, canonical_form(g).hex(), _encode(g)] for i, g in enumerate(graphs)])
    else:
        text = "".join(_encode(g) + "\n" for g in graphs)
    _write(args, text)
    return EXIT_OK


def cmd_deck(args) -> int:
    g = read_structure_file(args.input)
    if g.n < 1:
        raise UsageError("the deck of an empty structure is undefined")
    card_certs = cards(g)
    d = deck(g)
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps({"n": g.n, "deck_hash": d.digest.hex(),
                           "cards": [{"deleted": x, "certificate": c.hex()}
                                     for x, c in enumerate(card_certs)]}, indent=2) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(["deleted", "certificate"],
                            [[x, c.hex()] for x, c in enumerate(card_certs)])
    else:
        text = "".join(f"{x} {c.hex()}\n" for x, c in enumerate(card_certs))
    _write(args, text)
    return EXIT_OK


def cmd_hypomorphic(args) -> int:
    a, b = read_structure_file(args.a), read_structure_file(args.b)
    if a.n != b.n:
        raise UsageError(f"structures have different sizes ({a.n} vs {b.n})")
    hyp = are_hypomorphic(a, b)
    witness = are_isomorphic(a, b)
    if not hyp:
        verdict = "not hypomorphic"
    elif witness is not None:
        verdict = "hypomorphic, isomorphic"
    else:
        verdict = "hypomorphic, not isomorphic"
    fmt = args.format or "text"
    if fmt == "json":
        text = json.dumps({"hypomorphic": hyp, "isomorphic": witness is not None,
                           "witness": None if witness is None else list(witness.images),
                           "verdict": verdict}, indent=2) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(["hypomorphic", "isomorphic", "verdict"],
                            [[hyp, witness is not None, verdict]])
    else:
        text = verdict + "\n"
    _write(args, text)
    return EXIT_COUNTEREXAMPLE if hyp and witness is None else EXIT_OK


def cmd_lift(args) -> int:
    try:
        s = SubsetPermutation(tuple(args.images))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    p = lift(s)
    fmt = args.format or "text"
    if fmt == "json":
        out = {"images": list(p.images)}
        if s.n >= 2:
            out["intersections"] = [sorted(lift_intersection(s, x)) for x in range(s.n)]
        text = json.dumps(out) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(["x", "lift"], [[x, y] for x, y in enumerate(p.images)])
    else:
        text = " ".join(map(str, p.images)) + "\n"
    _write(args, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.kind == "simple" and args.claim in ("ulam", "measure") and args.n >= LARGE_SIMPLE_N \
            and not args.allow_large:
        raise UsageError(f"simple-graph sweeps at n >= {LARGE_SIMPLE_N} need --allow-large")
    kw = _kind_kwargs(args)
    if args.claim == "theorem1":
        report = verify_theorem1(args.n)
    elif args.claim == "ulam":
        report = verify_ulam(args.n, args.kind, threads=args.threads, **kw)
    elif args.claim == "measure":
        report = verify_measure_theorem(args.n, args.kind, threads=args.threads, **kw)
    elif args.claim == "matrix":
        report = verify_matrix_corollary(args.n, args.alphabet, args.diagonal, threads=args.threads)
    else:
        report = verify_lemma_l2(args.n, args.kind, threads=args.threads, **kw)
    fmt = args.format or "json"
    timing = not args.no_timing
    if fmt == "json":
        text = report.to_json(timing) + "\n"
    elif fmt == "csv":
        d = report.to_dict(timing)
        text = _rows_to_csv(
            ["claim_id", "parameters", "instances_checked", "counterexamples", "elapsed_ms", "verdict"],
            [[d["claim_id"], json.dumps(d["parameters"], sort_keys=True), d["instances_checked"],
              len(d["counterexamples"]), d["elapsed_ms"], d["verdict"]]])
    else:
        text = (f"{report.claim_id} {json.dumps(report.parameters, sort_keys=True)}: "
                f"{report.verdict}, {report.instances_checked} instances, "
                f"{len(report.counterexamples)} counterexamples\n")
    _write(args, text)
    return EXIT_COUNTEREXAMPLE if report.verdict == REFUTED else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "deck": cmd_deck,
    "hypomorphic": cmd_hypomorphic,
    "lift": cmd_lift,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
    except (FormatError, ValueError, OSError) as exc:
        print(f"reconlab: error: {exc}", file=sys.stderr)
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
