"""Command-line front end.

Subcommands operate on a diagram given as PD text (argument or stdin) or a
braid word via ``--braid``.  Results are JSON on stdout; diagnostics go to
stderr.  Exit codes: 1 for parse errors, 2 for precondition violations
(disconnected input, caps), 3 for a verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bracket as br
from . import brt as brtmod
from . import state_ribbon as sr
from .diagram import (
    DisconnectedDiagram,
    PlanarDiagram,
    State,
    TooManyCrossings,
    mirror,
    parse_braid,
    parse_pd,
    writhe,
)
from .polynomials import LaurentA
from .ribbon import DisconnectedGraph

PARSE_ERROR, PRECONDITION_ERROR, VERIFY_MISMATCH = 1, 2, 3


def _load_diagram(args) -> PlanarDiagram:
    if getattr(args, "braid", None) is not None:
        return parse_braid(args.braid)
    text = args.pd
    if text is None or text == "-":
        text = sys.stdin.read()
    return parse_pd(text)


def _add_input_args(p: argparse.ArgumentParser):
    p.add_argument("pd", nargs="?", default=None, help="PD text ('-' = stdin)")
    p.add_argument("--braid", help="braid word of signed generator indices")


def _emit(obj):
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _state_from_flag(d: PlanarDiagram, spec: str) -> State:
    if spec == "all-a":
        return State.all_a(d)
    if spec == "all-b":
        return State.all_b(d)
    if len(spec) != d.n_crossings or set(spec) - {"0", "1"}:
        raise ValueError(
            f"state must be all-a, all-b, or a bitstring of length "
            f"{d.n_crossings} (1 = B-smoothing)"
        )
    return State(tuple("B" if ch == "1" else "A" for ch in spec))


def cmd_parse(args) -> int:
    d = _load_diagram(args)
    _emit(d.to_json_obj())
    return 0


def cmd_ribbon(args) -> int:
    d = _load_diagram(args)
    s = _state_from_flag(d, args.state)
    g = sr.build_state_graph(d, s)
    c = g.counts
    _emit(
        {
            "counts": {"v": c.v, "e": c.e, "f": c.f, "k": c.k, "g": c.g, "n": c.n},
            "graph": g.to_json_obj(),
            "cycles": g.cycle_text(),
        }
    )
    return 0


def _parse_edge_order(g, text):
    if text is None:
        return None
    ids = [int(t) for t in text.split()]
    edges = sorted(g.edges)
    if sorted(ids) != list(range(len(edges))):
        raise ValueError("--edge-order must be a permutation of 0..e-1")
    return [edges[i] for i in ids]


def cmd_brt(args) -> int:
    d = _load_diagram(args)
    g = sr.all_a(d)
    if args.method == "recursive":
        poly = brtmod.brt_recursive(g, base_cap=args.base_cap)
    elif args.method == "subgraph":
        poly = brtmod.brt_subgraph(g)
    else:
        poly = brtmod.brt_tree_expansion(g, _parse_edge_order(g, args.edge_order))
    _emit({"brt": poly.to_json_obj()})
    return 0


def cmd_bracket(args) -> int:
    d = _load_diagram(args)
    if args.method == "statesum":
        b = br.bracket_statesum(d, cap=args.cap)
    else:
        b = br.bracket_via_brt(d)
    _emit({"bracket": b.to_json_obj()})
    return 0


def cmd_jones(args) -> int:
    d = _load_diagram(args)
    j = br.jones(d)
    _emit(
        {
            "jones": j.to_json_obj(),
            "writhe": writhe(d),
            "span_t_numerator": j.span_numerator if j else None,
        }
    )
    return 0


def cmd_adequacy(args) -> int:
    d = _load_diagram(args)
    a = br.adequacy(d)
    _emit({"aAdequate": a.a_adequate, "bAdequate": a.b_adequate})
    return 0


def cmd_span(args) -> int:
    d = _load_diagram(args)
    sb = br.span_bounds(d)
    _emit(
        {
            "Mbound": sb.m_bound,
            "mbound": sb.m_lower,
            "spanBound": sb.span_bound,
            "exactIfAdequate": sb.exact_if_adequate,
        }
    )
    return 0


def cmd_tgenus(args) -> int:
    d = _load_diagram(args)
    tg = br.turaev_genus_bound(d)
    _emit(
        {
            "genusOfDiagram": tg.genus_of_diagram,
            "upperBoundFromSpan": tg.upper_bound_from_span,
        }
    )
    return 0


def random_braid_diagram(rng: random.Random, max_crossings: int, strands: int):
    """A connected braid-closure diagram with at most max_crossings crossings."""
    while True:
        length = rng.randint(1, max_crossings)
        word = " ".join(
            str(rng.choice([1, -1]) * rng.randint(1, strands - 1))
            for _ in range(length)
        )
        d = parse_braid(word)
        if d.is_connected:
            return word, d


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    mismatches = 0
    for trial in range(args.random):
        word, d = random_braid_diagram(rng, args.max_crossings, args.strands)
        b1 = br.bracket_statesum(d)
        b2 = br.bracket_via_brt(d)
        ok = b1 == b2
        # mirror symmetry of the bracket
        bm = br.bracket_statesum(mirror(d))
        ok = ok and bm == LaurentA({-k: c for k, c in b1.terms.items()})
        # vertex/face duality for a random state
        if d.n_crossings:
            s = State.from_bits(
                rng.getrandbits(d.n_crossings), d.n_crossings
            )
            from .diagram import dual_state

            cs = sr.build_state_graph(d, s).counts
            cd = sr.build_state_graph(d, dual_state(s)).counts
            ok = ok and cs.v == cd.f and cs.f == cd.v and cs.g == cd.g
        if not ok:
            mismatches += 1
            print(f"MISMATCH trial={trial} braid={word!r}", file=sys.stderr)
    summary = {
        "trials": args.random,
        "max_crossings": args.max_crossings,
        "seed": args.seed,
        "mismatches": mismatches,
    }
    _emit(summary)
    return VERIFY_MISMATCH if mismatches else 0


def cmd_table(args) -> int:
    failed = 0
    try:
        lines = open(args.file).read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    for ln, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            name, pdtext = line.split("\t", 1)
            d = parse_pd(pdtext)
            d.require_connected()
            j = br.jones(d)
            a = br.adequacy(d)
            tg = br.turaev_genus_bound(d)
            sb = br.span_bounds(d)
            _emit(
                {
                    "name": name,
                    "jones": j.to_json_obj(),
                    "span_t_numerator": j.span_numerator if j else None,
                    "spanBound": sb.span_bound,
                    "aAdequate": a.a_adequate,
                    "bAdequate": a.b_adequate,
                    "genus": tg.genus_of_diagram,
                    "genusBound": tg.upper_bound_from_span,
                }
            )
        except Exception as exc:
            failed += 1
            print(f"line {ln}: {exc}", file=sys.stderr)
    return PARSE_ERROR if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ribbonpoly",
        description="Link invariants via ribbon graphs (exact arithmetic).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo canonical diagram JSON")
    _add_input_args(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("ribbon", help="state ribbon graph cycles and counts")
    _add_input_args(p)
    p.add_argument("--state", default="all-a", help="all-a, all-b or bitstring")
    p.set_defaults(func=cmd_ribbon)

    p = sub.add_parser("brt", help="three-variable ribbon-graph polynomial")
    _add_input_args(p)
    p.add_argument(
        "--method",
        choices=["recursive", "subgraph", "tree"],
        default="recursive",
    )
    p.add_argument("--edge-order", default=None)
    p.add_argument("--base-cap", type=int, default=brtmod.DEFAULT_BASE_CAP)
    p.set_defaults(func=cmd_brt)

    p = sub.add_parser("bracket", help="Kauffman bracket")
    _add_input_args(p)
    p.add_argument("--method", choices=["brt", "statesum"], default="brt")
    p.add_argument("--cap", type=int, default=br.DEFAULT_STATESUM_CAP)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("jones", help="Jones polynomial")
    _add_input_args(p)
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("adequacy", help="A/B adequacy flags")
    _add_input_args(p)
    p.set_defaults(func=cmd_adequacy)

    p = sub.add_parser("span", help="bracket degree bounds")
    _add_input_args(p)
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("tgenus", help="diagram genus and span bound")
    _add_input_args(p)
    p.set_defaults(func=cmd_tgenus)

    p = sub.add_parser("verify", help="randomized cross-checks")
    p.add_argument("--random", type=int, default=100)
    p.add_argument("--max-crossings", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strands", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="ndjson batch over name<TAB>PD lines")
    p.add_argument("file")
    p.set_defaults(func=cmd_table)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DisconnectedDiagram, DisconnectedGraph, TooManyCrossings) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
