"""Batch command-line front end.

Exit codes: 0 = a decision or artifact was produced, 1 = usage or parse
error, 2 = a closure cap was exceeded without reaching a verdict. All
results are single JSON documents on stdout (or --output).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .grouplat import GroupInfinite, group_closure, integerize
from .imagegraph import build_image_graph, to_dot
from .linalg import inverse
from .semigroup import (closure, decide_finiteness, default_cap, length_bound,
                        size_bound)
from .serialize import (ParseError, automaton_from_json, frac_to_str,
                        generators_from_json, matrix_to_json, parse_word,
                        vass_from_json, word_to_str)
from .shortener import InfiniteSemigroup, shorten
from .vass import Configuration, check_fmp, reach_bounded
from .wautomata import decide_wa_finiteness


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}")


def _witness_listing(result) -> list:
    return [{"word": word_to_str(result.witness[k]),
             "matrix": matrix_to_json(result.elements[k])}
            for k in result.elements]


def cmd_finiteness(args) -> tuple[int, dict]:
    table = generators_from_json(_load_json(args.input))
    verdict = decide_finiteness(table, args.cap)
    if verdict.status == "exceeded_cap":
        return 2, {"status": "exceeded_cap", "cap": args.cap or default_cap()}
    if verdict.status == "infinite":
        return 0, {"status": "infinite", "witness": word_to_str(verdict.witness)}
    out = {"status": "finite", "count": len(verdict.closure)}
    if args.witnesses:
        out["elements"] = _witness_listing(verdict.closure)
    return 0, out


def cmd_closure(args) -> tuple[int, dict]:
    table = generators_from_json(_load_json(args.input))
    result = closure(table, args.cap)
    if result.status == "exceeded_cap":
        return 2, {"status": "exceeded_cap", "cap": result.cap}
    return 0, {"status": "finite", "count": len(result),
               "identity_expressible": result.identity_expressible,
               "elements": _witness_listing(result)}


def cmd_shorten(args) -> tuple[int, dict]:
    path = args.input or args.generators
    if path is None or (args.input and args.generators):
        raise CliError("give the generators file once (positionally or via --generators)")
    table = generators_from_json(_load_json(path))
    word = parse_word(args.word, table.alphabet)
    try:
        u = shorten(table, word, assume_finite=args.assume_finite, cap=args.cap)
    except InfiniteSemigroup as exc:
        return 0, {"status": "infinite",
                   "witness": word_to_str(exc.witness) if exc.witness else None}
    verified = table.evaluate(u) == table.evaluate(word)
    return 0, {"input_length": len(word),
               "output_word": word_to_str(u),
               "output_length": len(u),
               "bound": str(length_bound(table.n).length_bound),
               "verified": verified}


def cmd_bound(args) -> tuple[int, dict]:
    report = length_bound(args.n)
    out = {"n": args.n, "g_upper": str(report.g_upper),
           "length_bound": str(report.length_bound)}
    if args.m is not None:
        out["m"] = args.m
        out["size_bound"] = str(size_bound(args.n, args.m))
    return 0, out


def cmd_integerize(args) -> tuple[int, dict]:
    table = generators_from_json(_load_json(args.input))
    try:
        G = group_closure(table.mapping)
    except GroupInfinite as exc:
        return 0, {"status": "infinite",
                   "witness": word_to_str(exc.witness) if exc.witness else None}
    C = integerize(G)
    Cinv = inverse(C)
    conjugated = {a: matrix_to_json(C * table.mapping[a] * Cinv) for a in table.alphabet}
    return 0, {"status": "finite", "order": G.order,
               "C": matrix_to_json(C), "conjugated_generators": conjugated}


def cmd_image_graph(args) -> tuple[int, dict]:
    table = generators_from_json(_load_json(args.input))
    G = build_image_graph(table)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(G))
    vertices = [{"basis": [[frac_to_str(x) for x in row] for row in v.basis.data],
                 "scc": G.scc_id[v]} for v in G.vertices]
    names = {v: i for i, v in enumerate(G.vertices)}
    edges = [{"from": names[v], "letter": a, "to": names[w]}
             for v in G.vertices for a, w in G.out[v].items()]
    return 0, {"rank": G.rank, "vertices": vertices, "edges": edges,
               "num_sccs": G.num_sccs}


def cmd_wa_finite(args) -> tuple[int, dict]:
    A = automaton_from_json(_load_json(args.input))
    verdict = decide_wa_finiteness(A, args.cap)
    if verdict.status == "exceeded_cap":
        return 2, {"status": "exceeded_cap"}
    out = {"status": verdict.status}
    if verdict.status == "infinite":
        out["witness"] = word_to_str(verdict.witness)
    return 0, out


def cmd_vass_fmp(args) -> tuple[int, dict]:
    V = vass_from_json(_load_json(args.input))
    verdict = check_fmp(V, args.cap)
    if verdict.status == "exceeded_cap":
        return 2, {"status": "exceeded_cap"}
    out = {"status": verdict.status}
    if verdict.status == "infinite":
        out["witness"] = word_to_str(verdict.witness)
    return 0, out


def _parse_config(text: str, d: int) -> Configuration:
    state, _, rest = text.partition(":")
    if not state:
        raise CliError(f"bad configuration {text!r}; expected state:v1,...,vd")
    parts = [p for p in rest.split(",") if p != ""]
    if len(parts) != d:
        raise CliError(f"configuration {text!r} needs {d} vector entries")
    try:
        return Configuration(state, tuple(int(p) for p in parts))
    except ValueError as exc:
        raise CliError(f"bad configuration {text!r}: {exc}")


def cmd_vass_reach(args) -> tuple[int, dict]:
    V = vass_from_json(_load_json(args.input))
    source = _parse_config(args.source, V.d)
    target = _parse_config(args.target, V.d)
    if source.state not in V.states or target.state not in V.states:
        raise CliError("configuration state is not in the model")
    result = reach_bounded(V, source, target, args.budget)
    out = {"status": result.status}
    if result.status == "reached":
        out["path"] = list(result.path)
        out["length"] = len(result.path)
    return 0, out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiforge")
    parser.add_argument("--version", action="version", version=f"semiforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--output", help="write the JSON result to this file")
        return p

    p = add("finiteness", cmd_finiteness, help="decide semigroup finiteness")
    p.add_argument("input")
    p.add_argument("--cap", type=int)
    p.add_argument("--witnesses", action="store_true")

    p = add("closure", cmd_closure, help="enumerate the semigroup with witness words")
    p.add_argument("input")
    p.add_argument("--cap", type=int)

    p = add("shorten", cmd_shorten, help="rewrite a word as a short equal-value product")
    p.add_argument("input", nargs="?")
    p.add_argument("--generators")
    p.add_argument("--word", required=True)
    p.add_argument("--cap", type=int)
    p.add_argument("--assume-finite", action="store_true")

    p = add("bound", cmd_bound, help="length/size bound calculators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)

    p = add("integerize", cmd_integerize, help="conjugate a finite group into GL(n,Z)")
    p.add_argument("input")

    p = add("image-graph", cmd_image_graph, help="build the rank-r image graph")
    p.add_argument("input")
    p.add_argument("--dot", help="also write a GraphViz file")

    p = add("wa-finite", cmd_wa_finite, help="decide weighted-automaton finiteness")
    p.add_argument("input")
    p.add_argument("--cap", type=int)

    p = add("vass-fmp", cmd_vass_fmp, help="check the finite monoid property")
    p.add_argument("input")
    p.add_argument("--cap", type=int)

    p = add("vass-reach", cmd_vass_reach, help="bounded reachability exploration")
    p.add_argument("input")
    p.add_argument("--from", dest="source", required=True, metavar="STATE:V1,..,VD")
    p.add_argument("--to", dest="target", required=True, metavar="STATE:V1,..,VD")
    p.add_argument("--budget", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, result = args.handler(args)
    except (CliError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return getattr(exc, "code", 1)
    text = json.dumps(result, indent=2)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
