"""Command-line interface.

Inputs are inline strings, ``@path`` (or a plain existing path), or ``-`` for
stdin.  Exit status: 0 success, 2 parse error, 3 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .braid import BraidParseError, BraidWord, parse_braid_word
from .gauss import (
    ClosureNotKnotError,
    GaussParseError,
    TwistedGaussCode,
    braid_closure_code,
    parse_gauss_code,
)
from .labeling import (
    LengthMismatch,
    nontriviality_witness,
    propagate_labels,
    r2_indicator,
    reduce_mod2,
    updown_map,
    z2_map,
    z2_polynomial,
)
from .moves import (
    NoMatchError,
    TraceFormatError,
    bounded_search,
    enumerate_moves,
    format_trace,
    parse_trace,
    random_walk,
    replay,
)
from .warping import (
    InvalidEdge,
    LabelingInconsistency,
    check_relations,
    updown_solver,
    warping_degree,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION = 0, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        path = arg[1:]
    elif os.path.isfile(arg):
        path = arg
    else:
        return arg
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from exc


def _braid(arg: str) -> BraidWord:
    return parse_braid_word(read_source(arg))


def _code(arg: str) -> TwistedGaussCode:
    return parse_gauss_code(read_source(arg))


def parse_tuple(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()[]")
    try:
        return tuple(int(t) for t in body.replace(",", " ").split())
    except ValueError:
        raise CliError(f"bad tuple {text!r}", EXIT_PARSE) from None


def _fmt(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _rows(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def _emit(args, data: dict, rows) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(_rows(rows))


def cmd_map(args) -> None:
    w = _braid(args.braid)
    m = updown_map(w)
    data = m.to_dict()
    rows = [("map", m.formula()), ("perm", _fmt(m.perm)),
            ("sign", _fmt(m.sign)), ("offset", _fmt(m.offset))]
    if args.eval is not None:
        x = parse_tuple(args.eval)
        y = m(x)
        data["eval"] = {"input": list(x), "output": list(y), "mod2": list(reduce_mod2(m, x))}
        rows.append((f"f{_fmt(x)}", _fmt(y)))
    _emit(args, data, rows)


def cmd_z2map(args) -> None:
    w = _braid(args.braid)
    g = z2_map(w)
    data = g.to_dict()
    witness = nontriviality_witness(w)
    data["witness"] = list(witness) if witness is not None else None
    rows = [("perm", _fmt(g.perm)), ("c", _fmt(g.c)),
            ("identity", str(g.is_identity()).lower()),
            ("witness", _fmt(witness) if witness is not None else "none")]
    if args.eval is not None:
        x = tuple(v % 2 for v in parse_tuple(args.eval))
        y = g(x)
        data["eval"] = {"input": list(x), "output": list(y)}
        rows.append((f"g{_fmt(x)}", _fmt(y)))
    _emit(args, data, rows)


def cmd_z2poly(args) -> None:
    p = z2_polynomial(_braid(args.braid))
    if args.json:
        print(json.dumps({**p.to_dict(), "polynomial": str(p),
                          "coefficients": p.coefficients()}, sort_keys=True))
    else:
        print(p)


def cmd_label(args) -> None:
    w = _braid(args.braid)
    top = parse_tuple(args.eval) if args.eval is not None else (0,) * w.n
    lab = propagate_labels(w, top)
    strands = {s: lab.strand(s) for s in range(1, w.n + 1)}
    data = {"top": list(top), "bottom": list(lab.bottom),
            "strands": {str(s): v for s, v in strands.items()}}
    rows = [(f"strand {s}", " ".join(map(str, v))) for s, v in strands.items()]
    rows.append(("bottom", _fmt(lab.bottom)))
    _emit(args, data, rows)


def cmd_warp(args) -> None:
    r = warping_degree(_code(args.code))
    rows = [("edges", " ".join(map(str, r.degrees))), ("d", str(r.minimum)),
            ("argmin", str(r.argmin)), ("crossings", str(r.crossings)),
            ("bars", str(r.bars)), ("alternating", str(r.is_alternating).lower())]
    _emit(args, r.to_dict(), rows)


def cmd_updown(args) -> None:
    fam = updown_solver(_code(args.code))
    a, b = fam.equation
    rows = [("kind", fam.kind), ("labels", " ".join(map(str, fam.labels))),
            ("shift", " ".join(f"{s:+d}" for s in fam.shift)),
            ("equation", f"{'-' if a < 0 else ''}x + {b} = x")]
    if fam.start_value is not None:
        rows.append(("x", str(fam.start_value)))
    _emit(args, fam.to_dict(), rows)


def cmd_check(args) -> None:
    rels = check_relations(_code(args.code))
    if args.json:
        print(json.dumps([r.to_dict() for r in rels], sort_keys=True))
        return
    rows = []
    for r in rels:
        state = "holds" if r.holds else "fails"
        if not r.applies:
            state += " (not claimed)"
        if r.relation == "reverse_bound" and r.applies and r.witness["equality"]:
            state += ", equality"
        rows.append((r.relation, state))
    print(_rows(rows))


def _site_dict(m) -> dict:
    return {"rule": m.rule, "direction": m.direction, "position": m.position,
            "i": m.i, "eps": m.eps, "line": str(m)}


def cmd_moves(args) -> None:
    w = _braid(args.braid)
    if args.action == "list":
        sites = enumerate_moves(w, include_forbidden=args.forbidden)
        if args.no_r2:
            sites = [m for m in sites if m.rule != "R2"]
        if args.json:
            print(json.dumps([_site_dict(m) for m in sites]))
        else:
            print(format_trace(sites))
    elif args.action == "apply":
        if not args.moves:
            raise CliError("apply needs at least one move", EXIT_PARSE)
        trace = [m for src in args.moves for m in parse_trace(read_source(src))]
        out = replay(w, trace)
        if args.json:
            print(json.dumps({"word": str(out), "trace": [str(m) for m in trace]}))
        else:
            print(out)
    elif args.action == "walk":
        res = random_walk(w, args.steps, allow_r2=not args.no_r2,
                          include_forbidden=args.forbidden, seed=args.seed)
        if args.json:
            print(json.dumps({"word": str(res.word), "trace": [str(m) for m in res.trace],
                              "stopped_early": res.stopped_early}))
        else:
            print(res.word)
            if res.trace:
                print(format_trace(res.trace), file=sys.stderr)
    else:
        if len(args.moves) != 1:
            raise CliError("search needs exactly one target braid", EXIT_PARSE)
        dst = _braid(args.moves[0])
        res = bounded_search(w, dst, max_length_growth=args.max_growth,
                             max_visited=args.max_visited, allow_r2=not args.no_r2,
                             include_forbidden=args.forbidden)
        data = {"found": res.found, "length": len(res.path) if res.found else None,
                "path": [str(m) for m in res.path], "visited": res.visited,
                "limit_hit": res.limit_hit, "reason": res.reason}
        if args.json:
            print(json.dumps(data, sort_keys=True))
        elif res.found:
            print(f"found path of length {len(res.path)} ({res.visited} words visited)")
            if res.path:
                print(format_trace(res.path))
        else:
            why = res.limit_hit or res.reason
            print(f"no path found ({why}; {res.visited} words visited)")


def cmd_compare(args) -> None:
    a, b = _braid(args.first), _braid(args.second)
    verdict = r2_indicator(a, b)
    if args.json:
        data = {"verdict": str(verdict)}
        if a.n == b.n:
            data["maps"] = [updown_map(a).to_dict(), updown_map(b).to_dict()]
        print(json.dumps(data, sort_keys=True))
    else:
        print(verdict)


def cmd_closure_code(args) -> None:
    c = braid_closure_code(_braid(args.braid))
    if args.json:
        print(json.dumps({"code": c.render(canonical=False), "canonical": c.canonical()}))
    else:
        print(c.render(canonical=False))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="twistwarp",
        description="Up-down labelings, Z2 invariants and warping degrees of twisted diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_cmd(name, func, help_, with_eval=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("braid", help="braid word, @file, file path or -")
        if with_eval:
            p.add_argument("-e", "--eval", metavar="TUPLE", help="input tuple, e.g. 0,0,1")
        p.set_defaults(func=func)
        return p

    def code_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("code", help="twisted Gauss code, @file, file path or -")
        p.set_defaults(func=func)

    braid_cmd("map", cmd_map, "up-down labeling function", with_eval=True)
    braid_cmd("z2map", cmd_z2map, "Z2-labeling function", with_eval=True)
    braid_cmd("z2poly", cmd_z2poly, "Z2-polynomial")
    braid_cmd("label", cmd_label, "edge labels for given top labels (default zeros)", with_eval=True)
    braid_cmd("closure-code", cmd_closure_code, "Gauss code of a one-component closure")
    code_cmd("warp", cmd_warp, "warping degree of every edge")
    code_cmd("updown", cmd_updown, "solve for the up-down labelings")
    code_cmd("check", cmd_check, "check the warping degree relations")

    p = sub.add_parser("moves", parents=[common], help="list, apply, walk or search moves")
    p.add_argument("action", choices=["list", "apply", "walk", "search"])
    p.add_argument("braid")
    p.add_argument("moves", nargs="*",
                   help="apply: trace lines or @files; search: the target braid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--no-r2", action="store_true", help="exclude R2")
    p.add_argument("--forbidden", action="store_true", help="include forbidden moves")
    p.add_argument("--max-visited", type=int, default=100_000)
    p.add_argument("--max-growth", type=int, default=2)
    p.set_defaults(func=cmd_moves)

    p = sub.add_parser("compare", parents=[common], help="R2 indicator for two braids")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)
    return parser


PARSE_ERRORS = (BraidParseError, GaussParseError, TraceFormatError)
PRECONDITION_ERRORS = (ClosureNotKnotError, NoMatchError, LengthMismatch, InvalidEdge,
                       LabelingInconsistency, ValueError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PARSE_ERRORS as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
