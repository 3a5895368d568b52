"""Command-line front end. Exit codes: 0 ok, 2 input error, 3 counterexample found."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import coalgebra as co
from .cactus import cactus_map, is_cactus, is_corolla, is_tower, phi, temporal_tree
from .checks import SUITES, run_suite
from .core import Digraph, Forest, Walk, WalkError, classify, to_multiset, validate_on_graph
from .cuts import adc, eadc
from .generate import GenConfig, gen_walks
from .loop_erasure import les, lew, skeleton
from .parsing import decode_digraph, dumps, parse_forest, parse_walk

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse already exits 2; keep the message terse
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load_graph(path: str | None) -> Digraph | None:
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return decode_digraph(json.load(fh))
    except OSError as exc:
        raise WalkError(f"cannot read graph file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise WalkError(f"graph file is not JSON: {exc}") from None


def _checked(walks: Sequence[Walk], graph: Digraph | None) -> None:
    if graph is None:
        return
    for w in walks:
        if not validate_on_graph(w, graph):
            raise WalkError(f"walk {w} is not a walk on the given digraph")


def _walk(args: argparse.Namespace) -> Walk:
    w = parse_walk(args.walk)
    _checked([w], args.graph_obj)
    return w


def _forest(args: argparse.Namespace) -> Forest:
    f = parse_forest(args.walk)
    _checked(list(f), args.graph_obj)
    return f


def _single(f: Forest, what: str) -> Walk:
    if len(f) != 1:
        raise WalkError(f"{what} takes a single walk")
    return f[0]


# ---------------------------------------------------------------- commands

def cmd_les(a: argparse.Namespace) -> Any:
    return sorted(les(_walk(a)))


def cmd_lew(a: argparse.Namespace) -> Any:
    w = _walk(a)
    return lew(w, w.length if a.k is None else a.k)


def cmd_adc(a: argparse.Namespace) -> Any:
    return adc(_walk(a))


def cmd_eadc(a: argparse.Namespace) -> Any:
    fams = eadc(_walk(a))
    return [list(e) for e in fams if a.n is None or len(e) == a.n]


def cmd_skeleton(a: argparse.Namespace) -> Any:
    return skeleton(_walk(a))


def cmd_classify(a: argparse.Namespace) -> Any:
    w = _walk(a)
    return {"class": classify(w), "cactus": is_cactus(w), "tower": is_tower(w), "corolla": is_corolla(w)}


def cmd_coprod(a: argparse.Namespace) -> Any:
    f = _forest(a)
    kind = a.kind
    if kind == "cp":
        return co.delta_cp(_single(f, "the co-preLie coproduct"))
    if kind == "hopf":
        return co.delta_h(f)
    if kind == "prec":
        return co.delta_prec(f)
    if kind == "succ":
        return co.delta_succ(f)
    if kind.startswith("brace:"):
        try:
            n = int(kind.split(":", 1)[1])
        except ValueError:
            raise WalkError(f"bad brace arity in {kind!r}") from None
        return co.delta_n(_single(f, "the brace coproduct"), n)
    raise WalkError(f"unknown coproduct kind {kind!r}")


def cmd_antipode(a: argparse.Namespace) -> Any:
    f = _forest(a)
    if a.method == "closed":
        result = co.antipode_closed(_single(f, "the closed antipode"))
    else:
        result = co.antipode_recursive(f)
    if a.algebra == "sym":
        result = result.map(to_multiset)
    return result


def cmd_cactus(a: argparse.Namespace) -> Any:
    w = _walk(a)
    return {"walk": w, "cactus": cactus_map(w), "unlabeled": phi(w), "is_cactus": is_cactus(w)}


def cmd_tree(a: argparse.Namespace) -> Any:
    t = temporal_tree(_walk(a))
    return t.to_dot() if a.format == "dot" else t.to_json()


def cmd_gen(a: argparse.Namespace) -> Any:
    cfg = GenConfig(a.vertices, a.min_len, a.max_len, a.count, a.seed, not a.no_self_loops)
    return gen_walks(cfg, a.graph_obj)


def cmd_check(a: argparse.Namespace) -> Any:
    report = run_suite(a.suite, a.count, a.vertices, a.max_len, a.seed, a.graph_obj, a.jobs)
    a.exit_code = EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE
    return report.to_json()


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", metavar="FILE", help="digraph JSON {vertices, arcs} the inputs must live on")
    p = _Parser(prog="walkhopf", description="Loop-erased walk Hopf algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def walk_cmd(name: str, func: Any, help_: str, forest: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("walk", help="forest such as 33|44" if forest else "walk such as 12324522 or 10,2,10")
        sp.set_defaults(func=func)
        return sp

    walk_cmd("les", cmd_les, "loop-erased sections")
    walk_cmd("lew", cmd_lew, "loop-erased walk after step k").add_argument("--k", type=int)
    walk_cmd("adc", cmd_adc, "admissible cuts in time order")
    walk_cmd("eadc", cmd_eadc, "extended admissible cuts").add_argument("--n", type=int)
    walk_cmd("skeleton", cmd_skeleton, "loop-erased skeleton")
    walk_cmd("classify", cmd_classify, "self-avoiding walk/polygon, cactus, tower, corolla")
    walk_cmd("coprod", cmd_coprod, "coproducts", forest=True).add_argument(
        "--kind", default="hopf", help="cp | hopf | brace:N | prec | succ")
    sp = walk_cmd("antipode", cmd_antipode, "antipode", forest=True)
    sp.add_argument("--method", choices=["closed", "recursive"], default="closed")
    sp.add_argument("--algebra", choices=["tensor", "sym"], default="tensor")
    walk_cmd("cactus", cmd_cactus, "cactus image and its unlabeled form")
    walk_cmd("tree", cmd_tree, "temporal tree").add_argument("--format", choices=["dot", "json"], default="json")

    def budget(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--count", type=int, default=500)
        sp.add_argument("--vertices", type=int, default=5)
        sp.add_argument("--max-len", type=int, default=12)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("check", help="randomized identity checks", parents=[common])
    sp.add_argument("--suite", choices=list(SUITES), required=True)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    budget(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("gen", help="seeded random walks", parents=[common])
    budget(sp)
    sp.add_argument("--min-len", type=int, default=0)
    sp.add_argument("--no-self-loops", action="store_true")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.exit_code = EXIT_OK
    try:
        args.graph_obj = _load_graph(args.graph)
        result = args.func(args)
    except WalkError as exc:
        print(f"walkhopf: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(dumps(result))
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
