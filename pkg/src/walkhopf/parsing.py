"""Text and JSON encodings of walks, forests, cuts and linear combinations."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .core import Cut, Digraph, Forest, LinComb, MultisetForest, Tensor, Walk, WalkError

_SEP = re.compile(r"[,\s]+")


def parse_walk(text: str) -> Walk:
    """Parse ``"12324522"`` (one digit per vertex) or ``"10,2,10"`` / ``"10 2 10"``."""
    s = text.strip()
    if not s:
        raise WalkError("empty walk")
    if s.isdigit():
        return Walk(int(ch) for ch in s)
    tokens = [t for t in _SEP.split(s) if t]
    if not tokens:
        raise WalkError(f"no vertices in {text!r}")
    try:
        return Walk(int(t) for t in tokens)
    except ValueError:
        raise WalkError(f"non-integer vertex in {text!r}") from None


def parse_forest(text: str) -> Forest:
    """Parse ``"33|44"``; ``"1"`` is a walk, the unit is written ``"()"``."""
    s = text.strip()
    if s in ("()", "𝟏"):
        return Forest()
    return Forest(parse_walk(part) for part in s.split("|"))


# ---------------------------------------------------------------- JSON

def encode(obj: Any) -> Any:
    """JSON-ready structure for any value produced by this package."""
    if isinstance(obj, Walk):
        return list(obj)
    if isinstance(obj, Cut):
        return [obj.k, obj.kp]
    if isinstance(obj, (Forest, MultisetForest)):
        return [list(w) for w in obj]
    if isinstance(obj, Tensor):
        return {"factors": [encode(f) for f in obj]}
    if isinstance(obj, LinComb):
        terms = [{"coeff": str(c), "term": encode(k)} for k, c in obj.items()]
        terms.sort(key=lambda t: json.dumps(t["term"], sort_keys=True))
        return terms
    if isinstance(obj, Digraph):
        return {"vertices": sorted(obj.vertices), "arcs": sorted([a, b] for a, b in obj.arcs)}
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    return obj


def dumps(obj: Any, **kw: Any) -> str:
    return json.dumps(encode(obj), ensure_ascii=False, **kw)


def _is_walk_json(x: Any) -> bool:
    return isinstance(x, list) and bool(x) and all(isinstance(v, int) for v in x)


def decode_factor(x: Any) -> Walk | Forest:
    """A tensor factor is either a Walk (flat int array) or a Forest (array of arrays)."""
    if _is_walk_json(x):
        return Walk(x)
    if isinstance(x, list):
        return Forest(Walk(w) for w in x)
    raise WalkError(f"not a walk or forest: {x!r}")


def decode_term(x: Any) -> Any:
    if isinstance(x, dict) and "factors" in x:
        return Tensor(decode_factor(f) for f in x["factors"])
    return decode_factor(x)


def decode_lincomb(data: Any) -> LinComb:
    return LinComb((decode_term(t["term"]), Fraction(t["coeff"])) for t in data)


def decode_digraph(data: Any) -> Digraph:
    try:
        return Digraph(data["vertices"], data["arcs"])
    except (KeyError, TypeError) as exc:
        raise WalkError(f"bad digraph JSON: {exc}") from None
