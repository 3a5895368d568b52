"""Randomized identity-check suites.

Instance ``i`` of a run depends only on ``(seed, i)``: its walk is the ``i``-th
output of :func:`gen_walks`, and any extra words come from an rng seeded with
``f"{seed}/{i}"``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

from . import coalgebra as co
from .cactus import (
    canonical_relabel,
    corolla_coproduct,
    is_cactus,
    is_corolla,
    is_tower,
    phi,
)
from .core import (
    UNIT,
    Cut,
    Digraph,
    Forest,
    LinComb,
    MultisetForest,
    Tensor,
    Walk,
    remainder,
    subwalk,
    twist_last,
)
from .cuts import adc, eadc, time_leq
from .generate import GenConfig, gen_walks, random_family_member, random_forest
from .loop_erasure import les
from .parsing import encode

Failure = dict[str, Any]


@dataclass
class CheckReport:
    suite: str
    instances: int
    seed: int
    elapsed: float = 0.0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "seed": self.seed,
            "elapsed": round(self.elapsed, 3),
            "failures": self.failures,
        }


def _fail(identity: str, x: Any, lhs: Any, rhs: Any) -> Failure:
    return {"input": encode(x), "identity": identity, "lhs": encode(lhs), "rhs": encode(rhs)}


def _compare(out: list[Failure], identity: str, x: Any, lhs: Any, rhs: Any) -> None:
    if lhs != rhs:
        out.append(_fail(identity, x, lhs, rhs))


# ---------------------------------------------------------------- per-instance checks

def _copre_lie(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    lhs = co.copre_lie_defect(w)
    _compare(out, "(Δ_CP⊗Id − Id⊗Δ_CP)Δ_CP is symmetric in its last two factors", w, lhs, twist_last(lhs))
    return out


def _coassoc(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    left, right = co.coassoc_sides(w)
    _compare(out, "(Δ_H⊗Id)Δ_H = (Id⊗Δ_H)Δ_H", w, left, right)
    # forests get shorter words so the triple coproduct stays small
    f = Forest(random_forest(rng, graph, rng.randint(2, 3), max(1, max_len // 2)))
    left, right = co.coassoc_sides(f)
    _compare(out, "(Δ_H⊗Id)Δ_H = (Id⊗Δ_H)Δ_H", f, left, right)
    _compare(out, "Δ_H(x|y) = Δ_H(x)·Δ_H(y)", f, co.delta_h(f),
             co.tensor_product(co.delta_h(Forest(f[:1])), co.delta_h(Forest(f[1:]))))
    return out


def _antipode(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    _compare(out, "closed antipode = recursive antipode", w, co.antipode_closed(w), co.antipode_recursive(w))
    right, left, unit = co.convolution_sides(w)
    _compare(out, "·(Id⊗S)Δ_H = ε𝟏", w, right, unit)
    _compare(out, "·(S⊗Id)Δ_H = ε𝟏", w, left, unit)
    _compare(out, "symmetric antipode is the multiset image", w, co.antipode_sym(w),
             co.antipode_recursive(w).map(MultisetForest))
    return out


def _dendriform(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    second = random_forest(rng, graph, 1, max(1, max_len // 2))
    for f in (Forest((w,)), Forest((w,) + second)):
        for name, (lhs, rhs) in co.codendriform_identities(f).items():
            _compare(out, f"codendriform {name}", f, lhs, rhs)
    return out


def _brace(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    lhs, rhs = co.brace_sides(w)
    _compare(out, "(δ1⊗Id)δ1 − (Id⊗δ1)δ1 = (Id + Id⊗τ)δ2", w, lhs, rhs)
    d1 = co.delta_n(w, 1).map(lambda t: Tensor((t[0], t[1][0])))
    _compare(out, "δ1 = Δ_CP", w, d1, co.delta_cp(w))
    total = LinComb.sum(co.delta_n(w, n) for n in range(1, w.length + 1)).map(
        lambda t: Tensor((Forest((t[0],)), t[1])))
    _compare(out, "Σ_n δ_n = Δ_H − 𝟏⊗ω − ω⊗𝟏", w, total,
             co.delta_h(w) - LinComb.of(_unit_pair(w, 0)) - LinComb.of(_unit_pair(w, 1)))
    return out


def _unit_pair(w: Walk, side: int) -> Tensor:
    f = Forest((w,))
    return Tensor((f, UNIT) if side == 0 else (UNIT, f))


def _morphism(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    _compare(out, "(Φ⊗Φ)Δ_H = Δ_H∘Φ", w,
             canonical_relabel(phi(co.delta_h(w))), canonical_relabel(co.delta_h(phi(w))))
    _compare(out, "Φ∘S = S∘Φ", w,
             canonical_relabel(phi(co.antipode_recursive(w))), canonical_relabel(co.antipode_recursive(phi(w))))
    f = random_forest(rng, graph, rng.randint(2, 3), max(1, max_len // 2))
    g = list(f)
    rng.shuffle(g)
    _compare(out, "Δ_H on the symmetric algebra ignores the representative", Forest(f),
             co.delta_h_sym(Forest(f)), co.delta_h_sym(Forest(g)))
    sym_phi = canonical_relabel(phi(co.delta_h_sym(Forest(f))))
    _compare(out, "(Φ⊗Φ)Δ_H = Δ_H∘Φ on the symmetric algebra", Forest(f),
             sym_phi, canonical_relabel(co.delta_h_sym(phi(Forest(g)))))
    return out


def _closed_pairs(w: Walk) -> list[Cut]:
    return [Cut(k, kp) for k in range(len(w)) for kp in range(k + 1, len(w)) if w[k] == w[kp]]


def _cuts(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    pairs = _closed_pairs(w)
    cuts = set(adc(w))
    sections = les(w)

    def admissible_in(x: Walk, c: tuple[int, int]) -> bool:
        return Cut(*c) in set(adc(x))

    for c in pairs:
        k, kp = c
        for d in pairs:
            l, lp = d
            if kp < l:
                shift = kp - k
                lhs = c in cuts and admissible_in(remainder(w, [c]), (l - shift, lp - shift))
                rhs = d in cuts and admissible_in(remainder(w, [d]), c)
                if lhs != rhs:
                    out.append(_fail("disjoint cut exchange", w, [c, d, lhs], [c, d, rhs]))
            if k < l < lp <= kp:
                lhs = c in cuts and admissible_in(subwalk(w, k, kp), (l - k, lp - k))
                rhs = d in cuts and admissible_in(remainder(w, [d]), (k, kp - (lp - l)))
                if lhs != rhs:
                    out.append(_fail("nested cut exchange", w, [c, d, lhs], [c, d, rhs]))
    for c in sections:
        for d in sections:
            if d.k < c.k < d.kp < c.kp and w[c.k] != w[d.k]:
                out.append(_fail("loop-erased sections never straddle", w, c, d))
    ordered = adc(w)
    for i, c in enumerate(ordered):
        for d in ordered[i + 1:]:
            if not (time_leq(w, c, d) and not time_leq(w, d, c)):
                out.append(_fail("time order is total and matches the listing", w, c, d))
    for e in eadc(w):
        removed = {i for k, kp in e for i in range(k + 1, kp + 1)}
        keep = [i for i in range(len(w)) if i not in removed]
        # a removed loop hanging at the end vertex lies inside the lifted cut
        hanging = {k: kp for k, kp in e}
        for c in adc(remainder(w, e)):
            end = keep[c.kp]
            orig = Cut(keep[c.k], hanging.get(end, end))
            if orig not in cuts:
                out.append(_fail("admissible cuts of a remainder are admissible", w, list(e), orig))
    if (not cuts) != (w.length == 0 or len(set(w)) == len(w)
                      or (w.is_closed and len(set(w)) == len(w) - 1)):
        out.append(_fail("no admissible cut exactly on self-avoiding walks and polygons", w, sorted(cuts), None))
    return out


def _closure(w: Walk, rng: random.Random, graph: Digraph, max_len: int) -> list[Failure]:
    out: list[Failure] = []
    for family, pred in (("tower", is_tower), ("corolla", None), ("cactus", is_cactus)):
        x = random_family_member(rng, family, max_len)
        if family == "corolla":
            root = is_corolla(x)

            def pred(y: Walk, root: int | None = root) -> bool:
                return is_corolla(y) == root

            _compare(out, "corolla coproduct closed form = Δ_H", x, corolla_coproduct(x), co.delta_h(x))
        if not pred(x):
            out.append(_fail(f"generated {family} is recognized", x, None, None))
        for term in co.delta_h(x):
            for forest in term:
                for y in forest:
                    if not pred(y):
                        out.append(_fail(f"Δ_H factors stay {family}s", x, term, y))
    return out


SUITES: dict[str, Callable[[Walk, random.Random, Digraph, int], list[Failure]]] = {
    "copreLie": _copre_lie,
    "coassoc": _coassoc,
    "antipode": _antipode,
    "dendriform": _dendriform,
    "brace": _brace,
    "morphism": _morphism,
    "cuts": _cuts,
    "closure": _closure,
}


def _run_one(args: tuple[str, int, Walk, int, Digraph, int]) -> list[Failure]:
    suite, index, w, seed, graph, max_len = args
    failures = SUITES[suite](w, random.Random(f"{seed}/{index}"), graph, max_len)
    for f in failures:
        f["index"] = index
    return failures


def run_suite(suite: str, count: int = 500, vertices: int = 5, max_len: int = 12,
              seed: int = 0, graph: Digraph | None = None, jobs: int = 1) -> CheckReport:
    """Run ``suite`` on ``count`` seeded instances; failures are listed in instance order."""
    if suite not in SUITES:
        raise KeyError(suite)
    cfg = GenConfig(vertices=vertices, min_len=0, max_len=max_len, count=count, seed=seed)
    graph = graph or Digraph.complete(vertices)
    walks = gen_walks(cfg, graph)
    tasks = [(suite, i, w, seed, graph, max_len) for i, w in enumerate(walks)]
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        results = [_run_one(t) for t in tasks]
    report = CheckReport(suite, count, seed, time.perf_counter() - start)
    for r in results:
        report.failures.extend(r)
    return report
