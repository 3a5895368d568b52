"""Coproducts and antipodes on walks and forests of walks.

``delta_cp`` is the co-preLie coproduct on single walks; ``delta_h`` the
coassociative coproduct on the tensor algebra, extended multiplicatively;
``delta_n`` splits it by the number of cuts; ``delta_prec``/``delta_succ`` split
it by whether the first word is entirely cut out.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

from .core import (
    UNIT,
    Cut,
    Forest,
    LinComb,
    MultisetForest,
    Tensor,
    Walk,
    WalkError,
    apply_at,
    as_forest_comb,
    counit,
    cut_span,
    drop_indices,
    remainder,
    subwalk,
    to_multiset,
    twist_last,
)
from .cuts import adc, chains, eadc


def _cut_forest(w: Walk, e: Iterable[Cut]) -> Forest:
    return Forest(subwalk(w, k, kp) for k, kp in e)


# ---------------------------------------------------------------- algebra helpers

def forest_product(x: LinComb, y: LinComb) -> LinComb:
    """Concatenation product extended bilinearly."""
    acc: dict[Forest, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            key = a | b
            acc[key] = acc.get(key, 0) + ca * cb
    return LinComb(acc)


def tensor_product(x: LinComb, y: LinComb) -> LinComb:
    """Factor-wise concatenation ``(a⊗b)·(a'⊗b') = (a|a')⊗(b|b')``."""
    acc: dict[Tensor, Fraction] = {}
    for s, cs in x.items():
        for t, ct in y.items():
            key = Tensor(a | b for a, b in zip(s, t))
            acc[key] = acc.get(key, 0) + cs * ct
    return LinComb(acc)


def multiply(x: LinComb) -> LinComb:
    """``·``: collapse 2-fold tensors of forests by concatenation."""
    return x.map(lambda t: t[0] | t[1])


# ---------------------------------------------------------------- coproducts

def delta_cp(w: Walk) -> LinComb:
    """Sum over admissible cuts of ``remainder ⊗ cut`` (keys are Walk tensors)."""
    w = Walk(w)
    return LinComb((Tensor((remainder(w, [c]), subwalk(w, *c))), 1) for c in adc(w))


def delta_n(w: Walk, n: int) -> LinComb:
    """Terms of the extended coproduct using exactly ``n`` admissible cuts."""
    if n < 1:
        raise WalkError("n must be at least 1")
    w = Walk(w)
    return LinComb((Tensor((remainder(w, e), _cut_forest(w, e))), 1)
                   for e in eadc(w) if len(e) == n)


@lru_cache(maxsize=65536)
def _delta_h_walk(w: Walk) -> LinComb:
    f = Forest((w,))
    terms = [(Tensor((UNIT, f)), 1), (Tensor((f, UNIT)), 1)]
    for e in eadc(w):
        terms.append((Tensor((Forest((remainder(w, e),)), _cut_forest(w, e))), 1))
    return LinComb(terms)


_UNIT_UNIT = LinComb.of(Tensor((UNIT, UNIT)))


def _delta_h_forest(f: Forest) -> LinComb:
    out = _UNIT_UNIT
    for w in f:
        out = tensor_product(out, _delta_h_walk(w))
    return out


def delta_h(x: Any) -> LinComb:
    """Extended coproduct of a walk, forest, or LinComb of forests."""
    return as_forest_comb(x).map(_delta_h_forest)


def delta_h_sym(x: Any) -> LinComb:
    """Coproduct on the symmetric algebra, via any forest representative."""
    if isinstance(x, LinComb):
        return x.map(lambda m: delta_h_sym(m))
    rep = Forest(MultisetForest(x)) if not isinstance(x, Forest) else x
    return delta_h(rep).map(lambda t: Tensor(to_multiset(f) for f in t))


def _split_first(f: Forest, total: bool) -> LinComb:
    if not f:
        raise WalkError("the half coproducts need a nonempty word")
    head = LinComb({t: c for t, c in _delta_h_walk(f[0]).items() if (t[0] == UNIT) == total})
    return tensor_product(head, _delta_h_forest(Forest(f[1:])))


def delta_prec(x: Any) -> LinComb:
    """Terms of Δ_H whose first word keeps a nonempty remainder."""
    if isinstance(x, LinComb):
        return x.map(lambda f: _split_first(Forest(f), total=False))
    return _split_first(Forest(x), total=False)


def delta_succ(x: Any) -> LinComb:
    """Terms of Δ_H whose first word is cut out entirely."""
    if isinstance(x, LinComb):
        return x.map(lambda f: _split_first(Forest(f), total=True))
    return _split_first(Forest(x), total=True)


# ---------------------------------------------------------------- antipodes

@lru_cache(maxsize=65536)
def _antipode_walk(w: Walk) -> LinComb:
    f = Forest((w,))
    out = -LinComb.of(f)
    for e in eadc(w):
        rest = LinComb.of(Forest((remainder(w, e),)))
        out = out - forest_product(rest, _antipode_forest(_cut_forest(w, e)))
    return out


def _antipode_forest(f: Forest) -> LinComb:
    out = LinComb.of(UNIT)
    for w in f:
        out = forest_product(_antipode_walk(w), out)
    return out


def antipode_recursive(x: Any) -> LinComb:
    """Antipode from ``·(Id⊗S)Δ_H = ε`` and ``S(a|b) = S(b)|S(a)``."""
    return as_forest_comb(x).map(_antipode_forest)


def chain_tensor(w: Walk, chain: tuple[Cut, ...]) -> Forest:
    """``T_e`` for a time-ordered chain: the full remainder, then each member read
    over the indices surviving the removal of the earlier members, latest first."""
    removed: set[int] = set()
    pieces: list[Walk] = []
    for k, kp in chain:
        pieces.append(Walk(w[i] for i in range(k, kp + 1) if i not in removed))
        removed.update(cut_span((k, kp)))
    return Forest([drop_indices(w, removed)] + pieces[::-1])


def antipode_closed(w: Walk) -> LinComb:
    w = Walk(w)
    out = -LinComb.of(Forest((w,)))
    for ch in chains(w):
        sign = -1 if len(ch) % 2 else 1
        out = out - LinComb.of(chain_tensor(w, ch), sign)
    return out


def antipode_sym(w: Walk) -> LinComb:
    return antipode_closed(w).map(to_multiset)


# ---------------------------------------------------------------- identity checks

def copre_lie_defect(w: Walk) -> LinComb:
    """``(Δ_CP⊗Id − Id⊗Δ_CP)∘Δ_CP(w)``."""
    d = delta_cp(w)
    return apply_at(d, 0, delta_cp) - apply_at(d, 1, delta_cp)


def copre_lie_check(w: Walk) -> bool:
    lhs = copre_lie_defect(w)
    return lhs == twist_last(lhs)


def coassoc_sides(x: Any) -> tuple[LinComb, LinComb]:
    d = delta_h(x)
    return apply_at(d, 0, delta_h), apply_at(d, 1, delta_h)


def coassoc_check(x: Any) -> bool:
    left, right = coassoc_sides(x)
    return left == right


def convolution_sides(x: Any) -> tuple[LinComb, LinComb, LinComb]:
    """``(·(Id⊗S)Δ_H(x), ·(S⊗Id)Δ_H(x), ε(x)𝟏)``."""
    d = delta_h(x)
    right = multiply(apply_at(d, 1, antipode_recursive))
    left = multiply(apply_at(d, 0, antipode_recursive))
    return right, left, LinComb.of(UNIT, counit(x))


def convolution_check(x: Any) -> bool:
    right, left, unit = convolution_sides(x)
    return right == unit and left == unit


def counit_check(x: Any) -> bool:
    """``(ε⊗Id)Δ_H = Id = (Id⊗ε)Δ_H``."""
    d = delta_h(x)
    x = as_forest_comb(x)
    left = LinComb.sum(LinComb.of(t[1], c) for t, c in d.items() if t[0] == UNIT)
    right = LinComb.sum(LinComb.of(t[0], c) for t, c in d.items() if t[1] == UNIT)
    return left == x and right == x


def codendriform_identities(f: Any) -> dict[str, tuple[LinComb, LinComb]]:
    """Both sides of each displayed identity, keyed by a short name."""
    f = Forest(f)
    if not f:
        raise WalkError("the codendriform identities need a nonempty word")
    prec, succ = delta_prec(f), delta_succ(f)
    out = {
        "H_succ": (apply_at(succ, 0, delta_h), apply_at(succ, 1, delta_succ)),
        "succ_prec": (apply_at(prec, 0, delta_succ), apply_at(succ, 1, delta_prec)),
        "prec_prec": (apply_at(prec, 0, delta_prec), apply_at(prec, 1, delta_h)),
        "sum": (prec + succ, delta_h(f)),
    }
    for i in range(1, len(f) + 1):
        x, y = Forest(f[:i]), Forest(f[i:])
        out[f"prec_mult_{i}"] = (delta_prec(f), tensor_product(delta_prec(x), delta_h(y)))
        out[f"succ_mult_{i}"] = (delta_succ(f), tensor_product(delta_succ(x), delta_h(y)))
    return out


def codendriform_check(f: Any) -> bool:
    return all(a == b for a, b in codendriform_identities(f).values())


def _delta_1_walks(w: Walk) -> LinComb:
    # δ_1 with its single-walk right factor unwrapped, so it composes with itself
    return delta_n(w, 1).map(lambda t: Tensor((t[0], t[1][0])))


def brace_sides(w: Walk) -> tuple[LinComb, LinComb]:
    """``(δ1⊗Id)δ1 − (Id⊗δ1)δ1`` and ``(Id⊗Id⊗Id + Id⊗τ)δ2``."""
    d1 = _delta_1_walks(w)
    lhs = apply_at(d1, 0, _delta_1_walks) - apply_at(d1, 1, _delta_1_walks)
    d2 = delta_n(w, 2).map(lambda t: Tensor((t[0], t[1][0], t[1][1])))
    return lhs, d2 + twist_last(d2)


def brace_prelie_recovery_check(w: Walk) -> bool:
    lhs, rhs = brace_sides(w)
    return lhs == rhs


def delta_1_matches_cp(w: Walk) -> bool:
    return _delta_1_walks(w) == delta_cp(w)
