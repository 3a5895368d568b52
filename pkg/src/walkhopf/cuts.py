"""Admissible cuts, their time order, extended cuts and chains."""

from __future__ import annotations

from functools import cmp_to_key, lru_cache
from itertools import combinations

from .core import Cut, Walk, WalkError, check_cut
from .loop_erasure import les


def _require_les(w: Walk, c: tuple[int, int]) -> Cut:
    cut = check_cut(w, c)
    if cut not in les(w):
        raise WalkError(f"{cut} is not a loop-erased section of {w}")
    return cut


def temporal_context(w: Walk, c: tuple[int, int]) -> list[Cut]:
    """Loop-erased sections strictly containing ``c``: ``l <= k < k' < l'``."""
    k, kp = _require_les(w, c)
    return sorted(s for s in les(w) if s.k <= k and kp < s.kp)


def _min_container(w: Walk, k: int, kp: int) -> Cut | None:
    ctx = [s for s in les(w) if s.k <= k and kp < s.kp]
    if not ctx:
        return None
    # containers never straddle, so the shortest one is the unique inclusion-minimum
    return min(ctx, key=lambda s: (s.kp - s.k, s))


def temporal_min(w: Walk, c: tuple[int, int]) -> Cut | None:
    k, kp = _require_les(w, c)
    return _min_container(w, k, kp)


def is_admissible(w: Walk, c: tuple[int, int]) -> bool:
    k, kp = c
    if (k, kp) == (0, w.length) or Cut(k, kp) not in les(w):
        return False
    m = _min_container(w, k, kp)
    return m is None or w[k] not in w[kp + 1:m.kp + 1]


def _time_cmp(a: Cut, b: Cut) -> int:
    if a == b:
        return 0
    return -1 if _leq(a, b) else 1


def _leq(a: tuple[int, int], b: tuple[int, int]) -> bool:
    (k, kp), (l, lp) = a, b
    return (l <= k < kp <= lp) or (k < kp < l < lp)


@lru_cache(maxsize=65536)
def _adc(w: Walk) -> tuple[Cut, ...]:
    found = [c for c in les(w) if is_admissible(w, c)]
    return tuple(sorted(found, key=cmp_to_key(_time_cmp)))


def adc(w: Walk) -> list[Cut]:
    """Admissible cuts sorted ascending by the time order."""
    return list(_adc(Walk(w)))


def time_leq(w: Walk, c: tuple[int, int], d: tuple[int, int]) -> bool:
    cuts = _adc(Walk(w))
    for x in (c, d):
        if Cut(*x) not in cuts:
            raise WalkError(f"{Cut(*x)} is not an admissible cut of {w}")
    return _leq(c, d)


def _disjoint_families(cuts: list[Cut]) -> list[tuple[Cut, ...]]:
    # cuts sorted by start; extend only with cuts starting after the last end
    out: list[tuple[Cut, ...]] = []

    def grow(prefix: tuple[Cut, ...], start: int) -> None:
        for i in range(start, len(cuts)):
            c = cuts[i]
            if prefix and not prefix[-1].kp < c.k:
                continue
            fam = prefix + (c,)
            out.append(fam)
            grow(fam, i + 1)

    grow((), 0)
    return out


@lru_cache(maxsize=65536)
def _eadc(w: Walk) -> tuple[tuple[Cut, ...], ...]:
    fams = _disjoint_families(sorted(_adc(w)))
    return tuple(sorted(fams, key=lambda f: (len(f), f)))


def eadc(w: Walk) -> list[tuple[Cut, ...]]:
    """Extended admissible cuts: nonempty position-ordered tuples of pairwise
    non-overlapping admissible cuts (``k1 < k1' < k2 < k2' < ...``)."""
    return list(_eadc(Walk(w)))


def eadc_n(w: Walk, n: int) -> list[tuple[Cut, ...]]:
    if n < 1:
        raise WalkError("n must be at least 1")
    return [e for e in _eadc(Walk(w)) if len(e) == n]


def chains(w: Walk) -> list[tuple[Cut, ...]]:
    """Every nonempty set of admissible cuts, each listed in time order."""
    cuts = _adc(Walk(w))  # already time-sorted, so combinations stay sorted
    out = [combo for n in range(1, len(cuts) + 1) for combo in combinations(cuts, n)]
    return sorted(out)
