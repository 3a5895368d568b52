"""Chronological (Lawler) loop erasure.

All cuts use indices of the original walk, also after removals.
"""

from __future__ import annotations

from functools import lru_cache

from .core import Cut, Walk, _check_index, check_cut


def lew(w: Walk, k: int) -> Walk:
    """Loop-erased walk after processing ``w_0 .. w_k``."""
    _check_index(w, k)
    state: list[int] = []
    for v in w[:k + 1]:
        if v in state:
            del state[state.index(v) + 1:]
        else:
            state.append(v)
    return Walk(state)


def skeleton(w: Walk) -> Walk:
    return lew(w, w.length)


@lru_cache(maxsize=65536)
def _les(w: Walk) -> tuple[Cut, ...]:
    # Recursive construction: when w_{k+1} is still in LEW_k, close the cycle from
    # its latest occurrence k', then extend every section ending at k' to k+1.
    found: set[Cut] = set()
    ending_at: dict[int, list[int]] = {}
    state: list[int] = []
    last_seen: dict[int, int] = {}
    for j, v in enumerate(w):
        if j > 0 and v in state:
            kp = last_seen[v]
            starts = [kp] + ending_at.get(kp, [])
            for s in starts:
                found.add(Cut(s, j))
            ending_at[j] = starts
            del state[state.index(v) + 1:]
        else:
            state.append(v)
        last_seen[v] = j
    return tuple(sorted(found))


def les(w: Walk) -> frozenset[Cut]:
    """Loop-erased sections of ``w`` as original-coordinate cuts."""
    return frozenset(_les(Walk(w)))


def is_les_section(w: Walk, c: tuple[int, int]) -> bool:
    return check_cut(w, c) in les(w)


@lru_cache(maxsize=65536)
def _erased_cycles(w: Walk) -> tuple[Cut, ...]:
    out: list[Cut] = []
    state: list[int] = []
    slot_index: list[int] = []  # latest original index held by each LEW position
    for j, v in enumerate(w):
        if j > 0 and v in state:
            pos = state.index(v)
            out.append(Cut(slot_index[pos], j))
            del state[pos + 1:]
            del slot_index[pos + 1:]
            slot_index[pos] = j
        else:
            state.append(v)
            slot_index.append(j)
    return tuple(out)


def erased_cycles(w: Walk) -> list[Cut]:
    """Simple cycles in erasure order; cycle ``(p, j)`` closes at step ``j`` on the
    LEW vertex last visited at ``p``."""
    return list(_erased_cycles(Walk(w)))


def cycle_indices(w: Walk) -> list[list[int]]:
    """For each erased cycle, the original indices it removes (disjoint blocks)."""
    used: set[int] = set()
    out = []
    for k, kp in erased_cycles(w):
        own = [i for i in range(k + 1, kp + 1) if i not in used]
        used.update(own)
        out.append(own)
    return out


def cycle_walks(w: Walk) -> list[Walk]:
    """Vertex sequences of the erased simple cycles, replaying the erasure."""
    return [Walk((w[c.k],) + tuple(w[i] for i in idx))
            for c, idx in zip(erased_cycles(w), cycle_indices(w))]
