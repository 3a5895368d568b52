"""Cacti, temporal trees, towers, corollas and the relabeling morphisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import (
    UNIT,
    Cut,
    Forest,
    LinComb,
    MultisetForest,
    Tensor,
    Walk,
    WalkError,
)
from .loop_erasure import cycle_walks, erased_cycles, les, skeleton


def is_cactus(w: Walk) -> bool:
    """Every repeated-vertex pair ``w_k = w_k'`` bounds a loop-erased section."""
    sections = les(w)
    return all(Cut(k, kp) in sections
               for k in range(len(w)) for kp in range(k + 1, len(w)) if w[k] == w[kp])


def cactus_map(w: Walk) -> Walk:
    """Relabel so that each vertex not already on the loop-erased walk gets a fresh
    label (one more than the largest so far); closing steps reuse the label."""
    w = Walk(w)
    out = [w[0]]
    state: list[int] = [w[0]]
    last_seen = {w[0]: 0}
    for j in range(1, len(w)):
        v = w[j]
        if v in state:
            out.append(out[last_seen[v]])
            del state[state.index(v) + 1:]
        else:
            out.append(max(out) + 1)
            state.append(v)
        last_seen[v] = j
    return Walk(out)


# ---------------------------------------------------------------- temporal tree

@dataclass(frozen=True)
class TreeNode:
    rank: int  # erasure rank, 1-based
    cut: Cut  # in the coordinates of the cactus image (same as the walk's)
    cycle: Walk
    parent: int  # rank of the parent node, 0 for the root


@dataclass(frozen=True)
class TemporalTree:
    walk: Walk
    cactus: Walk
    root: Walk  # self-avoiding skeleton
    nodes: tuple[TreeNode, ...] = field(default_factory=tuple)

    @property
    def order(self) -> list[int]:
        return [n.rank for n in self.nodes]

    def children(self, rank: int) -> list[int]:
        return [n.rank for n in self.nodes if n.parent == rank]

    def to_json(self) -> dict[str, Any]:
        return {
            "walk": list(self.walk),
            "cactus": list(self.cactus),
            "root": list(self.root),
            "nodes": [
                {"rank": n.rank, "cut": [n.cut.k, n.cut.kp], "cycle": list(n.cycle), "parent": n.parent}
                for n in self.nodes
            ],
            "order": self.order,
        }

    def to_dot(self) -> str:
        lines = ["digraph temporal_tree {", f'  n0 [label="root {self.root}", shape=box];']
        for n in self.nodes:
            lines.append(f'  n{n.rank} [label="{n.cycle} #{n.rank}"];')
        for n in self.nodes:
            lines.append(f"  n{n.parent} -> n{n.rank};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def temporal_tree(w: Walk) -> TemporalTree:
    """Tree of the erased simple cycles of ``C(w)`` over the skeleton root.

    A cycle hangs on the loop-erased-walk position it closes at; its parent is the
    later cycle that erases that position, or the root if the position survives.
    """
    w = Walk(w)
    kappa = cactus_map(w)
    cuts = erased_cycles(kappa)
    cycles = cycle_walks(kappa)
    # replay the erasure, tracking which positions each cycle removes
    owner_of_position: dict[int, int] = {}
    state_idx: list[int] = []  # original index of each live position
    hangs_on: list[int] = []
    state: list[int] = []
    rank = 0
    for j, v in enumerate(kappa):
        if j > 0 and v in state:
            rank += 1
            pos = state.index(v)
            hangs_on.append(state_idx[pos])  # positions are named by their creating index
            for p in state_idx[pos + 1:]:
                owner_of_position[p] = rank
            del state[pos + 1:]
            del state_idx[pos + 1:]
        else:
            state.append(v)
            state_idx.append(j)
    nodes = tuple(
        TreeNode(r, cuts[r - 1], cycles[r - 1], owner_of_position.get(hangs_on[r - 1], 0))
        for r in range(1, rank + 1)
    )
    return TemporalTree(w, kappa, skeleton(w), nodes)


# ---------------------------------------------------------------- towers and corollas

def _cycle_roots(w: Walk) -> list[int]:
    return [w[c.k] for c in erased_cycles(w)]


def is_tower(w: Walk) -> bool:
    """Closed walk of stacked simple cycles, each resting on a non-root vertex of
    the one below and disjoint from all but its neighbours."""
    w = Walk(w)
    if w.length == 0 or not w.is_closed:
        return False
    stack = cycle_walks(w)[::-1]  # the top of a tower is erased first
    roots = _cycle_roots(w)[::-1]
    if roots[0] != w[0]:
        return False
    sets = [set(c) for c in stack]
    for i in range(len(stack)):
        for j in range(i + 1, len(stack)):
            meet = sets[i] & sets[j]
            if j == i + 1:
                if meet != {roots[j]} or roots[j] == roots[i]:
                    return False
            elif meet:
                return False
    return True


def is_corolla(w: Walk) -> int | None:
    """The common root if ``w`` is a closed bouquet of simple cycles, else None."""
    w = Walk(w)
    if w.length == 0 or not w.is_closed:
        return None
    if all(r == w[0] for r in _cycle_roots(w)):
        return w[0]
    return None


def corolla_petals(w: Walk) -> list[Walk]:
    if is_corolla(w) is None:
        raise WalkError(f"{w} is not a corolla")
    return cycle_walks(w)


def corolla_coproduct(w: Walk) -> LinComb:
    """``w⊗𝟏 + 𝟏⊗w + Σ_k (first k petals) ⊗ (remaining petals)``."""
    w = Walk(w)
    petals = corolla_petals(w)

    def glue(ps: list[Walk]) -> Forest:
        seq = [ps[0][0]]
        for p in ps:
            seq.extend(p[1:])
        return Forest((Walk(seq),))

    f = Forest((w,))
    terms = [(Tensor((f, UNIT)), 1), (Tensor((UNIT, f)), 1)]
    for k in range(1, len(petals)):
        terms.append((Tensor((glue(petals[:k]), glue(petals[k:]))), 1))
    return LinComb(terms)


# ---------------------------------------------------------------- unlabeled quotient

def relabel_walk(w: Walk) -> Walk:
    """First-occurrence relabeling to 1, 2, 3, ..."""
    names: dict[int, int] = {}
    return Walk(names.setdefault(v, len(names) + 1) for v in w)


def canonical_relabel(f: Any) -> Any:
    """Normal form modulo injective relabelings of each walk separately."""
    if isinstance(f, Walk):
        return relabel_walk(f)
    if isinstance(f, MultisetForest):
        return MultisetForest(relabel_walk(w) for w in f)
    if isinstance(f, Forest):
        return Forest(relabel_walk(w) for w in f)
    if isinstance(f, Tensor):
        return Tensor(canonical_relabel(x) for x in f)
    if isinstance(f, LinComb):
        return f.map(canonical_relabel)
    raise TypeError(f"cannot relabel {type(f).__name__}")


def phi(x: Any) -> Any:
    """Unlabeled cactus of a walk, extended factor-wise to forests, tensors and
    linear combinations."""
    if isinstance(x, Walk):
        return relabel_walk(cactus_map(x))
    if isinstance(x, MultisetForest):
        return MultisetForest(phi(w) for w in x)
    if isinstance(x, Forest):
        return Forest(phi(w) for w in x)
    if isinstance(x, Tensor):
        return Tensor(phi(f) for f in x)
    if isinstance(x, LinComb):
        return x.map(phi)
    raise TypeError(f"cannot map {type(x).__name__}")
