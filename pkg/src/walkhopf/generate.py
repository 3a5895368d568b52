"""Seeded random walks, plus constructive towers, corollas and cacti."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Digraph, Walk, WalkError


@dataclass(frozen=True)
class GenConfig:
    vertices: int = 5
    min_len: int = 0
    max_len: int = 12
    count: int = 500
    seed: int = 0
    self_loops: bool = True

    def __post_init__(self) -> None:
        if self.vertices < 1:
            raise WalkError("vertex count must be at least 1")
        if not 0 <= self.min_len <= self.max_len:
            raise WalkError("need 0 <= min_len <= max_len")
        if self.count < 0:
            raise WalkError("count must be non-negative")
        if self.vertices == 1 and not self.self_loops and self.max_len > 0:
            raise WalkError("a single vertex without self-loops admits no steps")


def random_walk(rng: random.Random, graph: Digraph, length: int) -> Walk:
    """Uniform start, uniform successor at each step; stops early at a sink."""
    verts = sorted(graph.vertices)
    seq = [rng.choice(verts)]
    for _ in range(length):
        succ = graph.successors(seq[-1])
        if not succ:
            break
        seq.append(rng.choice(succ))
    return Walk(seq)


def gen_walks(cfg: GenConfig, graph: Digraph | None = None) -> list[Walk]:
    """``cfg.count`` walks, deterministic in ``cfg.seed``. Vertices are 1..v on the
    complete digraph unless ``graph`` is given."""
    if graph is None:
        graph = Digraph.complete(cfg.vertices, cfg.self_loops)
    rng = random.Random(cfg.seed)
    return [random_walk(rng, graph, rng.randint(cfg.min_len, cfg.max_len))
            for _ in range(cfg.count)]


def random_forest(rng: random.Random, graph: Digraph, words: int, max_len: int) -> tuple[Walk, ...]:
    return tuple(random_walk(rng, graph, rng.randint(0, max_len)) for _ in range(words))


# ---------------------------------------------------------------- constructive families

def random_tower(rng: random.Random, height: int, max_cycle: int = 3) -> Walk:
    """Stack ``height`` simple cycles; each next root is a non-root vertex of the
    cycle below it. Labels are fresh, so distant cycles never meet."""
    fresh = iter(range(1, 10**6))
    root = next(fresh)
    cycles: list[list[int]] = []
    base = root
    for _ in range(height):
        size = rng.randint(1, max_cycle)  # number of new vertices
        body = [next(fresh) for _ in range(size)]
        cycles.append([base] + body + [base])
        base = rng.choice(body)

    def expand(level: int) -> list[int]:
        cyc = cycles[level]
        if level + 1 == len(cycles):
            return cyc
        nxt = cycles[level + 1][0]
        out: list[int] = []
        for v in cyc:
            if v == nxt and not out.count(nxt):
                out.extend(expand(level + 1))
            else:
                out.append(v)
        return out

    return Walk(expand(0))


def random_corolla(rng: random.Random, petals: int, pool: int = 5, max_petal: int = 3) -> Walk:
    """Concatenate ``petals`` simple cycles through root 1, drawn from ``pool``
    other vertices; self-loops are allowed."""
    seq = [1]
    others = list(range(2, pool + 2))
    for _ in range(petals):
        size = rng.randint(0, max_petal)
        seq.extend(rng.sample(others, size))
        seq.append(1)
    return Walk(seq)


def random_cactus(rng: random.Random, length: int, close_prob: float = 0.4) -> Walk:
    """Each step either visits a fresh label or returns to a vertex of the current
    loop-erased walk; then apply a random injective relabeling."""
    seq = [1]
    state = [1]
    top = 1
    for _ in range(length):
        if rng.random() < close_prob:
            v = rng.choice(state)
            del state[state.index(v) + 1:]
        else:
            top += 1
            v = top
            state.append(v)
        seq.append(v)
    image = rng.sample(range(1, 3 * top + 1), top)
    return Walk(image[v - 1] for v in seq)


def random_family_member(rng: random.Random, family: str, max_len: int = 12) -> Walk:
    """A random tower, corolla or cactus of moderate size."""
    if family == "tower":
        return random_tower(rng, rng.randint(1, 4))
    if family == "corolla":
        return random_corolla(rng, rng.randint(1, 4))
    if family == "cactus":
        return random_cactus(rng, rng.randint(0, max_len))
    raise WalkError(f"unknown family {family!r}")
