"""Walks, forests, tensors and exact linear combinations.

Walks are stored as vertex sequences ``w0 w1 ... wl``.  A forest is an ordered
word of walks (the empty word is the unit of the tensor algebra).  Linear
combinations carry :class:`fractions.Fraction` coefficients and never store a
zero coefficient.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Callable, NamedTuple, Union


class WalkError(ValueError):
    """Raised on malformed walks, cuts or forests (an input error)."""


SAW = "SAW"
SAP = "SAP"
OTHER = "other"


class Walk(tuple):
    """A nonempty sequence of non-negative integer vertex labels."""

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int] = ()) -> "Walk":
        if isinstance(vertices, Walk):
            return vertices
        if isinstance(vertices, str):
            from .parsing import parse_walk

            return parse_walk(vertices)
        items = tuple(vertices)
        if not items:
            raise WalkError("a walk needs at least one vertex")
        for v in items:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise WalkError(f"vertex labels must be non-negative integers, got {v!r}")
        return super().__new__(cls, items)

    @property
    def length(self) -> int:
        return len(self) - 1

    @property
    def degree(self) -> int:
        return len(self) - 1

    @property
    def is_closed(self) -> bool:
        return self[0] == self[-1]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self)

    def edges(self) -> list[tuple[int, int]]:
        """Edge multiset as the list of traversed arcs, in order."""
        return list(zip(self, self[1:]))

    def __str__(self) -> str:
        if all(v < 10 for v in self):
            return "".join(map(str, self))
        # a lone multi-digit label needs the comma to avoid digit-by-digit parsing
        return ",".join(map(str, self)) + ("," if len(self) == 1 else "")

    def __repr__(self) -> str:
        return f"Walk({str(self)!r})"

    # tuple.__add__ etc. would silently return plain tuples
    def __add__(self, other):  # type: ignore[override]
        return NotImplemented

    def __mul__(self, other):  # type: ignore[override]
        return NotImplemented

    __rmul__ = __mul__


class Forest(tuple):
    """An ordered word of walks; ``Forest()`` is the unit.  ``f | g`` concatenates."""

    __slots__ = ()

    def __new__(cls, walks: Iterable[Any] = ()) -> "Forest":
        if isinstance(walks, Forest):
            return walks
        if isinstance(walks, Walk):
            return super().__new__(cls, (walks,))
        return super().__new__(cls, tuple(Walk(w) for w in walks))

    @property
    def degree(self) -> int:
        return sum(w.degree for w in self)

    def __or__(self, other: "Forest | Walk") -> "Forest":
        return concat(self, other)

    def __ror__(self, other: "Walk") -> "Forest":
        return concat(other, self)

    def __str__(self) -> str:
        if not self:
            return "𝟏"
        return "|".join(str(w) for w in self)

    def __repr__(self) -> str:
        return f"Forest({str(self)!r})"

    def __add__(self, other):  # type: ignore[override]
        return NotImplemented

    def __mul__(self, other):  # type: ignore[override]
        return NotImplemented

    __rmul__ = __mul__


UNIT = Forest()


def _walk_order(w: Walk) -> tuple[int, tuple[int, ...]]:
    return (w.degree, tuple(w))


class MultisetForest(tuple):
    """A forest modulo reordering, stored sorted by (degree, vertex sequence)."""

    __slots__ = ()

    def __new__(cls, walks: Iterable[Any] = ()) -> "MultisetForest":
        if isinstance(walks, MultisetForest):
            return walks
        if isinstance(walks, Walk):
            walks = (walks,)
        return super().__new__(cls, tuple(sorted((Walk(w) for w in walks), key=_walk_order)))

    @property
    def degree(self) -> int:
        return sum(w.degree for w in self)

    def __or__(self, other: "MultisetForest") -> "MultisetForest":
        return MultisetForest(tuple(self) + tuple(MultisetForest(other)))

    def __str__(self) -> str:
        if not self:
            return "𝟏"
        return "{" + ",".join(str(w) for w in self) + "}"

    def __repr__(self) -> str:
        return f"MultisetForest({str(self)!r})"

    def __add__(self, other):  # type: ignore[override]
        return NotImplemented

    def __mul__(self, other):  # type: ignore[override]
        return NotImplemented

    __rmul__ = __mul__


class Tensor(tuple):
    """A pure tensor ``a ⊗ b ⊗ ...`` of walks or forests (used as a basis key)."""

    __slots__ = ()

    def __new__(cls, factors: Iterable[Any]) -> "Tensor":
        return super().__new__(cls, tuple(factors))

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self)

    def __matmul__(self, other: "Tensor") -> "Tensor":
        return Tensor(tuple(self) + tuple(other))

    def __str__(self) -> str:
        return " ⊗ ".join(str(f) for f in self)

    def __repr__(self) -> str:
        return f"Tensor({str(self)!r})"

    def __add__(self, other):  # type: ignore[override]
        return NotImplemented

    def __mul__(self, other):  # type: ignore[override]
        return NotImplemented

    __rmul__ = __mul__


class Cut(NamedTuple):
    """Index pair ``(k, k')`` in the coordinates of the original walk."""

    k: int
    kp: int

    def __str__(self) -> str:
        return f"({self.k},{self.kp})"


class Digraph:
    """Finite digraph; self-loops allowed."""

    __slots__ = ("vertices", "arcs", "_succ")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Iterable[int]]):
        vs = frozenset(int(v) for v in vertices)
        es = frozenset((int(a), int(b)) for a, b in (tuple(e) for e in arcs))
        if not vs:
            raise WalkError("a digraph needs at least one vertex")
        for a, b in es:
            if a not in vs or b not in vs:
                raise WalkError(f"arc ({a},{b}) has an endpoint outside the vertex set")
        self.vertices = vs
        self.arcs = es
        succ: dict[int, list[int]] = {v: [] for v in vs}
        for a, b in es:
            succ[a].append(b)
        self._succ = {v: sorted(bs) for v, bs in succ.items()}

    @classmethod
    def complete(cls, n: int, self_loops: bool = True) -> "Digraph":
        vs = range(1, n + 1)
        return cls(vs, [(a, b) for a in vs for b in vs if self_loops or a != b])

    def successors(self, v: int) -> list[int]:
        return self._succ.get(v, [])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and (self.vertices, self.arcs) == (other.vertices, other.arcs)

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self.vertices)}, |E|={len(self.arcs)})"


# ---------------------------------------------------------------- linear combinations

Scalar = Union[int, Fraction]


class LinComb(Mapping):
    """Finitely supported exact-rational linear combination over a hashable basis.

    Immutable.  Supports ``+``, ``-``, scalar ``*`` and ``==`` (also against 0).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Any, Scalar] | Iterable[tuple[Any, Scalar]] | None = None):
        acc: dict[Any, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                acc[key] = acc.get(key, 0) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def of(cls, term: Any, coeff: Scalar = 1) -> "LinComb":
        return cls({term: coeff})

    @classmethod
    def sum(cls, parts: Iterable["LinComb"]) -> "LinComb":
        acc: dict[Any, Fraction] = {}
        for p in parts:
            for k, v in p._terms.items():
                acc[k] = acc.get(k, 0) + v
        return cls(acc)

    def __getitem__(self, key: Any) -> Fraction:
        return self._terms[key]

    def coeff(self, key: Any) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self) -> Iterator[Any]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb.sum((self, other))

    def __neg__(self) -> "LinComb":
        return LinComb({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb.sum((self, -other))

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LinComb({k: v * scalar for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def map(self, f: Callable[[Any], Any]) -> "LinComb":
        """Extend ``f`` linearly; ``f`` returns a basis element or a LinComb."""
        acc: dict[Any, Fraction] = {}
        for k, c in self._terms.items():
            img = f(k)
            if isinstance(img, LinComb):
                for k2, c2 in img._terms.items():
                    acc[k2] = acc.get(k2, 0) + c * c2
            else:
                acc[img] = acc.get(img, 0) + c
        return LinComb(acc)

    def degrees(self) -> set[int]:
        return {k.degree for k in self._terms}

    def __repr__(self) -> str:
        return f"LinComb({str(self)})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), key=lambda kv: str(kv[0])):
            if c == 1:
                parts.append(f"+ {k}")
            elif c == -1:
                parts.append(f"- {k}")
            elif c < 0:
                parts.append(f"- {-c}·{k}")
            else:
                parts.append(f"+ {c}·{k}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def tensor(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear tensor product; factors flatten into a single :class:`Tensor` key."""

    def factors(key: Any) -> tuple:
        return tuple(key) if isinstance(key, Tensor) else (key,)

    acc: dict[Any, Fraction] = {}
    for a, ca in x.items():
        fa = factors(a)
        for b, cb in y.items():
            key = Tensor(fa + factors(b))
            acc[key] = acc.get(key, 0) + ca * cb
    return LinComb(acc)


def apply_at(x: LinComb, position: int, f: Callable[[Any], LinComb], arity: int | None = None) -> LinComb:
    """Apply the linear map ``f`` to one tensor slot: ``Id ⊗ .. ⊗ f ⊗ .. ⊗ Id``.

    ``f`` maps a basis element to a LinComb whose keys may themselves be
    Tensors; those are spliced in place.
    """
    cache: dict[Any, LinComb] = {}
    acc: dict[Any, Fraction] = {}
    for key, c in x.items():
        if arity is not None and len(key) != arity:
            raise WalkError(f"expected a {arity}-fold tensor, got {key!r}")
        before, slot, after = key[:position], key[position], key[position + 1:]
        img = cache.get(slot)
        if img is None:
            img = cache[slot] = f(slot)
        for k2, c2 in img.items():
            mid = tuple(k2) if isinstance(k2, Tensor) else (k2,)
            nk = Tensor(before + mid + after)
            acc[nk] = acc.get(nk, 0) + c * c2
    return LinComb(acc)


def as_forest_comb(x: Any) -> LinComb:
    """Coerce a Walk, Forest or LinComb thereof to a LinComb over forests."""
    if isinstance(x, LinComb):
        return x.map(lambda k: Forest(k) if isinstance(k, Walk) else k)
    if isinstance(x, Walk):
        return LinComb.of(Forest((x,)))
    if isinstance(x, Forest):
        return LinComb.of(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a forest combination")


# ---------------------------------------------------------------- walk surgery

def _check_index(w: Walk, i: int) -> None:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i <= w.length:
        raise WalkError(f"index {i!r} out of range for walk of length {w.length}")


def subwalk(w: Walk, k: int, kp: int) -> Walk:
    """``w_k ... w_k'`` for ``0 <= k <= k' <= length``."""
    _check_index(w, k)
    _check_index(w, kp)
    if k > kp:
        raise WalkError(f"empty range ({k},{kp})")
    return Walk(w[k:kp + 1])


def check_cut(w: Walk, c: tuple[int, int]) -> Cut:
    k, kp = c
    _check_index(w, k)
    _check_index(w, kp)
    if not k < kp:
        raise WalkError(f"cut ({k},{kp}) must have k < k'")
    if w[k] != w[kp]:
        raise WalkError(f"cut ({k},{kp}) is not closed: w_k={w[k]} but w_k'={w[kp]}")
    return Cut(k, kp)


def remainder(w: Walk, cuts: Iterable[tuple[int, int]]) -> Walk:
    """Delete ``w_{k+1} .. w_{k'}`` for each of the pairwise non-overlapping closed cuts."""
    cs = sorted(check_cut(w, c) for c in cuts)
    for a, b in zip(cs, cs[1:]):
        if not a.kp < b.k:
            raise WalkError(f"cuts {a} and {b} overlap")
    out: list[int] = []
    pos = 0
    for k, kp in cs:
        out.extend(w[pos:k + 1])
        pos = kp + 1
    out.extend(w[pos:])
    return Walk(out)


def drop_indices(w: Walk, dropped: Iterable[int]) -> Walk:
    gone = set(dropped)
    return Walk(v for i, v in enumerate(w) if i not in gone)


def cut_span(c: tuple[int, int]) -> range:
    """Original indices removed from the remainder by cutting ``c``."""
    return range(c[0] + 1, c[1] + 1)


def classify(w: Walk) -> str:
    if len(set(w)) == len(w):
        return SAW
    if w.length >= 1 and w[0] == w[-1] and len(set(w[:-1])) == w.length:
        return SAP
    return OTHER


def validate_on_graph(w: Walk, g: Digraph) -> bool:
    if w.length == 0:
        return w[0] in g.vertices
    return all(arc in g.arcs for arc in w.edges())


def concat(f: Forest | Walk, g: Forest | Walk) -> Forest:
    return Forest(tuple(Forest(f)) + tuple(Forest(g)))


def to_multiset(f: Forest | Walk) -> MultisetForest:
    return MultisetForest(Forest(f))


def counit(x: Any) -> Fraction:
    """Coefficient of the unit forest."""
    return as_forest_comb(x).coeff(UNIT)


def twist(x: LinComb) -> LinComb:
    """Swap the two factors of every tensor in ``x``."""
    return x.map(lambda t: Tensor((t[1], t[0])))


def twist_last(x: LinComb) -> LinComb:
    """``Id ⊗ τ`` on triple tensors."""
    return x.map(lambda t: Tensor((t[0], t[2], t[1])))
