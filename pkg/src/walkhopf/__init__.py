"""Exact computer algebra on graph walks: loop erasure, admissible cuts,
coproducts, antipodes and cactus maps."""

from .cactus import (
    TemporalTree,
    cactus_map,
    canonical_relabel,
    corolla_coproduct,
    is_cactus,
    is_corolla,
    is_tower,
    phi,
    temporal_tree,
)
from .coalgebra import (
    antipode_closed,
    antipode_recursive,
    antipode_sym,
    delta_cp,
    delta_h,
    delta_h_sym,
    delta_n,
    delta_prec,
    delta_succ,
)
from .core import UNIT, Cut, Digraph, Forest, LinComb, MultisetForest, Tensor, Walk, WalkError
from .cuts import adc, chains, eadc, is_admissible, temporal_context, temporal_min, time_leq
from .loop_erasure import erased_cycles, les, lew, skeleton
from .parsing import parse_forest, parse_walk

__all__ = [
    "UNIT", "Cut", "Digraph", "Forest", "LinComb", "MultisetForest", "TemporalTree", "Tensor",
    "Walk", "WalkError", "adc", "antipode_closed", "antipode_recursive", "antipode_sym",
    "cactus_map", "canonical_relabel", "chains", "corolla_coproduct", "delta_cp", "delta_h",
    "delta_h_sym", "delta_n", "delta_prec", "delta_succ", "eadc", "erased_cycles", "is_admissible",
    "is_cactus", "is_corolla", "is_tower", "les", "lew", "parse_forest", "parse_walk", "phi",
    "skeleton", "temporal_context", "temporal_min", "temporal_tree", "time_leq",
]


def clear_caches() -> None:
    """Drop all memoized per-walk results (for cold timings or memory)."""
    from . import coalgebra, cuts, loop_erasure

    for fn in (loop_erasure._les, loop_erasure._erased_cycles, cuts._adc, cuts._eadc,
               coalgebra._delta_h_walk, coalgebra._antipode_walk):
        fn.cache_clear()


__all__.append("clear_caches")
