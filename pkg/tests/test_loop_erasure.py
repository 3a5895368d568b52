import pytest
from hypothesis import given

from oracles import les_oracle, lew_prefix
from strategies import walks
from walkhopf import Cut, Walk, WalkError, erased_cycles, les, lew, skeleton
from walkhopf.core import subwalk
from walkhopf.loop_erasure import cycle_indices, cycle_walks, is_les_section


def test_lew_steps():
    w = Walk("12324522")
    assert [str(lew(w, k)) for k in range(8)] == ["1", "12", "123", "12", "124", "1245", "12", "12"]
    assert skeleton(w) == Walk("12")
    with pytest.raises(WalkError):
        lew(w, 8)


def test_les_golden():
    w = Walk("12324522")
    assert les(w) == {Cut(1, 3), Cut(3, 6), Cut(1, 6), Cut(6, 7), Cut(3, 7), Cut(1, 7)}
    assert {str(subwalk(w, *c)) for c in les(w)} == {"232", "2452", "232452", "22", "24522", "2324522"}
    assert les(Walk("1232341")) == {Cut(1, 3), Cut(0, 6)}


def test_les_degenerate():
    assert les(Walk("7")) == frozenset()
    assert les(Walk("12345")) == frozenset()
    assert les(Walk("11")) == {Cut(0, 1)}
    assert les(Walk("111")) == {Cut(0, 1), Cut(1, 2), Cut(0, 2)}


def test_is_les_section_validates_cut():
    w = Walk("1232341")
    assert is_les_section(w, (1, 3)) and not is_les_section(w, (2, 4))
    with pytest.raises(WalkError):
        is_les_section(w, (0, 1))


def test_erased_cycles_golden():
    kappa = Walk("12332441")
    assert erased_cycles(kappa) == [Cut(2, 3), Cut(1, 4), Cut(5, 6), Cut(0, 7)]
    assert [str(c) for c in cycle_walks(kappa)] == ["33", "232", "44", "1241"]
    assert erased_cycles(Walk("123451")) == [Cut(0, 5)]
    assert erased_cycles(Walk("111")) == [Cut(0, 1), Cut(1, 2)]


@given(walks())
def test_les_matches_erasure_oracle(w):
    assert set(les(w)) == les_oracle(w)


@given(walks())
def test_lew_matches_stack_replay(w):
    for k in range(len(w)):
        assert list(lew(w, k)) == lew_prefix(w, k)


@given(walks())
def test_cycle_blocks_partition_erased_steps(w):
    blocks = cycle_indices(w)
    flat = [i for b in blocks for i in b]
    assert len(flat) == len(set(flat))
    assert len(flat) + skeleton(w).length == w.length
    for cyc in cycle_walks(w):
        assert cyc.is_closed and len(set(cyc)) == cyc.length


@given(walks())
def test_sections_are_closed_and_never_straddle_across_vertices(w):
    secs = les(w)
    for k, kp in secs:
        assert w[k] == w[kp]
    for c in secs:
        for d in secs:
            assert not (d.k < c.k < d.kp < c.kp and w[c.k] != w[d.k])
