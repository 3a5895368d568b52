import pytest
from hypothesis import given

from oracles import adc_oracle, eadc_oracle
from strategies import walks
from walkhopf import Cut, Walk, WalkError, adc, chains, eadc, is_admissible, temporal_context, temporal_min, time_leq
from walkhopf.core import classify, subwalk
from walkhopf.cuts import eadc_n


def test_temporal_context_golden():
    w = Walk("12324522")
    assert temporal_context(w, (1, 3)) == [Cut(1, 6), Cut(1, 7)]
    assert temporal_min(w, (1, 3)) == Cut(1, 6)
    assert temporal_min(w, (1, 7)) is None
    with pytest.raises(WalkError):
        temporal_context(Walk("1232341"), (2, 4))  # closed but erased piecewise
    with pytest.raises(WalkError):
        temporal_min(w, (0, 0))


def test_adc_time_order_golden():
    w = Walk("34555444678879")
    assert adc(w) == [Cut(3, 4), Cut(2, 4), Cut(6, 7), Cut(5, 7), Cut(1, 7), Cut(10, 11), Cut(9, 12)]
    assert [str(subwalk(w, *c)) for c in adc(w)[:2]] == ["55", "555"]
    assert time_leq(w, (3, 4), (2, 4)) and time_leq(w, (2, 4), (10, 11))
    assert not time_leq(w, (10, 11), (3, 4))
    with pytest.raises(WalkError):
        time_leq(w, (0, 1), (3, 4))


def test_admissibility_examples():
    w = Walk("12324522")
    assert is_admissible(w, (1, 3)) is False  # 2 recurs before the end of 232452
    assert is_admissible(w, (1, 7))
    assert not is_admissible(Walk("123451"), (0, 5))


def test_eadc_golden_members():
    w = Walk("123324441")
    got = {"|".join(str(subwalk(w, *c)) for c in e) for e in eadc(w)}
    assert got == {"33", "44", "444", "2332", "33|44", "33|444", "2332|44", "2332|444"}
    assert len(eadc_n(w, 2)) == 4
    with pytest.raises(WalkError):
        eadc_n(w, 0)


def test_chains_enumerate_subsets():
    assert chains(Walk("1111")) == [(Cut(1, 3),), (Cut(2, 3),), (Cut(2, 3), Cut(1, 3))]
    assert len(chains(Walk("12223445"))) == 7
    assert chains(Walk("12345")) == []


@given(walks())
def test_adc_matches_definition_oracle(w):
    assert set(adc(w)) == adc_oracle(w)


@given(walks())
def test_eadc_matches_brute_force(w):
    assert eadc(w) == sorted(eadc_oracle(w), key=lambda f: (len(f), f))


@given(walks())
def test_time_order_is_total_and_sorted(w):
    cuts = adc(w)
    for i, c in enumerate(cuts):
        for d in cuts[i + 1:]:
            assert time_leq(w, c, d) and not time_leq(w, d, c)


@given(walks())
def test_primitives_are_self_avoiding_walks_and_polygons(w):
    assert (adc(w) == []) == (classify(w) in ("SAW", "SAP"))
