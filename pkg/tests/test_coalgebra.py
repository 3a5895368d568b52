import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import delta_cp_oracle
from strategies import forests, walks
from walkhopf import (
    UNIT,
    Forest,
    LinComb,
    MultisetForest,
    Tensor,
    Walk,
    WalkError,
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
from walkhopf import coalgebra as co
from walkhopf.parsing import parse_forest


def F(text):
    return parse_forest(text)


def hopf_terms(*pairs):
    return LinComb({Tensor((F(a), F(b))): 1 for a, b in pairs})


def cp_terms(*triples):
    return LinComb({Tensor(tuple(Walk(x) for x in t)): 1 for t in triples})


W = Walk("1233234441")


def test_delta_cp_golden():
    assert delta_cp(W) == cp_terms(
        ("123323441", "44"), ("12332341", "444"), ("123234441", "33"), ("1234441", "2332"))
    assert delta_cp(Walk("12345")) == 0
    assert delta_cp(Walk("123451")) == 0


def test_delta_h_golden():
    expected = hopf_terms(
        ("()", "1233234441"), ("1233234441", "()"),
        ("123323441", "44"), ("12332341", "444"), ("123234441", "33"), ("1234441", "2332"),
        ("12323441", "33|44"), ("1232341", "33|444"), ("123441", "2332|44"), ("12341", "2332|444"))
    assert delta_h(W) == expected


def test_copre_lie_both_sides_golden():
    d = delta_cp(W)
    left = co.apply_at(d, 0, delta_cp)
    right = co.apply_at(d, 1, delta_cp)
    assert left == cp_terms(
        ("12332341", "44", "44"), ("12323441", "33", "44"), ("123441", "2332", "44"),
        ("1232341", "33", "444"), ("12341", "2332", "444"),
        ("12323441", "44", "33"), ("1232341", "444", "33"), ("1234441", "232", "33"),
        ("123441", "44", "2332"), ("12341", "444", "2332"))
    assert right == cp_terms(("12332341", "44", "44"), ("1234441", "232", "33"))
    assert len(co.copre_lie_defect(W)) == 8
    assert co.copre_lie_check(W)


def test_antipode_golden():
    expected = LinComb({
        F("12223445"): -1,
        F("1222345|44"): 1, F("1223445|22"): 1, F("123445|222"): 1,
        F("122345|44|22"): -1, F("123445|22|22"): -1, F("12345|44|222"): -1,
        F("12345|44|22|22"): 1,
    })
    assert antipode_closed(Walk("12223445")) == expected
    assert antipode_recursive(Walk("12223445")) == expected
    assert antipode_recursive(Walk("1111")) == LinComb(
        {F("1111"): -1, F("111|11"): 1, F("11|111"): 1, F("11|11|11"): -1})


def test_antipode_sym_merges_reordered_terms():
    assert antipode_sym(Walk("1111")) == LinComb({
        MultisetForest(F("1111")): -1, MultisetForest(F("11|111")): 2, MultisetForest(F("11|11|11")): -1})


def test_antipode_is_an_antimorphism_on_forests():
    x, y = Walk("121"), Walk("1221")
    lhs = antipode_recursive(Forest([x, y]))
    rhs = co.forest_product(antipode_recursive(y), antipode_recursive(x))
    assert lhs == rhs
    assert antipode_recursive(UNIT) == LinComb.of(UNIT)


def test_half_coproducts_small_cases():
    assert delta_prec(Walk("111")) == hopf_terms(("11", "11"), ("111", "()"))
    assert delta_succ(Walk("111")) == hopf_terms(("()", "111"))
    with pytest.raises(WalkError):
        delta_prec(UNIT)


def test_brace_pieces():
    assert delta_n(W, 2) == LinComb({
        Tensor((Walk(r), F(c))): 1 for r, c in
        (("12323441", "33|44"), ("1232341", "33|444"), ("123441", "2332|44"), ("12341", "2332|444"))})
    assert delta_n(W, 3) == 0
    with pytest.raises(WalkError):
        delta_n(W, 0)


def test_unit_and_trivial_walks():
    assert delta_h(UNIT) == LinComb.of(Tensor((UNIT, UNIT)))
    t = Walk("5")
    assert delta_h(t) == hopf_terms(("5", "()"), ("()", "5"))
    assert antipode_recursive(t) == LinComb.of(F("5"), -1)


@given(walks(max_len=10))
def test_delta_cp_matches_oracle(w):
    expected = LinComb({Tensor((Walk(r), Walk(c))): n for (r, c), n in delta_cp_oracle(w).items()})
    assert delta_cp(w) == expected


@given(walks())
def test_copre_lie(w):
    assert co.copre_lie_check(w)


@given(walks())
def test_coproduct_is_graded_and_counital(w):
    for t in delta_h(w):
        assert t[0].degree + t[1].degree == w.degree
    assert co.counit_check(w)


@given(walks(max_len=8))
def test_coassociative_on_walks(w):
    assert co.coassoc_check(w)


@settings(max_examples=25)
@given(forests(max_words=3, max_len=4))
def test_coassociative_on_forests(f):
    assert co.coassoc_check(f)


@given(walks())
def test_closed_and_recursive_antipodes_agree(w):
    assert antipode_closed(w) == antipode_recursive(w)


@given(walks(max_len=8))
def test_convolution_identities(w):
    assert co.convolution_check(w)


@settings(max_examples=25)
@given(forests(max_words=2, max_len=4))
def test_convolution_identities_on_forests(f):
    assert co.convolution_check(f)


@given(forests(max_words=3, max_len=5).filter(lambda f: len(f) > 0))
def test_codendriform(f):
    assert co.codendriform_check(f)


@given(walks())
def test_brace_recovery_and_first_brace_is_cp(w):
    assert co.brace_prelie_recovery_check(w)
    assert co.delta_1_matches_cp(w)


@given(forests(max_words=3, max_len=5), st.randoms(use_true_random=False))
def test_symmetric_coproduct_ignores_representative(f, rnd):
    g = list(f)
    rnd.shuffle(g)
    assert delta_h_sym(f) == delta_h_sym(Forest(g))
    assert delta_h_sym(MultisetForest(f)) == delta_h_sym(f)
