import pytest
from hypothesis import given, settings

from lexmono import oracle
from lexmono.core import CofiniteMonotoneMap, compose, eps, identity, inverse, translation
from lexmono.errors import DomainError, ParseError
from lexmono.generators import (Budget, GenSymbol, GenWord, Kind, antiiso, budget_slice,
                                closure_search, eval_word, factor_into_generators, factor_O,
                                length_budget, parse_word, skip_shift_generators)
from lexmono.product import Element, embed_factor, identity_el, inverse_el, is_unit

from conftest import element_tuples, elements, maps

S = translation


def test_eval_word_examples():
    assert eval_word(parse_word("S(1,1) S(-1,1)", 1)) == identity_el(1)
    assert eval_word(parse_word("E(0,1) S(1,2)", 2)) == Element.of(eps(0), S(1))
    assert eval_word(parse_word("E(0,1) E(0,1)", 1)) == Element.of(CofiniteMonotoneMap((), (1, 2), 0))
    assert eval_word(parse_word("", 3)) == identity_el(3)
    assert eval_word(parse_word("E(0) Einv(0)", 1)) == identity_el(1)


def test_eval_word_matches_oracle():
    w = parse_word("E(0,1) S(1,2) Einv(3,2) E(-2,1)", 2)
    want = oracle.from_element(identity_el(2), 30)
    for s in w.syms:
        x = oracle.from_element(embed_factor(s.to_map(), s.j, 2), 30)
        want = oracle.compose_windowed(want, oracle.restrict(x, want.W))
    assert want.W > 20
    assert oracle.agree(want, eval_word(w))


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_word("E(0) X(1)", 1)
    assert exc.value.token == 1
    with pytest.raises(ParseError):
        parse_word("E(0,3)", 2)
    with pytest.raises(ParseError):
        parse_word("E(0)", 2)
    with pytest.raises(DomainError):
        GenWord(1, (GenSymbol(Kind.EPS, 0, 2),))


def test_word_text_round_trip():
    for text, n in [("E(0) Einv(-3) S(2)", 1), ("E(0,1) S(-1,2) Einv(4,3)", 3)]:
        assert str(parse_word(text, n)) == text


def test_factor_O_examples():
    a = Element.of(CofiniteMonotoneMap((1,), (4,), 2))
    b, g = factor_O(a)
    assert b == Element.of(CofiniteMonotoneMap((1,), (), 0))
    assert g == Element.of(CofiniteMonotoneMap((), (4,), 2))
    assert b * g == a
    assert factor_O(identity_el(2)) == (identity_el(2), identity_el(2))
    b, _ = factor_O(Element.of(eps(3), S(2)))
    assert b == identity_el(2)


@settings(max_examples=300)
@given(elements())
def test_factor_O_shape(a):
    b, g = factor_O(a)
    assert all(not x.R for x in b.comps) and all(not x.D for x in g.comps)
    assert b * g == a


def test_factor_examples():
    assert eval_word(factor_into_generators(Element.of(S(5)))) == Element.of(S(5))
    assert str(factor_into_generators(Element.of(eps(0)))) == "E(0)"
    two = Element.of(CofiniteMonotoneMap((), (1, 2), 0))
    assert str(factor_into_generators(two)) == "E(0) E(0)"


@settings(max_examples=500)
@given(elements())
def test_factor_round_trip(a):
    w = factor_into_generators(a)
    assert eval_word(w) == a
    assert len(w) <= length_budget(a)
    assert all(s.kind is not Kind.SHIFT or abs(s.k) == 1 for s in w.syms)


def test_antiiso_examples():
    assert antiiso(eps(0)) == CofiniteMonotoneMap((1,), (), 0)
    assert antiiso(S(4)) == S(-4)
    x, y = eps(0), eps(2)
    assert antiiso(compose(x, y)) == compose(antiiso(y), antiiso(x))
    with pytest.raises(DomainError):
        antiiso(inverse(eps(0)))


@settings(max_examples=200)
@given(maps(), maps())
def test_antiiso_law(x, y):
    x, y = CofiniteMonotoneMap((), x.R, x.c), CofiniteMonotoneMap((), y.R, y.c)
    assert antiiso(compose(x, y)) == compose(antiiso(y), antiiso(x))


def test_closure_reaches_budget_slice():
    budget = Budget(1, 2, 2)
    assert closure_search(skip_shift_generators(1), budget) == budget_slice(1, budget)


def test_closure_letters_mode_two_levels():
    budget = Budget(1, 1, 1)
    got = closure_search(skip_shift_generators(2), budget, pairwise=False)
    assert got == budget_slice(2, budget)


def test_closure_of_units():
    got = closure_search([Element.of(S(1))], Budget(2, 2, 2))
    assert got == {Element.of(S(k)) for k in range(-2, 3)}
    assert all(is_unit(x) for x in got)


def test_closure_includes_inverses():
    got = closure_search([Element.of(eps(0))], Budget(2, 0, 3))
    assert Element.of(inverse(eps(0))) in got
    assert all(x.comps[0].c == 0 for x in got)


def test_budget():
    b = Budget(1, 1, 1)
    assert b.admits(Element.of(eps(0)))
    assert not b.admits(Element.of(S(2)))
    assert not b.admits(Element.of(eps(1)))
    assert len(budget_slice(1, b)) == 4 * 4 * 3
