import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexmono import oracle
from lexmono.core import CofiniteMonotoneMap, eps, idempotent_on, identity, translation
from lexmono.errors import DomainError
from lexmono.product import Element, LexPoint, identity_el, inverse_el
from lexmono.structure import (IdempotentFinset, d_related, dclass_witness, descend_chain,
                               from_finset, h_related, l_related, natural_leq_el, order_iso,
                               r_related, to_finset, upset)

from conftest import element_tuples, elements, idempotent_maps


def idem(n, *pts):
    return from_finset(IdempotentFinset(n, frozenset(LexPoint(*p) for p in pts)))


def test_green_examples():
    a, b = Element.of(eps(0)), Element.of(translation(1))
    assert r_related(a, b) and not l_related(a, b)
    assert h_related(a, a)
    assert d_related(a, b)
    with pytest.raises(DomainError):
        r_related(a, identity_el(2))


@settings(max_examples=300)
@given(element_tuples(2))
def test_d_related_is_earned(t):
    # d_related says yes; back it with an explicit a with a a^-1 = e, a^-1 a = f.
    a, b = t
    assert d_related(a, b)
    e, f = a * inverse_el(a), b * inverse_el(b)
    x, y = dclass_witness(e, f)
    assert x * y == e and y * x == f


@settings(max_examples=300)
@given(element_tuples(3))
def test_green_coherence(t):
    a, b, c = t
    for rel in (r_related, l_related, h_related):
        assert rel(a, a)
        assert rel(a, b) == rel(b, a)
        if rel(a, b) and rel(b, c):
            assert rel(a, c)
    assert h_related(a, b) == (r_related(a, b) and l_related(a, b))
    # R-class means equal a a^-1
    assert r_related(a, b) == (a * inverse_el(a) == b * inverse_el(b))


def test_order_iso():
    a = order_iso([{0}], [{5}], [0])
    assert a == Element.of(CofiniteMonotoneMap((0,), (5,), 0))
    table = oracle.tabulate((0,), (5,), 0, -20, 20)[0]
    assert 0 not in table and 5 not in table.values()
    assert all(table[x] < table[y] for x, y in zip(sorted(table), sorted(table)[1:]))
    assert order_iso([()], [()], [4]) == Element.of(translation(4))
    hs = {order_iso([{0}], [{5}], [k]) for k in range(-3, 4)}
    assert len(hs) == 7 and all(h_related(x, a) for x in hs)


def test_dclass_witness_examples():
    e, f = idem(1, (1, 0)), idem(1, (1, 5))
    a, b = dclass_witness(e, f)
    assert a == Element.of(CofiniteMonotoneMap((0,), (5,), 0))
    assert a * b == e and b * a == f
    a, b = dclass_witness(identity_el(1), identity_el(1), [3])
    assert a == Element.of(translation(3)) and a * b == identity_el(1)
    with pytest.raises(DomainError):
        dclass_witness(Element.of(eps(0)), identity_el(1))


@settings(max_examples=200)
@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(elements(n=n, comps=idempotent_maps()), elements(n=n, comps=idempotent_maps()),
                        st.lists(st.integers(-3, 3), min_size=n, max_size=n))))
def test_dclass_witness_exact(t):
    e, f, shifts = t
    a, b = dclass_witness(e, f, shifts)
    assert a * b == e and b * a == f


def test_upset_sizes():
    assert upset(identity_el(2)) == {identity_el(2)}
    assert len(upset(idem(1, (1, 0)))) == 2
    assert len(upset(idem(1, (1, 0), (1, 3)))) == 4


def test_upset_cardinality_law():
    pool = [(1, 0), (1, 2), (2, -1), (2, 4), (3, 0), (3, 1)]
    for r in range(len(pool) + 1):
        for pts in itertools.combinations(pool, r):
            e = idem(3, *pts)
            up = upset(e)
            assert len(up) == 2 ** r
            assert all(natural_leq_el(e, f) for f in up)


def test_descend_chain():
    chain = descend_chain(identity_el(1), 3)
    assert [len(to_finset(e).excluded) for e in chain] == [0, 1, 2]
    assert all(natural_leq_el(y, x) and x != y for x, y in zip(chain, chain[1:]))
    long = descend_chain(idem(2, (1, 0), (2, 3)), 40)
    sizes = [len(to_finset(e).excluded) for e in long]
    assert sizes == list(range(2, 42))
    with pytest.raises(DomainError):
        descend_chain(Element.of(eps(0)), 2)


def test_finset_examples():
    assert to_finset(identity_el(2)).excluded == frozenset()
    e, f = idem(1, (1, 0)), idem(1, (1, 3))
    assert to_finset(e * f) == to_finset(e) | to_finset(f)
    assert to_finset(e * f).excluded == {(1, 0), (1, 3)}
    with pytest.raises(DomainError):
        to_finset(Element.of(eps(0)))


@settings(max_examples=200)
@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(elements(n=n, comps=idempotent_maps()), elements(n=n, comps=idempotent_maps()))))
def test_finset_is_semilattice_iso(t):
    e, f = t
    assert from_finset(to_finset(e)) == e
    assert to_finset(e * f) == to_finset(e) | to_finset(f)
    assert natural_leq_el(e, f) == (e * f == e)
