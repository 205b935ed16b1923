from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimap import oracle
from unimap.counting import narayana
from unimap.poly import SparsePoly
from unimap.stanley import (character_eval, d_operator, free_cumulant_R, stanley_F,
                            young_diagram)

x = SparsePoly.var("x")
p1, p2, q1, q2 = (SparsePoly.var(v) for v in ("p1", "p2", "q1", "q2"))


def test_d_operator():
    assert d_operator(x) == 2 * x
    assert d_operator(x ** 2) == 4 * x ** 2
    assert d_operator(x ** 3) == 8 * x ** 3 + 4 * x


@given(st.integers(1, 9))
def test_d_operator_parity(k):
    out = d_operator(x ** k)
    assert all((k - dict(m).get("x", 0)) % 2 == 0 for m in out.terms)


def test_r2():
    assert free_cumulant_R(2, 2) == q1 * p1 + q2 * p1 + q2 * p2


@pytest.mark.parametrize("k", range(2, 7))
def test_r_narayana(k):
    # one labelling per tree when r = 1: q1^black p1^white weighted by Narayana numbers
    poly = free_cumulant_R(k, 1)
    for mono, c in poly.terms.items():
        e = dict(mono)
        assert c == narayana(e["q1"], e["p1"], k - 1)
    assert len(poly.terms) == k - 1


def test_f1_is_r2():
    assert stanley_F(1, 3) == free_cumulant_R(2, 3)


@pytest.mark.parametrize("n,r", [(1, 2), (2, 2), (3, 2), (2, 3), (4, 1)])
def test_f_against_map_sum(n, r):
    assert stanley_F(n, r) == oracle.stanley_brute(n, r)


def test_printing_order():
    assert str(stanley_F(1, 1)) == "1 * p1 q1"


def test_young_diagram():
    assert young_diagram((1, 2), (3, 1)) == ((4, 1, 1), 6)


@pytest.mark.parametrize("L", range(1, 9))
def test_trivial_representation(L):
    for n in range(1, L + 1):
        assert character_eval(n, (1,), (L,)) == 1


def test_n_equals_one():
    assert character_eval(1, (2, 1), (1, 3)) == 1


def test_square_diagram():
    # lambda = (2, 2): normalised transposition character is 0
    assert character_eval(2, (2,), (2,)) == 0
    assert character_eval(3, (2,), (2,)) == oracle.normalized_cycle_character((2, 2), 3)


@given(st.lists(st.integers(1, 2), min_size=1, max_size=3), st.data())
def test_against_murnaghan_nakayama(p, data):
    q = data.draw(st.lists(st.integers(0, 2), min_size=len(p), max_size=len(p)))
    lam, size = young_diagram(p, q)
    if size == 0:
        return
    n = data.draw(st.integers(1, min(size, 5)))
    assert character_eval(n, p, q) == oracle.normalized_cycle_character(lam, n)


def test_small_diagram_is_zero():
    assert character_eval(4, (1,), (2,)) == Fraction(0)
