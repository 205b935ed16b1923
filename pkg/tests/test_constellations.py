from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimap import oracle
from unimap.constellations import (constellation_length_count, corollary_check, d_numbers,
                                   feasible_lengths, induction_check, multitype_genus,
                                   prickly_count, prickly_count_enumerated_form,
                                   ps_count_m3, qc_count, refined_c, s_poly,
                                   _circle_terms)
from unimap.counting import a_factor, partitions
from unimap.maps import DomainError
from math import factorial


def test_s_poly():
    for lam in [(1,), (3, 1), (2, 2, 1)]:
        assert s_poly(lam, 0) == factorial(len(lam) - 1)
    assert s_poly((3,), 1) == Fraction(2, 3)


def test_multitype_genus():
    assert multitype_genus((2,), (2,), (2,)) == (2, 1)
    with pytest.raises(DomainError):
        multitype_genus((2,), (1, 1), (2,))
    with pytest.raises(DomainError):
        multitype_genus((2,), (3,), (2,))


def test_ps_planar():
    assert ps_count_m3((1,), (1,), (1,)) == 1
    for l1 in partitions(4):
        for l2 in partitions(4):
            for l3 in partitions(4):
                if len(l1) + len(l2) + len(l3) == 9:
                    want = Fraction(16 * factorial(len(l1) - 1) * factorial(len(l2) - 1)
                                    * factorial(len(l3) - 1),
                                    a_factor(l1) * a_factor(l2) * a_factor(l3))
                    assert ps_count_m3(l1, l2, l3) == want


@pytest.mark.parametrize("n", range(1, 5))
def test_ps_against_factorizations(n):
    rep = oracle.enumerate_factorizations(n)
    for key, c in rep.buckets["multitype"].items():
        assert ps_count_m3(*key) == c
    assert rep.total == factorial(n) ** 2


def test_qc_small():
    assert qc_count((1,), (1,), (1,)) == 2


@pytest.mark.parametrize("n", range(1, 4))
def test_qc_planar_against_rotation_systems(n):
    rep = oracle.enumerate_quasi_constellations(n)
    cyc = oracle.enumerate_quasi_constellations(n, cyclic_only=True)
    for key, c in rep.buckets["multitype"].items():
        if multitype_genus(*key)[1] == 0:
            assert qc_count(*key) == c == 2 ** n * ps_count_m3(*key)
    for key, c in cyc.buckets["multitype"].items():
        assert ps_count_m3(*key) == c


@pytest.mark.xfail(strict=True, reason="the quasi-constellation sum overcounts at positive genus")
def test_qc_positive_genus_against_rotation_systems():
    rep = oracle.enumerate_quasi_constellations(2)
    assert rep.buckets["multitype"][(2,), (2,), (2,)] == 2
    assert qc_count((2,), (2,), (2,)) == 2


def test_qc_can_be_fractional():
    vals = [qc_count(a, b, c) for a in partitions(3) for b in partitions(3) for c in partitions(3)
            if len(a) + len(b) + len(c) in (3, 5)]
    assert any(isinstance(v, Fraction) and v.denominator > 1 for v in vals)


def test_prickly_planar_and_domain():
    # g0 = 0: both powers of two agree
    assert prickly_count((1, 1), (2,), (1, 1), 0) == prickly_count_enumerated_form((1, 1), (2,), (1, 1), 0)
    with pytest.raises(DomainError):
        prickly_count((2,), (2,), (2,), 0)


@pytest.mark.parametrize("n", range(1, 5))
def test_prickly_enumerated_form(n):
    for (d1, d2, d3, g0), _ in oracle.enumerate_prickly(n).items():
        assert oracle.prickly_labelled(n, d1, d2, d3, g0) == prickly_count_enumerated_form(d1, d2, d3, g0)


@pytest.mark.xfail(strict=True, reason="closed form carries 2^n where enumeration gives 2^(n-g0)")
def test_prickly_closed_form_figure_instance():
    I, J, L = (1, 1, 1, 3), (2, 2, 1, 1), (6,)
    assert oracle.prickly_labelled(6, I, J, L, 2) == prickly_count(I, J, L, 2)


@pytest.mark.slow
def test_prickly_figure_instance_enumerated():
    I, J, L = (1, 1, 1, 3), (2, 2, 1, 1), (6,)
    assert oracle.prickly_labelled(6, I, J, L, 2) == prickly_count_enumerated_form(I, J, L, 2) == 138240


def test_induction_planar_vacuous():
    ok, lhs, rhs = induction_check(3, 3, 1, 3)
    assert ok and lhs == rhs == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_induction_corrected(n):
    for ell in feasible_lengths(n):
        assert induction_check(*ell, n, corrected=True)[0]


@pytest.mark.xfail(strict=True, reason="square-vertex coefficient n(n-1)^2/2 only holds for c/n")
def test_induction_as_stated():
    assert all(induction_check(*ell, n)[0] for n in range(1, 6) for ell in feasible_lengths(n))


def test_induction_as_stated_holds_for_c_over_n():
    # the stated coefficient is right once every c is divided by its size
    def cn(l1, l2, l3, n):
        return Fraction(constellation_length_count(l1, l2, l3, n), n)
    for n in range(2, 6):
        for l1, l2, l3 in feasible_lengths(n):
            g = (2 * n + 1 - l1 - l2 - l3) // 2
            rhs = Fraction(n * (n - 1) ** 2, 2) * cn(l1, l2, l3, n - 1)
            rhs += _circle_terms(cn, l1, l2, l3, n)
            assert 2 * g * cn(l1, l2, l3, n) == rhs


@pytest.mark.parametrize("n", range(1, 6))
def test_refined_sums_to_total(n):
    for ell in feasible_lengths(n):
        g = (2 * n + 1 - sum(ell)) // 2
        assert sum(refined_c(*ell, n, g0, True) for g0 in range(g + 1)) == \
            constellation_length_count(*ell, n)


@pytest.mark.parametrize("n", range(1, 6))
def test_corollary_corrected(n):
    for ell in feasible_lengths(n):
        g = (2 * n + 1 - sum(ell)) // 2
        for g0 in range(g + 1):
            assert corollary_check(*ell, n, g0, corrected=True)[0]


@pytest.mark.xfail(strict=True, reason="stated constant n/(4^g0 (n-g0)) does not match")
def test_corollary_as_stated():
    for n in range(1, 6):
        for ell in feasible_lengths(n):
            g = (2 * n + 1 - sum(ell)) // 2
            for g0 in range(g + 1):
                assert corollary_check(*ell, n, g0)[0]


def test_d_numbers_top_genus_planar_only():
    # g0 = g leaves a planar constellation of size n - g
    assert d_numbers(1, 1, 1, 1, 0) == 8
    assert d_numbers(1, 1, 1, 2, 1) == 1 * d_numbers(1, 1, 1, 1, 0)
