"""Counting formulas for unicellular 3-constellations and relatives.

A multi-type is a triple of partitions of the same ``n``; its genus is
``(2n + 1 - l1 - l2 - l3) / 2``.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .counting import a_factor, cperm_count_by_cycles, partitions
from .maps import DomainError


def s_poly(lam, g):
    """``S_g(lambda)`` as an exact rational."""
    ell = len(lam)
    total = Fraction(0)
    for ps in _weak(g, ell):
        total += prod((Fraction(comb(x - 1, 2 * p), 2 * p + 1) for x, p in zip(lam, ps)),
                      start=Fraction(1))
    return factorial(ell + 2 * g - 1) * total


def _weak(total, k):
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak(total - first, k - 1):
            yield (first,) + rest


def multitype_genus(l1, l2, l3):
    n = sum(l1)
    if sum(l2) != n or sum(l3) != n:
        raise DomainError("the three partitions must have the same size")
    twice = 2 * n + 1 - len(l1) - len(l2) - len(l3)
    if twice < 0 or twice % 2:
        raise DomainError("2n + 1 - l1 - l2 - l3 must be even and nonnegative")
    return n, twice // 2


def _ps_sum(l1, l2, l3, extra, integral=True):
    n, g = multitype_genus(l1, l2, l3)
    lams = (l1, l2, l3)
    total = Fraction(0)
    for g0, g1, g2, g3 in _weak(g, 4):
        binoms = prod(comb(n - len(lam) - 2 * gi, g0) if n - len(lam) - 2 * gi >= 0 else 0
                      for lam, gi in zip(lams, (g1, g2, g3)))
        if not binoms:
            continue
        term = factorial(g0) ** 2 * binoms
        term *= s_poly(l1, g1) * s_poly(l2, g2) * s_poly(l3, g3)
        total += extra(n, g0) * term
    val = total * n * n / (4 ** g * a_factor(l1) * a_factor(l2) * a_factor(l3))
    if val.denominator == 1:
        return val.numerator
    if integral:
        raise ArithmeticError(f"non-integral count {val}")
    return val


def ps_count_m3(l1, l2, l3):
    """Rooted unicellular 3-constellations with multi-type ``(l1, l2, l3)``."""
    return _ps_sum(tuple(l1), tuple(l2), tuple(l3), lambda n, g0: 1)


def qc_count(l1, l2, l3):
    """The quasi-constellation sum: the constellation sum with the extra
    factor ``n / (n - g0) 2^(n - g0)`` in each term.

    Returns an int, or a Fraction when the sum is not integral.  At genus 0
    it is ``2^n ps_count_m3``; at positive genus it does not always match
    exhaustive counts (see the oracle).
    """
    return _ps_sum(tuple(l1), tuple(l2), tuple(l3),
                   lambda n, g0: Fraction(n * 2 ** (n - g0), n - g0), integral=False)


def prickly_count(I, J, L, g0):
    """Labelled prickly planar 3-quasi-constellations, as the closed form states it.

    The closed form carries ``2^n``; exhaustive counts (see the oracle)
    give ``2^(n - g0)`` instead, see :func:`prickly_count_enumerated_form`.
    """
    n = sum(I)
    if sum(J) != n or sum(L) != n:
        raise DomainError("compositions must have the same size")
    lens = (len(I), len(J), len(L))
    if sum(lens) != 2 * n - 2 * g0 + 1:
        raise DomainError("l1 + l2 + l3 must equal 2n - 2 g0 + 1")
    return (n * (n - g0) * 2 ** n * prod(comb(n - x, g0) for x in lens)
            * prod(factorial(x - 1) for x in lens))


def prickly_count_enumerated_form(I, J, L, g0):
    """Same count with the power of two the proof of the closed form yields."""
    return prickly_count(I, J, L, g0) // 2 ** g0


# --- counts by numbers of vertices -----------------------------------------

def _partitions_of_length(n, ell):
    return [lam for lam in partitions(n) if len(lam) == ell]


def _length_genus(l1, l2, l3, n):
    twice = 2 * n + 1 - l1 - l2 - l3
    if twice < 0 or twice % 2 or min(l1, l2, l3) < 1 or max(l1, l2, l3) > n:
        return None
    return twice // 2


@lru_cache(maxsize=None)
def constellation_length_count(l1, l2, l3, n):
    """``c_{l1,l2,l3}(n)``: sum of :func:`ps_count_m3` over multi-types."""
    if _length_genus(l1, l2, l3, n) is None:
        return 0
    return sum(ps_count_m3(a, b, c)
               for a in _partitions_of_length(n, l1)
               for b in _partitions_of_length(n, l2)
               for c in _partitions_of_length(n, l3))


def _circle_terms(f, l1, l2, l3, n, *rest):
    total = 0
    for h in range(1, n + 1):
        total += comb(l1 + 2 * h, 2 * h + 1) * f(l1 + 2 * h, l2, l3, n, *rest)
        total += comb(l2 + 2 * h, 2 * h + 1) * f(l1, l2 + 2 * h, l3, n, *rest)
        total += comb(l3 + 2 * h, 2 * h + 1) * f(l1, l2, l3 + 2 * h, n, *rest)
    return total


def _square_coeff(n, corrected):
    # gluing three square leaves: n(n-1)^2/2 good triples per rooted object of
    # size n-1; rerooting among n instead of n-1 corners adds n/(n-1)
    return Fraction(n * n * (n - 1), 2) if corrected else Fraction(n * (n - 1) ** 2, 2)


def induction_check(l1, l2, l3, n, corrected=False):
    """Check the two-family induction; returns ``(ok, lhs, rhs)``.

    The genus is taken from ``l1 + l2 + l3 + 2g = 2n + 1``.  With
    ``corrected=False`` the square-vertex term is ``n(n-1)^2/2 c(n-1)``;
    that form only holds for ``c(n)/n``.  ``corrected=True`` uses
    ``n^2(n-1)/2 c(n-1)``, which holds for ``c(n)`` itself.
    """
    g = _length_genus(l1, l2, l3, n)
    if g is None:
        return True, 0, 0
    lhs = 2 * g * constellation_length_count(l1, l2, l3, n)
    rhs = _square_coeff(n, corrected) * constellation_length_count(l1, l2, l3, n - 1)
    rhs += _circle_terms(constellation_length_count, l1, l2, l3, n)
    return lhs == rhs, lhs, rhs


@lru_cache(maxsize=None)
def refined_c(l1, l2, l3, n, g0, corrected=False):
    """``c_{l1,l2,l3}(n; g0)`` from the refined induction.

    The induction lowers the genus; at genus 0 the initial condition is
    ``c(n; g0) = [g0 == 0] c_{l1,l2,l3}(n)``.
    """
    g = _length_genus(l1, l2, l3, n)
    if g is None or g0 < 0:
        return Fraction(0)
    if g == 0:
        return Fraction(constellation_length_count(l1, l2, l3, n) if g0 == 0 else 0)
    rhs = _square_coeff(n, corrected) * refined_c(l1, l2, l3, n - 1, g0 - 1, corrected)
    rhs += _circle_terms(refined_c, l1, l2, l3, n, g0, corrected)
    return rhs / (2 * g)


@lru_cache(maxsize=None)
def planar_decorated(l1, l2, l3, m):
    """Planar 3-constellations of size ``m`` with a C-permutation of the
    circle vertices of each color having ``l1``, ``l2``, ``l3`` cycles."""
    if m < 1:
        return 0
    total = 0
    for k1 in range(l1, m + 1):
        for k2 in range(l2, m + 1):
            k3 = 2 * m + 1 - k1 - k2
            if not l3 <= k3 <= m:
                continue
            deco = (cperm_count_by_cycles(k1, l1) * cperm_count_by_cycles(k2, l2)
                    * cperm_count_by_cycles(k3, l3))
            if deco:
                total += constellation_length_count(k1, k2, k3, m) * deco
    return total


def d_numbers(l1, l2, l3, n, g0):
    """``d_{l1,l2,l3}(n; g0)``: decorated planar constellations of size
    ``n - g0`` with ``g0`` unordered triples of square leaves.

    Leaf triples are attached one at a time; the ``j``-th triple has
    ``(n - j)^3`` corner choices when counted from the top.
    """
    if g0 < 0 or g0 > n:
        return 0
    placements = prod((n - j) ** 3 for j in range(1, g0 + 1))
    q, r = divmod(placements, factorial(g0))
    assert r == 0
    return q * planar_decorated(l1, l2, l3, n - g0)


def corollary_factor(n, g0, corrected=False):
    """Constant ``k`` in ``c(n; g0) = k d(n; g0)``."""
    if corrected:
        return Fraction(n * n, 2 ** (2 * n + 1) * (n - g0) ** 2)
    return Fraction(n, 4 ** g0 * (n - g0))


def corollary_check(l1, l2, l3, n, g0, corrected=False):
    """Compare ``c(n; g0)`` with ``corollary_factor(n, g0) d(n; g0)``.

    Returns ``(ok, c, rhs)``.  The stated factor ``n / (2^(2 g0) (n - g0))``
    is used unless ``corrected``; the corrected relation pairs the corrected
    induction with ``n^2 / (2^(2n+1) (n - g0)^2)``.
    """
    c = refined_c(l1, l2, l3, n, g0, corrected)
    d = d_numbers(l1, l2, l3, n, g0)
    rhs = corollary_factor(n, g0, corrected) * d if d else Fraction(0)
    return c == rhs, c, rhs


def feasible_lengths(n):
    """Length triples with an integral nonnegative genus at size ``n``."""
    return [(a, b, c) for a in range(1, n + 1) for b in range(1, n + 1)
            for c in range(1, n + 1) if _length_genus(a, b, c, n) is not None]
