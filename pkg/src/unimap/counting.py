"""Exact evaluators for the enumeration formulas of unicellular maps.

Everything here is integer or :class:`fractions.Fraction` arithmetic.
Partitions are weakly decreasing tuples, compositions are tuples.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .maps import DomainError


# --- partitions and compositions --------------------------------------------

def partitions(n, max_part=None):
    """Partitions of ``n`` as decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n, k=None):
    """Compositions of ``n`` (into exactly ``k`` parts if given)."""
    if n == 0:
        if k in (None, 0):
            yield ()
        return
    if k == 0:
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first, None if k is None else k - 1):
            yield (first,) + rest


def multiplicities(parts):
    return Counter(parts)


def a_factor(parts):
    """``prod m_i!`` over the multiplicities of ``parts``."""
    return prod(factorial(m) for m in multiplicities(parts).values())


def n_perms_of_type(parts):
    """Number of permutations of ``sum(parts)`` points with cycle type ``parts``."""
    k = sum(parts)
    return factorial(k) // prod(factorial(m) * i ** m for i, m in multiplicities(parts).items())


def falling(x, k):
    return prod(x - j for j in range(k))


def binom_poly(r):
    """Coefficients of ``binom(x, r)`` in powers of ``x`` (list of Fractions)."""
    coeffs = [Fraction(1)]
    for j in range(r):
        # multiply by (x - j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return [c / factorial(r) for c in coeffs]


# --- basic numbers ----------------------------------------------------------

def double_factorial_odd(n):
    """``(2n-1)!!``, equal to 1 at ``n = 0``."""
    return prod(range(1, 2 * n, 2))


def catalan(n):
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def narayana(i, j, n):
    """Bipartite plane trees with ``n`` edges, ``i`` black and ``j`` white vertices."""
    if i + j != n + 1 or i < 1 or j < 1:
        return 0
    return comb(n, i) * comb(n, j) // n


def cperm_count(g, n):
    """``c_g(n)``: C-permutations of genus ``g`` on ``n`` elements."""
    if g < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if g == 0 else 0
    total = 0
    for gamma in partitions(g):
        ell = len(gamma)
        fixed = n - 2 * g - ell
        if fixed < 0:
            continue
        den = factorial(fixed) * prod(factorial(m) * (2 * i + 1) ** m
                                      for i, m in multiplicities(gamma).items())
        total += factorial(n) // den
    return 2 ** (n - 2 * g) * total if n - 2 * g >= 0 else 0


def cperm_count_by_cycles(k, ell):
    """C-permutations on ``k`` elements with exactly ``ell`` cycles."""
    if (k - ell) % 2 or ell < 0:
        return 0
    return cperm_count((k - ell) // 2, k)


def epsilon_lw(g, n):
    """Rooted unicellular maps of genus ``g`` with ``n`` edges (closed form)."""
    if g < 0 or n < 0 or n + 1 - 2 * g <= 0:
        return 0
    s = sum(Fraction(falling(n + 1 - 2 * g, len(gamma)),
                     prod(factorial(m) * (2 * i + 1) ** m
                          for i, m in multiplicities(gamma).items()))
            for gamma in partitions(g))
    val = Fraction(factorial(2 * n), factorial(n) * factorial(n + 1 - 2 * g) * 4 ** g) * s
    assert val.denominator == 1
    return val.numerator


@lru_cache(maxsize=None)
def epsilon_hz(g, n):
    """Same numbers through the three-term recurrence."""
    if g < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if g == 0 else 0
    rhs = 2 * (2 * n - 1) * epsilon_hz(g, n - 1)
    rhs += (n - 1) * (2 * n - 1) * (2 * n - 3) * epsilon_hz(g - 1, n - 2)
    q, r = divmod(rhs, n + 1)
    assert r == 0
    return q


# --- series -----------------------------------------------------------------

@dataclass
class BivariateSeries:
    """Truncated series ``sum c[i, j] x^i y^j`` with ``i <= x_order``, ``j <= y_order``."""

    x_order: int
    y_order: int
    coeffs: dict = field(default_factory=dict)

    def coeff(self, i, j):
        if i > self.x_order or j > self.y_order:
            raise DomainError("coefficient beyond the truncation order")
        return self.coeffs.get((i, j), Fraction(0))


def hz_series(x_order, y_order):
    """``((1+y)/(1-y))^x = exp(x log((1+y)/(1-y)))`` truncated."""
    if x_order < 1 or y_order < 1:
        raise DomainError("orders must be at least 1")
    log = [Fraction(0)] * (y_order + 1)
    for k in range(1, y_order + 1, 2):
        log[k] = Fraction(2, k)
    out = BivariateSeries(x_order, y_order)
    power = [Fraction(1)] + [Fraction(0)] * y_order  # log^i / i!
    for i in range(x_order + 1):
        for j, c in enumerate(power):
            if c:
                out.coeffs[i, j] = c
        nxt = [Fraction(0)] * (y_order + 1)
        for a, ca in enumerate(power):
            if ca:
                for b in range(1, y_order + 1 - a):
                    if log[b]:
                        nxt[a + b] += ca * log[b]
        power = [c / (i + 1) for c in nxt]
    return out


# --- colored and bipartite maps ---------------------------------------------

def colored_count(r, n):
    """``A_r(n)``: unicellular maps with vertices surjectively colored by ``r`` colors."""
    if r < 1 or n < 1:
        return 0
    return double_factorial_odd(n) * 2 ** (r - 1) * comb(n, r - 1)


def vertex_polynomial(n):
    """``{v: A(v; n)}`` from the summation formula."""
    out = Counter()
    for r in range(1, n + 2):
        a = colored_count(r, n)
        for v, c in enumerate(binom_poly(r)):
            out[v] += a * c
    return _integral(out)


def jackson_count(r, s, n):
    """``B_{r,s}(n)``: bipartite maps with surjective b-colors and w-colors."""
    if r < 1 or s < 1 or n < 1 or r + s > n + 1:
        return 0
    return factorial(n) * factorial(n - 1) // (
        factorial(r - 1) * factorial(s - 1) * factorial(n + 1 - r - s))


def bivariate_vertex_polynomial(n):
    """``{(v, w): B(v, w; n)}``, ``v`` black and ``w`` white vertices."""
    out = Counter()
    for r in range(1, n + 1):
        py = binom_poly(r)
        for s in range(1, n + 2 - r):
            b = jackson_count(r, s, n)
            pz = binom_poly(s)
            for v, cy in enumerate(py):
                for w, cz in enumerate(pz):
                    out[v, w] += b * cy * cz
    return _integral(out)


def _integral(counter):
    out = {}
    for k, c in sorted(counter.items()):
        assert c.denominator == 1
        if c:
            out[k] = c.numerator
    return out


def _bipartite_genus(I, J):
    n = sum(I)
    if sum(J) != n:
        raise DomainError("compositions must have the same size")
    twice = n + 1 - len(I) - len(J)
    if twice < 0 or twice % 2:
        raise DomainError("n + 1 - l(I) - l(J) must be even and nonnegative")
    return n, twice // 2


def _refinement_sum(parts, gi):
    # sum over p_1+..+p_l = gi of prod binom(i_r - 1, 2 p_r) / (2 p_r + 1)
    total = Fraction(0)
    for ps in _weak_compositions(gi, len(parts)):
        total += prod((Fraction(comb(i - 1, 2 * p), 2 * p + 1) for i, p in zip(parts, ps)),
                      start=Fraction(1))
    return total


def _weak_compositions(total, k):
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, k - 1):
            yield (first,) + rest


def goupil_schaeffer(I, J):
    """``BiL(I, J)``: labelled bipartite unicellular maps with degree compositions."""
    I, J = tuple(I), tuple(J)
    n, g = _bipartite_genus(I, J)
    ell, m = len(I), len(J)
    total = Fraction(0)
    for g1 in range(g + 1):
        g2 = g - g1
        total += (factorial(ell + 2 * g1 - 1) * factorial(m + 2 * g2 - 1)
                  * _refinement_sum(I, g1) * _refinement_sum(J, g2))
    val = total * n / 4 ** g
    assert val.denominator == 1
    return val.numerator


def bi_count(lam, mu):
    """``Bi(lambda, mu)``: unlabelled version of :func:`goupil_schaeffer`."""
    q, r = divmod(goupil_schaeffer(lam, mu), a_factor(lam) * a_factor(mu))
    assert r == 0
    return q


def morales_vassilieva(I, J):
    """``BiC(I, J)``: colored bipartite unicellular maps."""
    n = sum(I)
    if sum(J) != n:
        raise DomainError("compositions must have the same size")
    h = n + 1 - len(I) - len(J)
    if h < 0:
        raise DomainError("l(I) + l(J) must be at most n + 1")
    return n * factorial(n - len(I)) * factorial(n - len(J)) // factorial(h)


# --- covered maps -----------------------------------------------------------

def covered_count(g1, g2, n):
    """``Cov_{g1,g2}(n)`` by the shuffle sum."""
    return sum(comb(2 * n, 2 * n1) * epsilon_lw(g1, n1) * epsilon_lw(g2, n - n1)
               for n1 in range(n + 1))


def covered_total(g, n):
    return sum(covered_count(g1, g - g1, n) for g1 in range(g + 1))


def bip_count(g, m):
    """Rooted bipartite unicellular maps of genus ``g`` with ``m`` edges."""
    poly = bivariate_vertex_polynomial(m)
    return sum(c for (v, w), c in poly.items() if v + w == m + 1 - 2 * g)


def white_genus_weights(g, n):
    return [sum(narayana(n1 + 1, n - n1 + 1, n + 1)
                * cperm_count(g1, n1 + 1) * cperm_count(g - g1, n - n1 + 1)
                for n1 in range(n + 1))
            for g1 in range(g + 1)]


def white_genus_distribution(g, n):
    """Law of the white genus of a uniform bipartite C-decorated tree."""
    w = white_genus_weights(g, n)
    total = sum(w)
    if total == 0:
        raise DomainError(f"no bipartite C-decorated trees of genus {g} with {n + 1} edges")
    return [Fraction(x, total) for x in w]


def binomial_half(g):
    return [Fraction(comb(g, k), 2 ** g) for k in range(g + 1)]


def total_variation(p, q):
    return sum(abs(a - b) for a, b in zip(p, q)) / 2
