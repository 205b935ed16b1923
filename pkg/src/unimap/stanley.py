"""Stanley character polynomials through free cumulants.

``R_k`` sums over plane trees with ``k - 1`` edges whose root is black and
whose vertices carry labels in ``1..r`` with ``label(black) >= label(white)``
along every edge.  A white vertex labelled ``i`` weighs ``p_i``, a black one
``q_i``.  Then ``F_n = D(R_{n+1}) / 2^(n+1)``.
"""

from fractions import Fraction
from functools import lru_cache

from .counting import cperm_count, falling
from .ctrees import plane_trees
from .poly import SparsePoly


def _nested(t):
    def shape(v):
        return tuple(shape(c) for c in t.children[v])
    return shape(1)


def _padd(a, b):
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + c
    return out


def _pmul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return out


def free_cumulant_R(k, r):
    """``R_k`` in the variables ``p1..pr, q1..qr``."""
    if k < 2 or r < 1:
        raise ValueError("need k >= 2 and r >= 1")
    # exponent vectors (p1..pr, q1..qr) internally, SparsePoly at the end
    unit = [tuple(int(i == j) for j in range(2 * r)) for i in range(2 * r)]
    cache = {}

    def table(shape, black):
        # table[a] = generating polynomial of the subtree with root label a + 1
        key = (shape, black)
        if key in cache:
            return cache[key]
        # children of a black vertex labelled a need labels <= a, of a
        # white one labels >= a: prefix (resp. suffix) sums
        sums = []
        for c in shape:
            sub = table(c, not black)
            acc, run = [], {}
            for s in (sub if black else reversed(sub)):
                run = _padd(run, s)
                acc.append(run)
            sums.append(acc if black else acc[::-1])
        out = []
        for a in range(r):
            poly = {unit[a + r if black else a]: 1}
            for acc in sums:
                poly = _pmul(poly, acc[a])
            out.append(poly)
        cache[key] = out
        return out

    total = {}
    for t in plane_trees(k - 1):
        for poly in table(_nested(t), True):
            total = _padd(total, poly)
    names = [f"p{i + 1}" for i in range(r)] + [f"q{i + 1}" for i in range(r)]
    return SparsePoly({tuple(zip(names, m)): c for m, c in total.items()})


@lru_cache(maxsize=None)
def _d_power(k):
    # D(x^k) as {exponent: coefficient}
    return {k - 2 * g: cperm_count(g, k) for g in range(k // 2 + 1) if cperm_count(g, k)}


def d_operator(poly):
    """Apply ``x^k -> sum_g c_g(k) x^(k-2g)`` to each variable of each monomial."""
    out = {}
    for mono, c in poly.terms.items():
        partial = {(): c}
        for v, e in mono:
            nxt = {}
            for m, cm in partial.items():
                for e2, cd in _d_power(e).items():
                    m2 = m + ((v, e2),) if e2 else m
                    nxt[m2] = nxt.get(m2, 0) + cm * cd
            partial = nxt
        for m, cm in partial.items():
            out[m] = out.get(m, 0) + cm
    return SparsePoly(out)


def stanley_F(n, r):
    """``F_n`` restricted to ``p1..pr, q1..qr``."""
    if n < 1:
        raise ValueError("need n >= 1")
    return d_operator(free_cumulant_R(n + 1, r)).exact_div(2 ** (n + 1))


def young_diagram(p, q):
    """Partition with ``p_i`` rows of length ``q_i + ... + q_r``, and its size."""
    if len(p) != len(q):
        raise ValueError("p and q must have the same length")
    rows = []
    for i, pi in enumerate(p):
        rows += [sum(q[i:])] * pi
    lam = tuple(x for x in rows if x)
    size = sum(p[i] * q[j] for i in range(len(p)) for j in range(i, len(q)))
    assert size == sum(lam)
    return lam, size


def _values(p, q):
    vals = {f"p{i + 1}": x for i, x in enumerate(p)}
    vals.update({f"q{i + 1}": x for i, x in enumerate(q)})
    return vals


def character_eval(n, p, q, poly=None):
    """Normalised character of the ``n``-cycle on the diagram of ``(p, q)``.

    The map sum is evaluated at ``(p, -q)`` and multiplied by ``(-1)^n``,
    the sign convention under which it equals ``L(L-1)...(L-n+1)`` times
    the normalised character.
    """
    _, size = young_diagram(p, q)
    if size < n:
        return Fraction(0)
    if poly is None:
        poly = stanley_F(n, len(p))
    value = (-1) ** n * poly.evaluate(_values(p, [-x for x in q]))
    return Fraction(value, falling(size, n))
