"""Sparse multivariate polynomials with exact coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by
variable; variables are strings such as ``"p1"`` or ``"q12"``.
"""

import re
from fractions import Fraction
from functools import lru_cache

_VAR = re.compile(r"([A-Za-z]+)(\d*)$")


@lru_cache(maxsize=None)
def var_key(name):
    m = _VAR.match(name)
    if not m:
        return (name, 0)
    return (m.group(1), int(m.group(2) or 0))


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items(), key=_item_key))


def _item_key(t):
    return var_key(t[0])


class SparsePoly:
    """Dictionary from monomials to nonzero coefficients.

    >>> x = SparsePoly.var("x")
    >>> str((x + 1) * (x + 1))
    '1 * x^2 + 2 * x + 1'
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for mono, c in (terms or {}).items():
            if c:
                mono = tuple(sorted(((v, e) for v, e in mono if e), key=_item_key))
                self.terms[mono] = self.terms.get(mono, 0) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    def _coerce(self, other):
        return other if isinstance(other, SparsePoly) else SparsePoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = SparsePoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = {m: c for m, c in terms.items() if c}
        return p

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"SparsePoly({str(self)!r})"

    def exact_div(self, d):
        """Divide every coefficient by the integer ``d``; fails if not exact."""
        out = {}
        for m, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} of {_fmt_mono(m)} not divisible by {d}")
            out[m] = q
        return SparsePoly._raw(out)

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m}, key=var_key)

    def coefficient(self, mono):
        if isinstance(mono, dict):
            mono = tuple(sorted(mono.items(), key=_item_key))
        return self.terms.get(tuple(mono), 0)

    def evaluate(self, values):
        """Substitute numbers for variables; missing variables count as 0."""
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= values.get(v, 0) ** e
            total += term
        return Fraction(total) if isinstance(total, Fraction) else total

    def total_degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def sorted_terms(self, variables=None):
        """Terms in graded-lex order, largest first."""
        if variables is None:
            variables = self.variables()
        idx = {v: i for i, v in enumerate(variables)}

        def key(item):
            vec = [0] * len(variables)
            for v, e in item[0]:
                vec[idx[v]] = e
            return (sum(vec), vec)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            parts.append(f"{c} * {_fmt_mono(m)}" if m else str(c))
        return " + ".join(parts).replace("+ -", "- ")


def _fmt_mono(m):
    return " ".join(v if e == 1 else f"{v}^{e}" for v, e in m)
