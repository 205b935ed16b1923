"""Fractional bijection between ``2^(n+1)`` copies of unicellular maps and
C-decorated trees, and the uniform sampler built on it.

Every random step goes through a *chooser*: a callable ``choose(k)``
returning an index in ``range(k)``.  Sampling passes a chooser backed by a
:class:`random.Random`; :func:`expand` replays all choice sequences and
returns the exact outcome distribution.  Both modes run the same code.

Copies of a map are numbered ``1 .. 2^(n+1)``.  At genus 0 copy ``c``
carries the identity C-permutation whose vertex ``j + 1`` has sign ``-``
iff bit ``j`` of ``c - 1`` is set.
"""

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .counting import n_perms_of_type, partitions
from .ctrees import (MINUS, PLUS, CDecoratedTree, CPermutation, PlaneTree,
                     decompose_ctree, map_to_tree, recompose_ctree, tree_to_map)
from .maps import (DomainError, canonical, find_trisections, genus,
                   is_unicellular, psi, psi_inverse)


@dataclass(frozen=True)
class FractionalOutcome:
    value: object
    probability: Fraction


class NeedChoice(Exception):
    def __init__(self, k):
        super().__init__(k)
        self.k = k


class _Replay:
    # answers choices from a fixed prefix, asks for more when it runs out
    def __init__(self, prefix):
        self.prefix = prefix
        self.pos = 0

    def __call__(self, k):
        if self.pos == len(self.prefix):
            raise NeedChoice(k)
        c, kk = self.prefix[self.pos]
        assert kk == k, "choice sequence is not deterministic"
        self.pos += 1
        return c


def rng_chooser(rng):
    return rng.randrange


def make_rng(seed):
    return random.Random(seed)


def expand(fn):
    """Run ``fn(choose)`` on every branch; merge equal results.

    Returns a list of :class:`FractionalOutcome` whose probabilities sum to 1.
    """
    acc = Counter()
    stack = [()]
    while stack:
        prefix = stack.pop()
        try:
            out = fn(_Replay(prefix))
        except NeedChoice as need:
            stack.extend(prefix + ((c, need.k),) for c in range(need.k))
            continue
        p = Fraction(1)
        for _, k in prefix:
            p /= k
        acc[out] += p
    return [FractionalOutcome(v, p) for v, p in acc.items()]


# --- genus 0 ----------------------------------------------------------------

def _signs_of(copy, size):
    return [MINUS if (copy - 1) >> j & 1 else PLUS for j in range(size)]


def _copy_of(cperm):
    copy = 1
    for sign, (v,) in cperm.cycles:
        if sign == MINUS:
            copy += 1 << (v - 1)
    return copy


def _check_copy(n, copy):
    if not 1 <= copy <= 2 ** (n + 1):
        raise DomainError(f"copy index must lie in 1..{2 ** (n + 1)}")


# --- recursion --------------------------------------------------------------

def map_to_ctree_traced(m, copy, choose):
    """Core of :func:`map_to_ctree`.

    Returns ``(t, corr)`` where ``corr`` sends each vertex of ``m`` (a
    frozenset of half-edges) to the cycle of ``t`` (a frozenset of tree
    vertices) it corresponds to.
    """
    g = genus(m)
    if g == 0:
        t, verts = map_to_tree(m)
        signs = _signs_of(copy, t.n_vertices)
        cp = CPermutation([(signs[v - 1], (v,)) for v in verts])
        corr = {mv: frozenset({v}) for v, mv in verts.items()}
        return CDecoratedTree(t, cp), corr
    tris = find_trisections(m)
    m2, marked = psi(m, tris[choose(len(tris))])
    t2, corr = map_to_ctree_traced(m2, copy, choose)
    images = [corr[v] for v in marked]
    t, _ = recompose_ctree(t2, images)
    _merge(corr, marked, images)
    return t, corr


def _merge(corr, marked, images):
    for v in marked:
        del corr[v]
    corr[frozenset().union(*marked)] = frozenset().union(*images)


def ctree_to_map_traced(t, choose):
    """Core of :func:`ctree_to_map`; returns ``(m, copy, corr)``.

    ``m`` is not canonical; ``corr`` sends the vertices of ``m`` to the
    cycles of ``t``.
    """
    if t.genus == 0:
        m = tree_to_map(t.tree)
        first = {}
        for i, v in enumerate(t.tree.walk):
            first.setdefault(v, i)
        corr = {m.vertex_of(first[v]): frozenset({v}) for v in first}
        return m, _copy_of(t.cperm), corr
    elems = t.cperm.non_minimal()
    t2, marked = decompose_ctree(t, elems[choose(len(elems))])
    m2, copy, corr = ctree_to_map_traced(t2, choose)
    back = {c: v for v, c in corr.items()}
    m, _ = psi_inverse(m2, [back[c] for c in marked])
    _merge(corr, [back[c] for c in marked], marked)
    return m, copy, corr


# --- public API -------------------------------------------------------------

def _check_map(m, copy):
    if not is_unicellular(m):
        raise DomainError("map must be unicellular")
    _check_copy(m.n_edges, copy)


def map_to_ctree(m, copy_index, rng):
    """Image of copy ``copy_index`` of ``m``: a C-decorated tree of the same
    genus, edge count and underlying graph."""
    _check_map(m, copy_index)
    return map_to_ctree_traced(m, copy_index, rng_chooser(rng))[0]


def ctree_to_map(t, rng):
    """Inverse direction; returns ``(canonical map, copy_index)``."""
    if t.n_edges < 1:
        raise DomainError("trees need at least one edge")
    m, copy, _ = ctree_to_map_traced(t, rng_chooser(rng))
    return canonical(m), copy


def map_to_ctree_outcomes(m, copy_index):
    """Exact distribution of :func:`map_to_ctree` over all random branches."""
    _check_map(m, copy_index)
    return expand(lambda ch: map_to_ctree_traced(m, copy_index, ch)[0])


def ctree_to_map_outcomes(t):
    """Exact distribution of :func:`ctree_to_map`; values are ``(map, copy)``."""
    if t.n_edges < 1:
        raise DomainError("trees need at least one edge")

    def run(ch):
        m, copy, _ = ctree_to_map_traced(t, ch)
        return canonical(m), copy

    return expand(run)


def graph_preserved(m, t, corr):
    """True if ``corr`` is an isomorphism of underlying rooted multigraphs."""
    if len(corr) != len(set(corr.values())) or len(corr) != t.cperm.n_cycles:
        return False
    block = {x: c for c in corr.values() for x in c}
    lhs = Counter(frozenset((corr[m.vertex_of(h)], corr[m.vertex_of(k)]))
                  for h, k in m.edges())
    rhs = Counter(frozenset((block[u], block[v])) for u, v in t.tree.edges())
    return lhs == rhs and corr[m.vertex_of(m.root)] == block[1]


# --- uniform sampling -------------------------------------------------------

def _feasible(g, n):
    if n < 1 or g < 0 or n + 1 - 2 * g < 1:
        raise DomainError(f"no unicellular maps of genus {g} with {n} edges")


def sample_plane_tree(n, rng):
    """Uniform plane tree with ``n`` edges (cycle lemma)."""
    steps = [1] * n + [-1] * (n + 1)
    rng.shuffle(steps)
    low, at, run = 0, 0, 0
    for i, s in enumerate(steps):
        run += s
        if run < low:
            low, at = run, i + 1
    word = steps[at:] + steps[:at]
    return PlaneTree("".join("(" if s > 0 else ")" for s in word[:-1]))


def _pick_weighted(items, weights, rng):
    x = rng.randrange(sum(weights))
    for item, w in zip(items, weights):
        if x < w:
            return item
        x -= w
    raise AssertionError("unreachable")


def sample_cperm(size, g, rng):
    """Uniform C-permutation of genus ``g`` on ``1 .. size``."""
    ell = size - 2 * g
    types = [p for p in partitions(size) if len(p) == ell and all(x % 2 for x in p)]
    if not types:
        raise DomainError(f"no C-permutation of genus {g} on {size} elements")
    gamma = _pick_weighted(types, [n_perms_of_type(p) * 2 ** ell for p in types], rng)
    elems = list(range(1, size + 1))
    rng.shuffle(elems)
    cycles, i = [], 0
    for k in gamma:
        cycles.append((PLUS if rng.randrange(2) else MINUS, tuple(elems[i:i + k])))
        i += k
    return CPermutation(cycles)


def sample_uniform_ctree(g, n, rng):
    _feasible(g, n)
    return CDecoratedTree(sample_plane_tree(n, rng), sample_cperm(n + 1, g, rng))


def sample_uniform_map(g, n, rng):
    """Uniform rooted unicellular map of genus ``g`` with ``n`` edges."""
    return ctree_to_map(sample_uniform_ctree(g, n, rng), rng)[0]
