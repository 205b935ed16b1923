"""Brute-force enumerators used to check every formula at small sizes.

Maps are enumerated as fixed-point-free involutions ``alpha`` with the
face tour fixed to ``0 -> 1 -> ... -> 2n-1 -> 0``; each one is a rooted
unicellular map in canonical form.  The size of every enumeration is
checked against a cap (``UNIMAP_MAX_STATES``, default ``17!!``).
"""

import os
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial

from .counting import catalan, cperm_count, double_factorial_odd
from .ctrees import CDecoratedTree, cpermutations, plane_trees
from .maps import RotationMap
from .poly import SparsePoly

DEFAULT_MAX_STATES = double_factorial_odd(9)


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed the state cap."""


def max_states():
    raw = os.environ.get("UNIMAP_MAX_STATES")
    if raw is None:
        return DEFAULT_MAX_STATES
    try:
        return int(raw)
    except ValueError:
        raise CapExceeded(f"UNIMAP_MAX_STATES must be an integer, got {raw!r}") from None


def check_cap(states, what):
    cap = max_states()
    if states > cap:
        raise CapExceeded(f"{what} needs {states} states, cap is {cap} "
                          "(raise UNIMAP_MAX_STATES to allow it)")


@dataclass
class EnumReport:
    """Counts collected by an enumeration.

    ``buckets`` maps a bucket family name (``"genus"``, ``"degrees"``...)
    to a Counter.  Reports over disjoint shards merge by addition.
    """

    params: dict
    total: int = 0
    buckets: dict = field(default_factory=lambda: defaultdict(Counter))
    seconds: float = 0.0

    def add(self, family, key, k=1):
        self.buckets[family][key] += k

    def merge(self, other):
        if self.params != other.params:
            raise ValueError("cannot merge reports with different parameters")
        out = EnumReport(dict(self.params), self.total + other.total)
        for rep in (self, other):
            for fam, cnt in rep.buckets.items():
                out.buckets[fam].update(cnt)
        out.seconds = self.seconds + other.seconds
        return out

    def bucket_sum(self, family):
        return sum(self.buckets[family].values())


# --- unicellular maps -------------------------------------------------------

def involutions(size, prefix=None):
    """Fixed-point-free involutions of ``range(size)`` as lists, in
    lexicographic order.  ``prefix`` optionally pins the partner of 0."""
    alpha = [-1] * size

    def rec():
        try:
            a = alpha.index(-1)
        except ValueError:
            yield tuple(alpha)
            return
        for b in range(a + 1, size):
            if alpha[b] == -1:
                alpha[a], alpha[b] = b, a
                yield from rec()
                alpha[a] = alpha[b] = -1

    if size == 0:
        yield ()
        return
    if prefix is None:
        yield from rec()
    else:
        alpha[0], alpha[prefix] = prefix, 0
        yield from rec()


def _vertex_cycles(alpha):
    size = len(alpha)
    seen = bytearray(size)
    out = []
    for s in range(size):
        if seen[s]:
            continue
        cyc = []
        h = s
        while not seen[h]:
            seen[h] = 1
            cyc.append(h)
            h = alpha[h] + 1
            if h == size:
                h = 0
        out.append(cyc)
    return out


def unicellular_maps(n):
    """All rooted unicellular maps with ``n`` edges, canonical form."""
    check_cap(double_factorial_odd(n), f"unicellular maps with {n} edges")
    for alpha in involutions(2 * n):
        yield RotationMap.from_involution(alpha)


def enumerate_unicellular(n, shard=None):
    """Bucket all rooted unicellular maps with ``n`` edges.

    Families: ``genus``, ``vertices``, ``degrees`` (keyed by genus and
    sorted degree partition), ``bipartite`` (genus), ``bidegrees`` (black
    partition, white partition) for bipartite maps.  ``shard`` restricts
    to the involutions pairing 0 with ``shard``.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    check_cap(double_factorial_odd(n), f"unicellular maps with {n} edges")
    start = time.perf_counter()
    rep = EnumReport({"n": n})
    size = 2 * n
    for alpha in involutions(size, shard):
        cycles = _vertex_cycles(alpha)
        v = len(cycles)
        g = (n + 1 - v) // 2
        rep.total += 1
        rep.add("genus", g)
        rep.add("vertices", v)
        rep.add("degrees", (g, tuple(sorted((len(c) for c in cycles), reverse=True))))
        # bipartite iff every edge joins an odd and an even corner label
        if all((h ^ alpha[h]) & 1 for h in range(size)):
            rep.add("bipartite", g)
            black = sorted((len(c) for c in cycles if c[0] % 2 == 0), reverse=True)
            white = sorted((len(c) for c in cycles if c[0] % 2 == 1), reverse=True)
            rep.add("bidegrees", (tuple(black), tuple(white)))
    rep.seconds = time.perf_counter() - start
    return rep


def enumerate_ctrees(n, g):
    """All C-decorated trees with ``n`` edges and genus ``g``.

    Families: ``graph_degrees`` (sorted degree sequence of the underlying
    multigraph), ``cycle_type``.
    """
    check_cap(catalan(n) * cperm_count(g, n + 1), f"C-decorated trees T_{g}({n})")
    start = time.perf_counter()
    rep = EnumReport({"n": n, "g": g})
    cps = list(cpermutations(range(1, n + 2), g))
    for t in plane_trees(n):
        for cp in cps:
            ct = CDecoratedTree(t, cp)
            rep.total += 1
            rep.add("graph_degrees", graph_degree_key(ct))
            rep.add("cycle_type", cp.cycle_type())
    rep.seconds = time.perf_counter() - start
    return rep


def graph_degree_key(obj):
    """Sorted degree sequence of the underlying graph (loops count twice)."""
    if isinstance(obj, CDecoratedTree):
        deg = Counter()
        for _, c in obj.cperm.cycles:
            deg[frozenset(c)] = sum(obj.tree.degree(v) for v in c)
        return tuple(sorted(deg.values(), reverse=True))
    return tuple(sorted((len(c) for c in obj.vertices), reverse=True))


def map_degree_histogram(n, g):
    out = Counter()
    for m in unicellular_maps(n):
        if (n + 1 - m.n_vertices) // 2 == g:
            out[graph_degree_key(m)] += 1
    return out


# --- colored and bipartite --------------------------------------------------

def surjections(k, r):
    """Surjections from a ``k``-set onto an ``r``-set (inclusion-exclusion)."""
    return sum((-1) ** j * comb(r, j) * (r - j) ** k for j in range(r + 1))


def enumerate_colored(n, r):
    """``A_r(n)``: maps with a surjective vertex coloring in ``r`` colors."""
    rep = enumerate_unicellular(n)
    total = sum(c * surjections(v, r) for v, c in rep.buckets["vertices"].items())
    out = EnumReport({"n": n, "r": r}, total)
    out.add("colored", r, total)
    return out


def _bipartite_pairs(n):
    return dict(_bipartite_cached(n))


@lru_cache(maxsize=None)
def _bipartite_cached(n):
    return tuple(enumerate_unicellular(n).buckets["bidegrees"].items())


def enumerate_bipartite(n):
    """Bipartite maps keyed by (black partition, white partition)."""
    rep = EnumReport({"n": n})
    for key, c in _bipartite_pairs(n).items():
        rep.add("bidegrees", key, c)
        rep.add("bivertices", (len(key[0]), len(key[1])), c)
        rep.total += c
    return rep


def jackson_oracle(n, r, s):
    """``B_{r,s}(n)`` by surjective colorings of black and white vertices."""
    return sum(c * surjections(len(b), r) * surjections(len(w), s)
               for (b, w), c in _bipartite_pairs(n).items())


def _labellings(parts, comp):
    # vertex labellings 1..l with prescribed degrees: prod m_d! if multisets agree
    if sorted(parts) != sorted(comp):
        return 0
    out = 1
    for m in Counter(parts).values():
        out *= factorial(m)
    return out


def enumerate_bipartite_labelled(n, I, J):
    """``BiL(I, J)``: white degrees ``I`` and black degrees ``J``, labelled.

    The formula is symmetric in ``I`` and ``J``; white is the color of the
    second vertex along the face tour.
    """
    return sum(c * _labellings(w, I) * _labellings(b, J)
               for (b, w), c in _bipartite_pairs(n).items())


def _color_sums(degrees, comp):
    # functions vertices -> colors with prescribed degree sum per color
    target = tuple(comp)
    ways = Counter({tuple([0] * len(target)): 1})
    for d in degrees:
        nxt = Counter()
        for state, c in ways.items():
            for k in range(len(target)):
                if state[k] + d <= target[k]:
                    s2 = list(state)
                    s2[k] += d
                    nxt[tuple(s2)] += c
        ways = nxt
    return ways[target]


def enumerate_bipartite_colored(n, I, J):
    """``BiC(I, J)`` by counting colorings with prescribed color degrees."""
    return sum(c * _color_sums(w, I) * _color_sums(b, J)
               for (b, w), c in _bipartite_pairs(n).items())


# --- factorizations and quasi-constellations --------------------------------

def cycle_type(perm):
    n = len(perm)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = 1
                j = perm[j]
                k += 1
            out.append(k)
    return tuple(sorted(out, reverse=True))


def enumerate_factorizations(n):
    """Triples ``s1 s2 s3 = (1 2 ... n)``, bucketed by multi-type.

    ``s3`` is forced by ``s1`` and ``s2``.  Each triple is one rooted
    unicellular 3-constellation.
    """
    if n > 6:
        raise CapExceeded("factorization enumeration is limited to n <= 6")
    check_cap(factorial(n) ** 2, f"factorizations of size {n}")
    start = time.perf_counter()
    rep = EnumReport({"n": n})
    long_cycle = [(i + 1) % n for i in range(n)]
    perms = list(permutations(range(n)))
    types = [cycle_type(p) for p in perms]
    for s1, t1 in zip(perms, types):
        for s2, t2 in zip(perms, types):
            # s3 = c (s1 s2)^-1, conjugate to (s1 s2)^-1 c
            s3 = [0] * n
            for x in range(n):
                s3[s1[s2[x]]] = long_cycle[x]
            rep.add("multitype", (t1, t2, cycle_type(s3)))
            rep.total += 1
    rep.seconds = time.perf_counter() - start
    return rep


def _face_count(size, sigma, alpha):
    seen = bytearray(size)
    k = 0
    for s in range(size):
        if seen[s]:
            continue
        k += 1
        h = s
        while not seen[h]:
            seen[h] = 1
            h = sigma[alpha[h]]
    return k


def enumerate_quasi_constellations(n, cyclic_only=False):
    """Rooted unicellular 3-(quasi-)constellations of size ``n``.

    Labelled objects: square ``s`` has an edge to a circle of each color;
    the circles of color ``i`` are the cycles of a permutation ``pi_i`` of
    the squares; each square turns ``(1, 2, 3)`` or ``(1, 3, 2)``.  Only
    one-face configurations count, and labelled counts are divided by
    ``(n - 1)!``.  With ``cyclic_only`` every square turns ``(1, 2, 3)``,
    which gives constellations.
    """
    orientations = 1 if cyclic_only else 2 ** n
    check_cap(factorial(n) ** 3 * orientations, f"quasi-constellations of size {n}")
    start = time.perf_counter()
    rep = EnumReport({"n": n, "cyclic_only": cyclic_only})
    size = 6 * n
    # half-edge 6s + i: square side of edge (s, i); 6s + 3 + i: circle side
    alpha = [0] * size
    for s in range(n):
        for i in range(3):
            alpha[6 * s + i], alpha[6 * s + 3 + i] = 6 * s + 3 + i, 6 * s + i
    perms = list(permutations(range(n)))
    types = [cycle_type(p) for p in perms]
    counts = Counter()
    sigma = [0] * size
    for turn in product((0, 1), repeat=n) if not cyclic_only else [(0,) * n]:
        for s, t in enumerate(turn):
            order = (0, 1, 2) if t == 0 else (0, 2, 1)
            for a, b in zip(order, order[1:] + order[:1]):
                sigma[6 * s + a] = 6 * s + b
        for k1, p1 in enumerate(perms):
            for s in range(n):
                sigma[6 * s + 3] = 6 * p1[s] + 3
            for k2, p2 in enumerate(perms):
                for s in range(n):
                    sigma[6 * s + 4] = 6 * p2[s] + 4
                for k3, p3 in enumerate(perms):
                    for s in range(n):
                        sigma[6 * s + 5] = 6 * p3[s] + 5
                    if _face_count(size, sigma, alpha) == 1:
                        counts[types[k1], types[k2], types[k3]] += 1
    denom = factorial(n - 1)
    for key, c in counts.items():
        assert c % denom == 0
        rep.add("multitype", key, c // denom)
        rep.total += c // denom
    rep.seconds = time.perf_counter() - start
    return rep


def enumerate_prickly(n):
    """Rooted prickly planar 3-quasi-constellations of size ``n``.

    Trees are rooted at an edge leaving a circle of color 1.  Returns a
    Counter keyed by ``(deg1, deg2, deg3, g0)`` with ``deg_i`` the sorted
    degree partition of color ``i``; multiply by the labelling factors to
    get labelled counts.
    """
    return Counter(_prickly(n))


@lru_cache(maxsize=None)
def _prickly(n):
    edges = 3 * n
    # signatures, not trees, are stored; their number grows roughly like 6^n
    check_cap(6 ** n, f"prickly trees of size {n}")

    def merge(sig_a, sig_b):
        degs = tuple(tuple(sorted(x + y, reverse=True)) for x, y in zip(sig_a[0], sig_b[0]))
        leaves = tuple(x + y for x, y in zip(sig_a[1], sig_b[1]))
        return (degs, leaves, sig_a[2] + sig_b[2])

    empty = (((), (), ()), (0, 0, 0), 0)
    memo = {}

    def children(c, budget):
        # ordered square children of a circle of color c: Counter of
        # (signature, number of children)
        key = ("ch", c, budget)
        if key in memo:
            return memo[key]
        out = Counter({(empty, 0): 1})
        for (sig, k), cnt in list(_extend(c, budget)):
            out[sig, k] += cnt
        memo[key] = out
        return out

    def square(c, budget):
        key = ("sq", c, budget)
        if key in memo:
            return memo[key]
        out = Counter()
        if budget >= 1:
            leaves = [0, 0, 0]
            leaves[c] = 1
            out[(((), (), ()), tuple(leaves), 1)] += 1
        a, b = [x for x in range(3) if x != c]
        if budget >= 3:
            for x, y in ((a, b), (b, a)):
                for s1, c1 in circle(x, budget - 3).items():
                    for s2, c2 in circle(y, budget - 3 - s1[2]).items():
                        sig = merge(s1, s2)
                        out[(sig[0], sig[1], sig[2] + 3)] += c1 * c2
        memo[key] = out
        return out

    def circle(c, budget):
        # non-root circle of color c hanging from its parent square
        key = ("ci", c, budget)
        if key in memo:
            return memo[key]
        out = Counter()
        for (sig, k), cnt in children(c, budget).items():
            degs = list(sig[0])
            degs[c] = tuple(sorted(degs[c] + (k + 1,), reverse=True))
            out[(tuple(degs), sig[1], sig[2])] += cnt
        memo[key] = out
        return out

    def _extend(c, budget):
        # sequences of at least one square child
        acc = Counter()
        for s1, c1 in square(c, budget).items():
            acc[(s1, 1)] += c1
            for (s2, k), c2 in children(c, budget - s1[2]).items():
                if k:
                    acc[(merge(s1, s2), k + 1)] += c1 * c2
        return acc.items()

    out = Counter()
    for (sig, k), cnt in children(0, edges).items():
        if k == 0 or sig[2] != edges:
            continue
        degs = list(sig[0])
        degs[0] = tuple(sorted(degs[0] + (k,), reverse=True))
        leaves = sig[1]
        if leaves[0] == leaves[1] == leaves[2]:
            out[(degs[0], degs[1], degs[2], leaves[0])] += cnt
    return dict(out)


def prickly_labelled(n, I, J, L, g0):
    """Labelled count from :func:`enumerate_prickly`."""
    total = 0
    for (d1, d2, d3, h), c in enumerate_prickly(n).items():
        if h == g0:
            total += c * _labellings(d1, I) * _labellings(d2, J) * _labellings(d3, L)
    return total


# --- Stanley polynomials ----------------------------------------------------

def stanley_brute(n, r):
    """``F_n`` as the sum over bipartite maps with ``n`` edges and labellings
    ``phi`` into ``1..r`` with ``phi(black) >= phi(white)`` on every edge.

    The root vertex is black; black vertices weigh ``q``, white ``p``.
    """
    total = Counter()
    for alpha in involutions(2 * n):
        if not all((h ^ alpha[h]) & 1 for h in range(2 * n)):
            continue
        cycles = _vertex_cycles(alpha)
        idx = {}
        for i, c in enumerate(cycles):
            for h in c:
                idx[h] = i
        black = [c[0] % 2 == 0 for c in cycles]
        # edge (h, alpha h) joins the black and white end
        pairs = [(idx[h], idx[alpha[h]]) for h in range(0, 2 * n, 2)]
        for phi in product(range(1, r + 1), repeat=len(cycles)):
            if all(phi[b] >= phi[w] for b, w in pairs):
                mono = Counter()
                for i, lab in enumerate(phi):
                    mono[("q" if black[i] else "p") + str(lab)] += 1
                total[tuple(sorted(mono.items()))] += 1
    return SparsePoly(dict(total))


# --- characters -------------------------------------------------------------

def _border_strips(lam, k):
    # partitions obtained by removing a border strip of size k, with heights
    lam = list(lam)
    out = []
    # beta numbers
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    for b in beta:
        if b - k >= 0 and b - k not in bset:
            height = sum(1 for x in beta if b - k < x < b)
            new = sorted((bset - {b}) | {b - k}, reverse=True)
            mu = [x - (m - 1 - i) for i, x in enumerate(new)]
            out.append((tuple(x for x in mu if x), height))
    return out


@lru_cache(maxsize=None)
def character_mn(lam, mu):
    """``chi^lam`` on the class of cycle type ``mu`` (Murnaghan-Nakayama).

    Both arguments are tuples; trailing fixed points are handled by the
    hook length formula.
    """
    if not mu:
        return 1 if not lam else 0
    if mu[0] == 1:
        return hook_dimension(lam)
    k, rest = mu[0], mu[1:]
    return sum((-1) ** h * character_mn(nu, rest) for nu, h in _border_strips(lam, k))


def hook_dimension(lam):
    """Number of standard tableaux of shape ``lam``."""
    size = sum(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(size) // hooks


def normalized_cycle_character(lam, n):
    """``chi^lam((1 .. n) 1^(L-n)) / dim lam`` as a Fraction."""
    size = sum(lam)
    if n > size:
        return Fraction(0)
    mu = (n,) + (1,) * (size - n)
    return Fraction(character_mn(tuple(lam), mu), hook_dimension(lam))
