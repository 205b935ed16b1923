"""Rooted maps as rotation systems.

Half-edges are numbered ``0 .. 2n-1``.  A map is the triple
``(sigma, alpha, root)`` where ``sigma[h]`` is the next half-edge
counterclockwise around the vertex of ``h`` and ``alpha`` is the edge
involution.  The face permutation is ``phi = sigma o alpha``, i.e.
``phi[h] = sigma[alpha[h]]``; following ``phi`` is the clockwise tour of
the faces.

Corners are identified with half-edges: the corner preceding ``h`` in
counterclockwise order around its vertex is called ``h``.  On a
unicellular map the corner labels run ``1 .. 2n`` along the face tour,
starting from the root corner.

Canonical form: relabel every half-edge by ``label - 1``.  The face tour
then becomes ``h -> h + 1 (mod 2n)``, the map is determined by ``alpha``
alone, and two rooted unicellular maps are isomorphic iff their canonical
``alpha`` tuples are equal.
"""

import json
from dataclasses import dataclass
from functools import cached_property

import networkx as nx


class StructureError(ValueError):
    """Raised on malformed permutations."""


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


def cycles_of(perm):
    """Cycles of ``perm`` (a sequence of images), each started at its minimum."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        out.append(tuple(cyc))
    return out


def count_cycles(perm):
    seen = bytearray(len(perm))
    k = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        k += 1
        h = start
        while not seen[h]:
            seen[h] = 1
            h = perm[h]
    return k


def _check_perm(p, size, name):
    if len(p) != size or sorted(p) != list(range(size)):
        raise StructureError(f"{name} is not a permutation of 0..{size - 1}")


@dataclass(frozen=True)
class RotationMap:
    """A rooted map on an oriented surface.

    >>> m = RotationMap.from_involution((1, 0))
    >>> m.n_edges, genus(m)
    (1, 0)
    """

    sigma: tuple
    alpha: tuple
    root: int = 0

    def __post_init__(self):
        sigma = tuple(self.sigma)
        alpha = tuple(self.alpha)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)
        size = len(alpha)
        if size == 0 or size % 2:
            raise StructureError("a map needs an even, positive number of half-edges")
        _check_perm(sigma, size, "sigma")
        _check_perm(alpha, size, "alpha")
        for h in range(size):
            if alpha[h] == h or alpha[alpha[h]] != h:
                raise StructureError("alpha must be a fixed-point-free involution")
        if not 0 <= self.root < size:
            raise StructureError("root out of range")
        # connectivity: orbit of the root under <sigma, alpha>
        seen = {self.root}
        stack = [self.root]
        while stack:
            h = stack.pop()
            for k in (sigma[h], alpha[h]):
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        if len(seen) != size:
            raise StructureError("map is not connected")

    @classmethod
    def from_involution(cls, alpha):
        """Canonical unicellular map whose face tour is ``0, 1, ..., 2n-1``."""
        size = len(alpha)
        sigma = tuple((alpha[h] + 1) % size for h in range(size))
        return cls(sigma, tuple(alpha), 0)

    @property
    def n_edges(self):
        return len(self.alpha) // 2

    @cached_property
    def phi(self):
        s, a = self.sigma, self.alpha
        return tuple(s[a[h]] for h in range(len(a)))

    @cached_property
    def vertices(self):
        """Vertices as tuples of half-edges in counterclockwise order."""
        return cycles_of(self.sigma)

    @cached_property
    def vertex_index(self):
        idx = [0] * len(self.sigma)
        for i, cyc in enumerate(self.vertices):
            for h in cyc:
                idx[h] = i
        return tuple(idx)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_faces(self):
        return count_cycles(self.phi)

    def vertex_of(self, h):
        """The vertex of half-edge ``h`` as a frozenset of half-edges."""
        return frozenset(self.vertices[self.vertex_index[h]])

    def edges(self):
        return [(h, self.alpha[h]) for h in range(len(self.alpha)) if h < self.alpha[h]]

    def to_json(self):
        """Serialise with 1-indexed half-edges and a fixed key order."""
        return json.dumps({
            "n": self.n_edges,
            "sigma": [s + 1 for s in self.sigma],
            "alpha": [a + 1 for a in self.alpha],
            "root": self.root + 1,
        })

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        try:
            n = int(data["n"])
            sigma = [int(s) - 1 for s in data["sigma"]]
            alpha = [int(a) - 1 for a in data["alpha"]]
            root = int(data["root"]) - 1
        except (KeyError, TypeError, ValueError) as exc:
            raise StructureError(f"malformed map JSON: {exc}") from None
        if len(sigma) != 2 * n or len(alpha) != 2 * n:
            raise StructureError("arrays must have length 2n")
        return cls(tuple(sigma), tuple(alpha), root)


def genus(m):
    """Genus from Euler's relation ``V - E + F = 2 - 2g``."""
    chi = m.n_vertices - m.n_edges + m.n_faces
    g2 = 2 - chi
    if g2 < 0 or g2 % 2:
        raise StructureError("Euler characteristic is not that of an orientable surface")
    return g2 // 2


def is_unicellular(m):
    return m.n_faces == 1


def corner_labels(m):
    """Tuple ``lab`` with ``lab[h]`` the label (``1 .. 2n``) of corner ``h``.

    Raises :class:`DomainError` if the map has more than one face.
    """
    size = len(m.alpha)
    lab = [0] * size
    h = m.root
    for i in range(1, size + 1):
        if lab[h]:
            raise DomainError("corner labelling needs a unicellular map")
        lab[h] = i
        h = m.phi[h]
    if h != m.root:
        raise DomainError("corner labelling needs a unicellular map")
    return tuple(lab)


def vertex_sequences(m, lab=None):
    """Per-vertex corner sequences, counterclockwise from the minimum label.

    Returned as lists of half-edges; labels are ``lab[h]``.
    """
    if lab is None:
        lab = corner_labels(m)
    out = []
    for cyc in m.vertices:
        start = min(cyc, key=lab.__getitem__)
        seq = [start]
        h = m.sigma[start]
        while h != start:
            seq.append(h)
            h = m.sigma[h]
        out.append(seq)
    return out


def canonical(m, marked=()):
    """Relabel half-edges by ``label - 1``.

    ``marked`` is an iterable of half-edge sets (vertices or corners) that
    are relabelled alongside; returns ``(canonical_map, relabelled_marked)``
    when ``marked`` is given, else the canonical map alone.
    """
    lab = corner_labels(m)
    size = len(lab)
    alpha = [0] * size
    for h in range(size):
        alpha[lab[h] - 1] = lab[m.alpha[h]] - 1
    cm = RotationMap.from_involution(tuple(alpha))
    if marked == ():
        return cm
    relabelled = [frozenset(lab[h] - 1 for h in s) for s in marked]
    return cm, relabelled


def find_trisections(m):
    """Corners whose label is smaller than their counterclockwise predecessor.

    Sorted by label.  A unicellular map of genus ``g`` has exactly ``2g``.
    """
    lab = corner_labels(m)
    out = []
    for seq in vertex_sequences(m, lab):
        for prev, cur in zip(seq, seq[1:]):
            if lab[cur] < lab[prev]:
                out.append(cur)
    out.sort(key=lab.__getitem__)
    return out


def _resliced(m, sigma):
    # if the root corner is cut, the root follows the face tour
    sinv = [0] * len(sigma)
    for h, k in enumerate(m.sigma):
        sinv[k] = h
    root = sigma[sinv[m.root]]
    return RotationMap(tuple(sigma), m.alpha, root)


def slice_trisection(m, tau):
    """Slice the vertex of trisection ``tau`` into three vertices.

    Returns ``(m2, c1, c2, c3)``.  ``m2`` has the same half-edges and
    ``n - 2`` more vertices.  ``c1`` is the minimal corner of the sliced
    vertex, ``c2 = tau`` and ``c3`` is the corner ``c'`` (the smallest
    label exceeding ``tau``'s among the corners met counterclockwise from
    ``c1`` to ``tau``).  In ``m2``, ``c1`` and ``c2`` are minimal at their
    vertices; ``c3`` is either minimal or a trisection.

    If the root corner is ``c1`` the root of ``m2`` becomes ``tau``.
    """
    lab = corner_labels(m)
    seq = next(s for s in vertex_sequences(m, lab) if tau in s)
    j = seq.index(tau)
    if j == 0 or lab[seq[j - 1]] < lab[tau]:
        raise DomainError(f"corner {tau} is not a trisection")
    above = [h for h in seq[1:j] if lab[h] > lab[tau]]
    cp = min(above, key=lab.__getitem__)
    i = seq.index(cp)
    sigma = list(m.sigma)
    for arc in (seq[:i], seq[i:j], seq[j:]):
        for a, b in zip(arc, arc[1:] + arc[:1]):
            sigma[a] = b
    return _resliced(m, sigma), seq[0], tau, cp


def glue_corners(m, corners):
    """Merge the vertices of three corners into one; inverse of slicing.

    The corners must lie at three distinct vertices.  The arcs are joined
    counterclockwise in the order in which the corners appear along the
    face tour, which keeps the map unicellular and raises the genus by one.
    Returns ``(m2, tau)`` where ``tau`` is the first of the three corners
    along the tour (a trisection of ``m2``).
    """
    lab = corner_labels(m)
    corners = sorted(corners, key=lab.__getitem__)
    if len({m.vertex_index[h] for h in corners}) != 3:
        raise DomainError("gluing needs three corners at distinct vertices")
    tau, c, cp = corners
    arcs = []
    for h in (c, cp, tau):
        arc = [h]
        k = m.sigma[h]
        while k != h:
            arc.append(k)
            k = m.sigma[k]
        arcs.append(arc)
    sigma = list(m.sigma)
    ring = arcs[0] + arcs[1] + arcs[2]
    for a, b in zip(ring, ring[1:] + ring[:1]):
        sigma[a] = b
    root = c if m.root == tau else m.root
    return RotationMap(tuple(sigma), m.alpha, root), tau


def _is_vertex_min(m, h, lab):
    return all(lab[k] >= lab[h] for k in m.vertex_of(h))


def psi(m, tau):
    """Iterated slicing of a trisection.

    Returns ``(m2, marked)`` where ``m2`` has genus ``g - k`` and
    ``marked`` is a frozenset of ``2k + 1`` vertices (each a frozenset of
    half-edges).  Merging the marked vertices gives back the underlying
    graph of ``m``.
    """
    if genus(m) == 0:
        raise DomainError("plane trees have no trisections")
    marked = []
    while True:
        m, c1, c2, c3 = slice_trisection(m, tau)
        marked += [c1, c2]
        if _is_vertex_min(m, c3, corner_labels(m)):
            marked.append(c3)
            break
        tau = c3
    return m, frozenset(m.vertex_of(h) for h in marked)


def _as_vertex(m, v):
    if isinstance(v, int):
        return m.vertex_of(v)
    v = frozenset(v)
    h = next(iter(v))
    if m.vertex_of(h) != v:
        raise DomainError(f"{sorted(v)} is not a vertex")
    return v


def psi_inverse(m, marked):
    """Inverse of :func:`psi`.

    ``marked`` is an odd set of at least three vertices of the unicellular
    map ``m`` (frozensets of half-edges, or one half-edge per vertex).
    Marked vertices are ranked by their minimal label; the three highest
    ranked are glued first, then the remaining ones two at a time, each
    time together with the trisection produced by the previous gluing.
    """
    vs = {_as_vertex(m, v) for v in marked}
    if len(vs) < 3 or len(vs) % 2 == 0:
        raise DomainError("need an odd number (at least 3) of marked vertices")
    lab = corner_labels(m)
    mins = sorted((min(v, key=lab.__getitem__) for v in vs), key=lab.__getitem__)
    m, tau = glue_corners(m, mins[-3:])
    rest = mins[:-3]
    while rest:
        *rest, a, b = rest
        m, tau = glue_corners(m, (a, b, tau))
    return m, tau


def underlying_graph(m):
    """Vertex-rooted multigraph of ``m``; nodes are vertices as half-edge sets."""
    g = nx.MultiGraph()
    for cyc in m.vertices:
        g.add_node(frozenset(cyc))
    for h, k in m.edges():
        g.add_edge(m.vertex_of(h), m.vertex_of(k))
    g.graph["root"] = m.vertex_of(m.root)
    return g


def merge_vertices(partition, group):
    """Merge the blocks listed in ``group`` into a single block."""
    group = [frozenset(b) for b in group]
    merged = frozenset().union(*group)
    return frozenset(b for b in partition if b not in group) | {merged}


def vertex_partition(m):
    return frozenset(frozenset(c) for c in m.vertices)
