"""Plane trees, C-permutations and C-decorated trees.

Tree vertices are numbered ``1 .. n+1`` in left-to-right depth-first
order; the root is ``1``.  A corner of a tree is a pair ``(v, slot)`` with
``0 <= slot <= #children(v)``: slot ``s`` sits just before the ``s``-th
child (slot ``#children`` after the last one).  A tree with ``n`` edges has
``2n + 1`` corners, the root sector counting twice.
"""

import json
from collections import namedtuple
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

import networkx as nx

from .maps import DomainError, RotationMap, StructureError, corner_labels

PLUS, MINUS = "+", "-"

SignedSequence = namedtuple("SignedSequence", "sign seq")


@dataclass(frozen=True)
class PlaneTree:
    """Rooted plane tree given by its Dyck word.

    >>> t = PlaneTree("(()())")
    >>> t.children
    {1: (2,), 2: (3, 4), 3: (), 4: ()}
    """

    dyck: str

    def __post_init__(self):
        depth = 0
        for ch in self.dyck:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            else:
                raise StructureError(f"bad character {ch!r} in Dyck word")
            if depth < 0:
                raise StructureError("unbalanced Dyck word")
        if depth:
            raise StructureError("unbalanced Dyck word")

    @property
    def n_edges(self):
        return len(self.dyck) // 2

    @property
    def n_vertices(self):
        return self.n_edges + 1

    @cached_property
    def walk(self):
        """``walk[i]`` is the vertex holding the corner before step ``i``."""
        out = []
        stack = [1]
        nxt = 2
        for ch in self.dyck:
            out.append(stack[-1])
            if ch == "(":
                stack.append(nxt)
                nxt += 1
            else:
                stack.pop()
        return tuple(out)

    @cached_property
    def parent(self):
        par = {1: 0}
        stack = [1]
        nxt = 2
        for ch in self.dyck:
            if ch == "(":
                par[nxt] = stack[-1]
                stack.append(nxt)
                nxt += 1
            else:
                stack.pop()
        return par

    @cached_property
    def children(self):
        kids = {v: [] for v in range(1, self.n_vertices + 1)}
        for v in range(2, self.n_vertices + 1):
            kids[self.parent[v]].append(v)
        return {v: tuple(c) for v, c in kids.items()}

    def edges(self):
        return [(self.parent[v], v) for v in range(2, self.n_vertices + 1)]

    def degree(self, v):
        return len(self.children[v]) + (v != 1)

    def corners(self):
        return [(v, s) for v in self.children for s in range(len(self.children[v]) + 1)]

    def depth(self, v):
        d = 0
        while v != 1:
            v = self.parent[v]
            d += 1
        return d


def plane_trees(n):
    """All plane trees with ``n`` edges, in lexicographic Dyck order."""
    def rec(prefix, opened, depth):
        if len(prefix) == 2 * n:
            yield PlaneTree("".join(prefix))
            return
        if opened < n:
            prefix.append("(")
            yield from rec(prefix, opened + 1, depth + 1)
            prefix.pop()
        if depth > 0:
            prefix.append(")")
            yield from rec(prefix, opened, depth - 1)
            prefix.pop()

    yield from rec([], 0, 0)


def tree_to_map(t):
    """Canonical rotation system of a plane tree (needs at least one edge).

    Half-edge ``i`` starts at vertex ``t.walk[i]``.
    """
    if t.n_edges == 0:
        raise DomainError("a single vertex has no half-edges")
    alpha = [0] * (2 * t.n_edges)
    stack = []
    for i, ch in enumerate(t.dyck):
        if ch == "(":
            stack.append(i)
        else:
            j = stack.pop()
            alpha[i], alpha[j] = j, i
    return RotationMap.from_involution(tuple(alpha))


def map_to_tree(m):
    """Plane tree of a genus-0 map with the vertex correspondence.

    Returns ``(t, verts)`` where ``verts[v]`` is the map vertex (frozenset of
    half-edges) of tree vertex ``v``.
    """
    if m.n_vertices != m.n_edges + 1:
        raise DomainError("map is not a plane tree")
    lab = corner_labels(m)
    order = sorted(range(len(lab)), key=lab.__getitem__)
    t = PlaneTree("".join("(" if lab[m.alpha[h]] > lab[h] else ")" for h in order))
    verts = {}
    for i, h in enumerate(order):
        verts.setdefault(t.walk[i], m.vertex_of(h))
    return t, verts


# --- Rémy's procedure on trees with arbitrary vertex ids -------------------

def _kids_of(t):
    return {v: list(c) for v, c in t.children.items()}, 1


def _parent_in(kids, v):
    for u, c in kids.items():
        if v in c:
            return u
    return None


def _rebuild(kids, root):
    """Dyck word and id -> DFS number for an id-labelled tree."""
    word = []
    relabel = {}

    def visit(u):
        relabel[u] = len(relabel) + 1
        for w in kids[u]:
            word.append("(")
            visit(w)
            word.append(")")

    visit(root)
    return PlaneTree("".join(word)), relabel


def _contract(kids, root, v):
    # leaf side for leaves, stretch side otherwise; mutates kids
    if not kids[v]:
        if v == root:
            raise DomainError("cannot remove the only vertex")
        p = _parent_in(kids, v)
        i = kids[p].index(v)
        kids[p].pop(i)
        del kids[v]
        return root, (p, i), "leaf"
    w = kids[v][0]
    s = len(kids[w])
    kids[w] = kids[w] + kids[v][1:]
    if v == root:
        root = w
    else:
        p = _parent_in(kids, v)
        kids[p][kids[p].index(v)] = w
    del kids[v]
    return root, (w, s), "stretch"


def _expand(kids, root, corner, side, new):
    u, s = corner
    if u not in kids or not 0 <= s <= len(kids[u]):
        raise DomainError(f"invalid corner {corner}")
    if side == "leaf":
        kids[u].insert(s, new)
        kids[new] = []
        return root
    if side != "stretch":
        raise DomainError(f"unknown side {side!r}")
    kids[new] = [u] + kids[u][s:]
    kids[u] = kids[u][:s]
    if u == root:
        return new
    p = _parent_in(kids, u)
    kids[p][kids[p].index(u)] = new
    return root


def remy_contract(t, v):
    """Remove marked vertex ``v``; returns ``(t2, corner, side)``.

    A leaf is deleted (side ``"leaf"``, the corner is where it hung).  A
    non-leaf is merged with its first child (side ``"stretch"``, the corner
    separates the first child's subtrees from the others).
    """
    if not 1 <= v <= t.n_vertices:
        raise DomainError(f"no vertex {v}")
    kids, root = _kids_of(t)
    root, (u, s), side = _contract(kids, root, v)
    t2, relabel = _rebuild(kids, root)
    return t2, (relabel[u], s), side


def remy_expand(t, corner, side):
    """Inverse of :func:`remy_contract`; returns ``(t2, v)``."""
    kids, root = _kids_of(t)
    root = _expand(kids, root, corner, side, 0)
    t2, relabel = _rebuild(kids, root)
    return t2, relabel[0]


# --- C-permutations ---------------------------------------------------------

def _rotate_min(elems):
    i = elems.index(min(elems))
    return tuple(elems[i:] + elems[:i])


@dataclass(frozen=True)
class CPermutation:
    """Permutation with signed cycles of odd length.

    Cycles are stored min-first and sorted by their minima.

    >>> CPermutation([("+", (4, 7, 5)), ("-", (6, 2, 1))]).cycles
    (('-', (1, 6, 2)), ('+', (4, 7, 5)))
    """

    cycles: tuple

    def __post_init__(self):
        norm = []
        seen = set()
        for sign, elems in self.cycles:
            elems = tuple(elems)
            if sign not in (PLUS, MINUS):
                raise StructureError(f"bad sign {sign!r}")
            if len(elems) % 2 == 0:
                raise StructureError(f"cycle {elems} has even length")
            if seen & set(elems) or len(set(elems)) != len(elems):
                raise StructureError("cycles overlap")
            seen |= set(elems)
            norm.append((sign, _rotate_min(elems)))
        norm.sort(key=lambda c: c[1][0])
        object.__setattr__(self, "cycles", tuple(norm))

    @property
    def ground(self):
        return frozenset(x for _, c in self.cycles for x in c)

    @property
    def size(self):
        return sum(len(c) for _, c in self.cycles)

    @property
    def n_cycles(self):
        return len(self.cycles)

    @property
    def rank(self):
        return self.size - self.n_cycles

    @property
    def genus(self):
        return self.rank // 2

    def cycle_of(self, x):
        for sign, c in self.cycles:
            if x in c:
                return sign, c
        raise KeyError(x)

    def non_minimal(self):
        return sorted(x for _, c in self.cycles for x in c[1:])

    def cycle_type(self):
        return tuple(sorted((len(c) for _, c in self.cycles), reverse=True))

    def relabel(self, f):
        return CPermutation([(s, tuple(f[x] for x in c)) for s, c in self.cycles])

    def to_list(self):
        return [{"sign": s, "elems": list(c)} for s, c in self.cycles]

    def __str__(self):
        return "".join(f"{s}({','.join(map(str, c))})" for s, c in self.cycles)


def seq_to_cperm(s):
    """Signed sequence to C-permutation, cutting at the minimum each time.

    >>> print(seq_to_cperm(SignedSequence("+", (4, 7, 3, 1, 5, 6, 2))))
    -(1,6,2)-(3)+(4,7,5)
    """
    sign, seq = s
    seq = list(seq)
    if not seq:
        raise DomainError("empty signed sequence")
    if len(set(seq)) != len(seq):
        raise StructureError("repeated element in sequence")
    produced = []
    while not (len(seq) % 2 == 1 and seq[0] == min(seq)):
        i = seq.index(min(seq))
        head, tail = seq[:i], seq[i:]
        if len(tail) % 2:
            produced.append((PLUS, tuple(tail)))
        else:
            head.append(tail.pop(1))
            produced.append((MINUS, tuple(tail)))
        seq = head
    produced.append((sign, tuple(seq)))
    return CPermutation(produced)


def cperm_to_seq(c):
    """Inverse of :func:`seq_to_cperm`."""
    if not isinstance(c, CPermutation):
        c = CPermutation(c)
    if not c.cycles:
        raise DomainError("empty C-permutation")
    *rest, (sign, last) = c.cycles
    seq = list(last)
    for s, cyc in reversed(rest):
        if s == PLUS:
            seq += cyc
        else:
            x = seq.pop()
            seq += [cyc[0], x, *cyc[1:]]
    return SignedSequence(sign, tuple(seq))


def cpermutations(elems, genus=None):
    """All C-permutations on ``elems`` (optionally of a fixed genus)."""
    elems = tuple(sorted(elems))

    def rec(rest, budget):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for size in range(1, len(rest) + 1, 2):
            if budget is not None and size - 1 > budget:
                break
            for tail in permutations(others, size - 1):
                left = tuple(x for x in others if x not in tail)
                nb = None if budget is None else budget - (size - 1)
                for more in rec(left, nb):
                    for sign in (PLUS, MINUS):
                        yield [(sign, (first,) + tail)] + more

    budget = None if genus is None else 2 * genus
    for cycles in rec(elems, budget):
        cp = CPermutation(cycles)
        if genus is None or cp.rank == 2 * genus:
            yield cp


# --- C-decorated trees ------------------------------------------------------

@dataclass(frozen=True)
class CDecoratedTree:
    tree: PlaneTree
    cperm: CPermutation

    def __post_init__(self):
        if self.cperm.ground != frozenset(range(1, self.tree.n_vertices + 1)):
            raise StructureError("C-permutation must act on the tree vertices")

    @property
    def n_edges(self):
        return self.tree.n_edges

    @property
    def genus(self):
        return self.cperm.genus

    def to_json(self):
        return json.dumps({"dyck": self.tree.dyck, "cycles": self.cperm.to_list()})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        try:
            cycles = [(c["sign"], tuple(c["elems"])) for c in data["cycles"]]
            return cls(PlaneTree(data["dyck"]), CPermutation(cycles))
        except (KeyError, TypeError) as exc:
            raise StructureError(f"malformed tree JSON: {exc}") from None


def underlying_graph(t):
    """Multigraph on the cycles of ``t.cperm``, rooted at the cycle of vertex 1."""
    block = {}
    g = nx.MultiGraph()
    for _, c in t.cperm.cycles:
        node = frozenset(c)
        g.add_node(node)
        for x in c:
            block[x] = node
    for u, v in t.tree.edges():
        g.add_edge(block[u], block[v])
    g.graph["root"] = block[1]
    return g


def decompose_ctree(t, i):
    """Split the cycle of the non-minimal element ``i``.

    Returns ``(t2, marked)`` with ``marked`` the frozenset of the ``2k+1``
    new cycle supports.
    """
    sign, cyc = t.cperm.cycle_of(i)
    if cyc[0] == i:
        raise DomainError(f"{i} is the minimum of its cycle")
    j = cyc.index(i)
    parts = seq_to_cperm(SignedSequence(sign, cyc[j:] + cyc[:j]))
    others = [c for c in t.cperm.cycles if c[1] != cyc]
    t2 = CDecoratedTree(t.tree, CPermutation(others + list(parts.cycles)))
    return t2, frozenset(frozenset(c) for _, c in parts.cycles)


def recompose_ctree(t, marked):
    """Inverse of :func:`decompose_ctree`; returns ``(t2, i)``."""
    marked = {frozenset(b) for b in marked}
    if len(marked) < 3 or len(marked) % 2 == 0:
        raise DomainError("need an odd number (at least 3) of marked cycles")
    chosen = [c for c in t.cperm.cycles if frozenset(c[1]) in marked]
    if len(chosen) != len(marked):
        raise DomainError("marked sets must be cycles")
    sign, seq = cperm_to_seq(CPermutation(chosen))
    others = [c for c in t.cperm.cycles if frozenset(c[1]) not in marked]
    return CDecoratedTree(t.tree, CPermutation(others + [(sign, seq)])), seq[0]


# --- extended Rémy ----------------------------------------------------------

def extended_remy(t, v):
    """Reduce a C-decorated tree with a marked vertex.

    Case A (``v`` a fixed point): ``("A", t2, sign, corner, side)`` with
    ``t2`` one edge smaller, same genus.
    Case B: ``("B", t2, v2, corner1, side1, corner2, side2)`` with ``t2``
    two edges smaller and genus one lower; ``v2`` is the marked vertex in
    ``t2``, ``corner1`` lives in the intermediate tree and ``corner2`` in
    ``t2``.
    """
    sign, cyc = t.cperm.cycle_of(v)
    kids, root = _kids_of(t.tree)
    if len(cyc) == 1:
        root, (u, s), side = _contract(kids, root, v)
        t2, relabel = _rebuild(kids, root)
        rest = CPermutation([c for c in t.cperm.cycles if c[1] != cyc]).relabel(relabel)
        return ("A", CDecoratedTree(t2, rest), sign, (relabel[u], s), side)
    j = cyc.index(v)
    rot = cyc[j:] + cyc[:j]
    v1, v2 = rot[1], rot[2]
    root, (u1, s1), side1 = _contract(kids, root, v1)
    t1, rel1 = _rebuild(kids, root)
    root, (u2, s2), side2 = _contract(kids, root, v2)
    t2, rel2 = _rebuild(kids, root)
    cycles = [c for c in t.cperm.cycles if c[1] != cyc] + [(sign, (v,) + rot[3:])]
    cp = CPermutation(cycles).relabel(rel2)
    return ("B", CDecoratedTree(t2, cp), rel2[v], (rel1[u1], s1), side1,
            (rel2[u2], s2), side2)


def extended_remy_inverse(data):
    """Inverse of :func:`extended_remy`; returns ``(t, v)``."""
    if data[0] == "A":
        _, t2, sign, corner, side = data
        kids, root = _kids_of(t2.tree)
        root = _expand(kids, root, corner, side, 0)
        t, relabel = _rebuild(kids, root)
        cycles = list(t2.cperm.relabel(relabel).cycles) + [(sign, (relabel[0],))]
        return CDecoratedTree(t, CPermutation(cycles)), relabel[0]
    if data[0] != "B":
        raise DomainError(f"unknown case {data[0]!r}")
    _, t2, v, corner1, side1, corner2, side2 = data
    kids, root = _kids_of(t2.tree)
    root = _expand(kids, root, corner2, side2, -2)
    t1, rel1 = _rebuild(kids, root)
    back = {d: i for i, d in rel1.items()}
    u1, s1 = corner1
    if u1 not in back:
        raise DomainError(f"invalid corner {corner1}")
    root = _expand(kids, root, (back[u1], s1), side1, -1)
    t, rel = _rebuild(kids, root)
    sign, cyc = t2.cperm.cycle_of(v)
    j = cyc.index(v)
    rot = cyc[j:] + cyc[:j]
    new = (rel[v], rel[-1], rel[-2]) + tuple(rel[x] for x in rot[1:])
    cycles = [(s, tuple(rel[x] for x in c)) for s, c in t2.cperm.cycles if c != cyc]
    return CDecoratedTree(t, CPermutation(cycles + [(sign, new)])), rel[v]
