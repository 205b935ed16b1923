from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from unimap.counting import catalan, cperm_count
from unimap.ctrees import (MINUS, PLUS, CDecoratedTree, CPermutation, PlaneTree,
                           SignedSequence, cperm_to_seq, cpermutations, decompose_ctree,
                           extended_remy, extended_remy_inverse, map_to_tree, plane_trees,
                           recompose_ctree, remy_contract, remy_expand, seq_to_cperm,
                           tree_to_map, underlying_graph)
from unimap.maps import DomainError, StructureError, genus

from strategies import ctrees, plane_trees as tree_st


def test_worked_example_both_ways():
    s = SignedSequence("+", (4, 7, 3, 1, 5, 6, 2))
    c = seq_to_cperm(s)
    assert c == CPermutation([("-", (1, 6, 2)), ("-", (3,)), ("+", (4, 7, 5))])
    assert cperm_to_seq(c) == s


def test_trivial_sequence():
    assert seq_to_cperm(SignedSequence("+", (1,))) == CPermutation([("+", (1,))])
    assert cperm_to_seq(CPermutation([("+", (1,))])) == SignedSequence("+", (1,))


def test_errors():
    with pytest.raises(DomainError):
        seq_to_cperm(SignedSequence("+", ()))
    with pytest.raises(StructureError):
        CPermutation([("+", (1, 2))])
    with pytest.raises(StructureError):
        PlaneTree("(()")


@pytest.mark.parametrize("k", range(1, 6))
def test_sequences_biject_onto_cpermutations(k):
    images = {seq_to_cperm(SignedSequence(s, p))
              for p in permutations(range(1, k + 1)) for s in (PLUS, MINUS)}
    assert len(images) == 2 * factorial(k)
    assert images == set(cpermutations(range(1, k + 1)))


@given(st.permutations(range(1, 9)), st.sampled_from("+-"))
def test_sequence_roundtrip(perm, sign):
    s = SignedSequence(sign, tuple(perm))
    assert cperm_to_seq(seq_to_cperm(s)) == s


@pytest.mark.parametrize("g,n,count", [(0, 1, 2), (1, 3, 4), (0, 4, 16), (1, 5, 160)])
def test_cpermutation_counts(g, n, count):
    assert sum(1 for _ in cpermutations(range(1, n + 1), g)) == count == cperm_count(g, n)


@pytest.mark.parametrize("n", range(0, 6))
def test_plane_tree_count(n):
    assert len(list(plane_trees(n))) == catalan(n)


@given(tree_st(1, 8))
def test_tree_map_roundtrip(t):
    m = tree_to_map(t)
    assert genus(m) == 0
    t2, verts = map_to_tree(m)
    assert t2 == t
    assert set(verts.values()) == {frozenset(v) for v in m.vertices}


def test_corner_count():
    t = PlaneTree("(()())")
    assert len(t.corners()) == 2 * t.n_edges + 1
    assert t.children == {1: (2,), 2: (3, 4), 3: (), 4: ()}


def test_remy_single_vertex():
    t, v = remy_expand(PlaneTree(""), (1, 0), "leaf")
    assert t == PlaneTree("()") and v == 2


@given(tree_st(1, 8), st.data())
def test_remy_roundtrip(t, data):
    v = data.draw(st.integers(1, t.n_vertices))
    t2, corner, side = remy_contract(t, v)
    assert t2.n_edges == t.n_edges - 1
    assert side == ("leaf" if not t.children[v] else "stretch")
    assert remy_expand(t2, corner, side) == (t, v)


def test_underlying_graph_identity_is_tree():
    t = PlaneTree("(()())")
    ct = CDecoratedTree(t, CPermutation([("-", (v,)) for v in range(1, 5)]))
    g = underlying_graph(ct)
    assert sorted(tuple(sorted(min(x) for x in e)) for e in g.edges()) == [(1, 2), (2, 3), (2, 4)]


def test_decompose_three_cycle():
    t = CDecoratedTree(PlaneTree("()()"), CPermutation([("+", (1, 3, 2))]))
    t2, marked = decompose_ctree(t, 3)
    assert t2.cperm.cycle_type() == (1, 1, 1)
    assert marked == {frozenset({1}), frozenset({2}), frozenset({3})}
    assert recompose_ctree(t2, marked) == (t, 3)
    with pytest.raises(DomainError):
        decompose_ctree(t, 1)


@given(ctrees(1, 6))
def test_decompose_roundtrip(t):
    for i in t.cperm.non_minimal():
        t2, marked = decompose_ctree(t, i)
        assert t2.genus == t.genus - (len(marked) - 1) // 2
        assert recompose_ctree(t2, marked) == (t, i)


@given(ctrees(1, 6), st.data())
def test_extended_remy_roundtrip(t, data):
    v = data.draw(st.integers(1, t.tree.n_vertices))
    out = extended_remy(t, v)
    if len(t.cperm.cycle_of(v)[1]) == 1:
        assert out[0] == "A" and out[1].n_edges == t.n_edges - 1 and out[1].genus == t.genus
    else:
        assert out[0] == "B" and out[1].n_edges == t.n_edges - 2 and out[1].genus == t.genus - 1
    assert extended_remy_inverse(out) == (t, v)


def test_extended_remy_cardinality_small():
    def T(g, n):
        return catalan(n) * cperm_count(g, n + 1) if n >= 0 and g >= 0 else 0
    assert 3 * T(1, 2) == 24 == 4 * 3 * T(1, 1) + 4 * 1 * 3 * 1 * T(0, 0)


@given(ctrees(0, 5))
def test_json_roundtrip(t):
    assert CDecoratedTree.from_json(t.to_json()) == t
