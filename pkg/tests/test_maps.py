import pytest
from hypothesis import given

from unimap.maps import (DomainError, RotationMap, StructureError, canonical, corner_labels,
                         find_trisections, genus, merge_vertices, psi, psi_inverse,
                         slice_trisection, underlying_graph, vertex_partition)
from unimap.ctrees import PlaneTree, plane_trees, tree_to_map
from unimap import oracle

from strategies import unicellular_maps

TORUS2 = RotationMap.from_involution((2, 3, 0, 1))  # the one-vertex torus map


def test_single_edge():
    m = RotationMap.from_involution((1, 0))
    assert genus(m) == 0
    assert m.n_vertices == 2
    assert sorted(corner_labels(m)) == [1, 2]


def test_torus_two_edges():
    assert genus(TORUS2) == 1
    assert TORUS2.n_vertices == 1 and TORUS2.n_faces == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_plane_trees_have_genus_zero(n):
    for t in plane_trees(n):
        m = tree_to_map(t)
        assert genus(m) == 0 and m.n_vertices == n + 1
        assert find_trisections(m) == []


def test_structural_errors():
    with pytest.raises(StructureError):
        RotationMap((0, 1), (0, 1))  # alpha has fixed points
    with pytest.raises(StructureError):
        RotationMap((0, 0), (1, 0))  # sigma not a bijection
    with pytest.raises(StructureError):
        RotationMap((0, 1, 2, 3), (1, 0, 3, 2))  # two components
    with pytest.raises(StructureError):
        RotationMap.from_json('{"n": 1, "sigma": [1]}')


def test_corner_labels_need_one_face():
    two_faces = RotationMap((1, 0), (1, 0))  # a single loop
    assert two_faces.n_faces == 2
    with pytest.raises(DomainError):
        corner_labels(two_faces)


def test_json_roundtrip_is_one_based():
    text = TORUS2.to_json()
    assert text == '{"n": 2, "sigma": [4, 1, 2, 3], "alpha": [3, 4, 1, 2], "root": 1}'
    assert RotationMap.from_json(text) == TORUS2


@given(unicellular_maps())
def test_trisections_count_is_twice_genus(m):
    assert len(find_trisections(m)) == 2 * genus(m)


@given(unicellular_maps())
def test_canonical_is_idempotent(m):
    assert canonical(m) == m
    # relabel the half-edges and come back
    size = 2 * m.n_edges
    shift = [(h + 3) % size for h in range(size)]
    inv = {v: k for k, v in enumerate(shift)}
    moved = RotationMap(tuple(shift[m.sigma[inv[h]]] for h in range(size)),
                        tuple(shift[m.alpha[inv[h]]] for h in range(size)), shift[m.root])
    assert canonical(moved) == m


@given(unicellular_maps(2, 6))
def test_slicing_drops_genus_by_one(m):
    for tau in find_trisections(m):
        m2, c1, c2, c3 = slice_trisection(m, tau)
        assert genus(m2) == genus(m) - 1
        assert m2.n_vertices == m.n_vertices + 2
        assert len({m2.vertex_of(c) for c in (c1, c2, c3)}) == 3


def test_slice_rejects_non_trisection():
    corner = next(h for h in range(4) if h not in find_trisections(TORUS2))
    with pytest.raises(DomainError):
        slice_trisection(TORUS2, corner)


def test_psi_genus_one_two_edges():
    for tau in find_trisections(TORUS2):
        m2, marked = psi(TORUS2, tau)
        assert genus(m2) == 0 and m2.n_edges == 2
        assert len(marked) == 3 == m2.n_vertices


def test_psi_inverse_three_vertices_of_path():
    path = tree_to_map(PlaneTree("()()"))
    m, tau = psi_inverse(path, [frozenset(v) for v in path.vertices])
    assert canonical(m) == TORUS2
    assert tau in find_trisections(m)


def test_psi_inverse_rejects_even_sets():
    path = tree_to_map(next(plane_trees(2)))
    with pytest.raises(DomainError):
        psi_inverse(path, [frozenset(v) for v in path.vertices][:2])
    with pytest.raises(DomainError):
        psi_inverse(path, [frozenset(path.vertices[0])])


@given(unicellular_maps(2, 6))
def test_psi_roundtrip_and_graph(m):
    for tau in find_trisections(m):
        m2, marked = psi(m, tau)
        assert len(marked) % 2 == 1 and len(marked) >= 3
        assert genus(m2) == genus(m) - (len(marked) - 1) // 2
        back, tau2 = psi_inverse(m2, marked)
        assert canonical(back) == m and tau2 == tau
        assert merge_vertices(vertex_partition(m2), marked) == vertex_partition(m)


def test_underlying_graph():
    g = underlying_graph(TORUS2)
    assert g.number_of_nodes() == 1 and g.number_of_edges() == 2
    assert g.graph["root"] == TORUS2.vertex_of(0)


def test_all_maps_with_four_edges():
    maps = list(oracle.unicellular_maps(4))
    assert len(maps) == 105
    assert sorted(genus(m) for m in maps).count(2) == 21
