import itertools

import numpy as np
import pytest

from minibox_ph.filtration import build_filtration, clique_tetrahedra, clique_triangles
from minibox_ph.geometry import EdgeSet, diameter_linf
from minibox_ph.minibox import minibox_edges

from conftest import cloud_of, random_cloud


def _graph(pairs, values=None):
    values = values if values is not None else [1.0] * len(pairs)
    return EdgeSet.from_pairs(pairs, values)


def test_triangle_graph():
    tris = clique_triangles(_graph([(0, 1), (1, 2), (0, 2)], [1.0, 3.0, 2.0]), 3)
    assert [(t.vertices, t.value) for t in tris] == [((0, 1, 2), 3.0)]


def test_path_has_no_triangles():
    assert clique_triangles(_graph([(0, 1), (1, 2), (2, 3)]), 4) == []


def test_k4_and_k4_minus_edge():
    k4 = _graph(list(itertools.combinations(range(4), 2)), [1, 2, 3, 4, 5, 6])
    tets = clique_tetrahedra(k4, clique_triangles(k4, 4), 4)
    assert [(t.vertices, t.value) for t in tets] == [((0, 1, 2, 3), 6.0)]
    k4m = _graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert clique_tetrahedra(k4m, clique_triangles(k4m, 4), 4) == []


def _cliques_brute(edges, n, size):
    present = edges.as_set()
    out = []
    for verts in itertools.combinations(range(n), size):
        if all(e in present for e in itertools.combinations(verts, 2)):
            out.append(verts)
    return out


def test_triangles_and_tetrahedra_match_brute_force():
    c = random_cloud(50, 3, 7)
    edges = minibox_edges(c)
    tris = clique_triangles(edges, c.n)
    assert sorted(t.vertices for t in tris) == _cliques_brute(edges, c.n, 3)
    tets = clique_tetrahedra(edges, tris, c.n)
    assert sorted(t.vertices for t in tets) == _cliques_brute(edges, c.n, 4)


def test_single_point():
    f = build_filtration(cloud_of([[1.0, 2.0]]), EdgeSet.from_pairs([], []), 2)
    assert f.simplices == [(0,)] and f.values.tolist() == [0.0]


def test_two_points():
    c = cloud_of([[0.0, 0.0], [2.0, 0.5]])
    f = build_filtration(c, EdgeSet.complete(c), 2)
    assert f.simplices == [(0,), (1,), (0, 1)]
    assert f.values.tolist() == [0.0, 0.0, 1.0]
    assert f.boundaries[2] == (0, 1)


@pytest.mark.parametrize("max_dim", [1, 2, 3])
def test_filtration_invariants(max_dim):
    c = random_cloud(25, 3, max_dim)
    edges = minibox_edges(c)
    f = build_filtration(c, edges, max_dim)
    keys = [(v, len(s), s) for s, v in zip(f.simplices, f.values.tolist())]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    present = set(f.simplices)
    edge_set = edges.as_set()
    for idx, (s, faces) in enumerate(zip(f.simplices, f.boundaries)):
        assert len(faces) == (len(s) if len(s) > 1 else 0)
        for fi in faces:
            assert fi < idx
            assert f.values[fi] <= f.values[idx]
            assert set(f.simplices[fi]) < set(s)
        # flag property
        if len(s) >= 2:
            assert all(e in edge_set for e in itertools.combinations(s, 2))
    for size in range(3, max_dim + 2):
        assert sum(1 for s in f.simplices if len(s) == size) == len(_cliques_brute(edges, c.n, size))
    assert all(s in present for s in f.simplices)
    rows, cols = f.coo()
    assert len(rows) == sum(len(b) for b in f.boundaries) and np.all(rows < cols)


def test_cech_values_are_half_diameters():
    c = random_cloud(12, 2, 3)
    f = build_filtration(c, EdgeSet.complete(c), 3)
    assert len(f) == 12 + 66 + 220 + 495
    for s, v in zip(f.simplices, f.values.tolist()):
        assert v == diameter_linf(c.points[list(s)]) / 2


def test_diameter_scaling():
    c = random_cloud(10, 2, 0)
    f = build_filtration(c, EdgeSet.complete(c), 2)
    assert np.array_equal(f.scaled(2.0).values, f.values * 2)


def test_bad_arguments():
    c = random_cloud(3, 2, 0)
    with pytest.raises(ValueError):
        build_filtration(c, EdgeSet.complete(c), 4)
    with pytest.raises(ValueError):
        build_filtration(c, _graph([(0, 5)]), 2)
