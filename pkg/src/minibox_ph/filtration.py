"""Flag filtrations on an edge set: clique expansion plus a total order."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import EdgeSet, PointCloud


@dataclass(frozen=True)
class Simplex:
    vertices: tuple
    value: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


def _adjacency_up(edges: EdgeSet, n: int) -> list[set]:
    up = [set() for _ in range(n)]
    for i, j in edges.pairs.tolist():
        up[i].add(j)
    return up


def _edge_values(edges: EdgeSet) -> dict:
    return dict(zip(map(tuple, edges.pairs.tolist()), edges.values.tolist()))


def clique_triangles(edges: EdgeSet, n: int, _up=None, _val=None) -> list[Simplex]:
    """Every vertex triple whose three edges are all present."""
    up = _up if _up is not None else _adjacency_up(edges, n)
    val = _val if _val is not None else _edge_values(edges)
    out = []
    for u in range(n):
        nu = up[u]
        for v in sorted(nu):
            uv = val[(u, v)]
            for w in sorted(nu & up[v]):
                out.append(Simplex((u, v, w), max(uv, val[(u, w)], val[(v, w)])))
    return out


def clique_tetrahedra(edges: EdgeSet, triangles: list[Simplex], n: int | None = None,
                      _up=None, _val=None) -> list[Simplex]:
    """Every 4-clique, extending each triangle by higher-indexed common neighbours."""
    if n is None:
        n = int(edges.pairs.max()) + 1 if len(edges) else 0
    up = _up if _up is not None else _adjacency_up(edges, n)
    val = _val if _val is not None else _edge_values(edges)
    out = []
    for tri in triangles:
        u, v, w = tri.vertices
        for x in sorted(up[u] & up[v] & up[w]):
            value = max(tri.value, val[(u, x)], val[(v, x)], val[(w, x)])
            out.append(Simplex((u, v, w, x), value))
    return out


@dataclass(frozen=True, eq=False)
class Filtration:
    """Simplices in filtration order with their boundary face indices.

    Order key is (value, dimension, vertex tuple). ``boundaries[i]`` lists the
    positions of the codimension-one faces of simplex ``i``; all are < i.
    """

    simplices: list
    values: np.ndarray
    dims: np.ndarray
    boundaries: list
    max_dim: int
    n_vertices: int

    def __len__(self):
        return len(self.simplices)

    def count(self, dim: int) -> int:
        return int(np.sum(self.dims == dim))

    def coo(self):
        """Boundary matrix in coordinate form as (rows, cols) arrays."""
        rows, cols = [], []
        for c, faces in enumerate(self.boundaries):
            rows.extend(faces)
            cols.extend([c] * len(faces))
        return np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64)

    def scaled(self, factor: float) -> "Filtration":
        return Filtration(self.simplices, self.values * factor, self.dims, self.boundaries,
                          self.max_dim, self.n_vertices)


def build_filtration(cloud: PointCloud | int, edges: EdgeSet, max_dim: int = 2) -> Filtration:
    """Flag filtration of ``edges`` up to ``max_dim`` (1, 2 or 3).

    Vertices enter at 0 and every higher simplex at its largest edge value,
    which for radius-valued edges is half its Chebyshev diameter.
    """
    if max_dim not in (1, 2, 3):
        raise ValueError("max_dim must be 1, 2 or 3")
    n = cloud if isinstance(cloud, int) else cloud.n
    if len(edges) and int(edges.pairs.max()) >= n:
        raise ValueError("edge refers to a vertex outside the cloud")
    up = _adjacency_up(edges, n)
    val = _edge_values(edges)
    simplices = [((v,), 0.0) for v in range(n)]
    simplices += [(tuple(e), r) for e, r in val.items()]
    if max_dim >= 2:
        tris = clique_triangles(edges, n, up, val)
        simplices += [(t.vertices, t.value) for t in tris]
        if max_dim >= 3:
            simplices += [(t.vertices, t.value) for t in clique_tetrahedra(edges, tris, n, up, val)]
    simplices.sort(key=lambda s: (s[1], len(s[0]), s[0]))
    position = {verts: i for i, (verts, _) in enumerate(simplices)}
    boundaries = []
    for verts, _ in simplices:
        if len(verts) == 1:
            boundaries.append(())
        else:
            boundaries.append(tuple(sorted(position[verts[:k] + verts[k + 1:]] for k in range(len(verts)))))
    return Filtration(
        simplices=[s[0] for s in simplices],
        values=np.array([s[1] for s in simplices], dtype=np.float64),
        dims=np.array([len(s[0]) - 1 for s in simplices], dtype=np.int64),
        boundaries=boundaries,
        max_dim=max_dim,
        n_vertices=n,
    )


def cech_edges(cloud: PointCloud) -> EdgeSet:
    """All pairs: with Chebyshev balls the Čech and Rips filtrations agree."""
    return EdgeSet.complete(cloud)
