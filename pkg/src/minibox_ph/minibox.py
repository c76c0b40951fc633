"""Minibox edges: pairs whose open bounding box holds no other point.

Every strategy returns the same canonical :class:`EdgeSet`; the brute force
scan is the reference the others are tested against.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .geometry import EdgeSet, PointCloud, duplicated_axes
from .search import KdTree, LayeredRangeTree, OrderedStaircase, PrioritySearchTree, RectItem
from .search.pst import SENTINEL
from .search.range_tree import open_to_closed

INF = math.inf


class Strategy(str, enum.Enum):
    BRUTE = "brute"
    SWEEP2D = "sweep2d"
    STAIRCASE3D = "staircase3d"
    PST3D = "pst3d"
    RANGETREE = "rangetree"
    KDTREE = "kdtree"

    @classmethod
    def auto(cls, dim: int) -> "Strategy":
        if dim == 2:
            return cls.SWEEP2D
        if dim == 3:
            return cls.PST3D
        if dim >= 4:
            return cls.RANGETREE
        return cls.BRUTE

    def supports(self, dim: int) -> bool:
        if self is Strategy.SWEEP2D:
            return dim == 2
        if self in (Strategy.STAIRCASE3D, Strategy.PST3D):
            return dim == 3
        if self in (Strategy.RANGETREE, Strategy.KDTREE):
            return dim >= 2
        return True


class StrategyError(ValueError):
    pass


def _require_distinct(cloud: PointCloud):
    bad = duplicated_axes(cloud.points)
    if bad:
        raise ValueError(f"points share coordinates on axes {bad}; preprocess the cloud first")


def _require_dim(cloud: PointCloud, strategy: Strategy):
    if not strategy.supports(cloud.dim):
        raise StrategyError(f"strategy {strategy.value!r} does not support dimension {cloud.dim}")


def minibox_edges_brute(cloud: PointCloud) -> EdgeSet:
    """Test every pair against every point; O(d n^3) work."""
    pts = cloud.points
    n = cloud.n
    pairs = []
    for i in range(n - 1):
        q = pts[i + 1:]
        lo = np.minimum(pts[i], q)
        hi = np.maximum(pts[i], q)
        inside = (lo[:, None, :] < pts[None, :, :]) & (pts[None, :, :] < hi[:, None, :])
        occupied = inside.all(axis=2).any(axis=1)
        for off in np.flatnonzero(~occupied).tolist():
            pairs.append((i, i + 1 + off))
    return EdgeSet.from_pairs(pairs, cloud=cloud)


class _MinSegmentTree:
    """Point-update, range-min over fixed positions; stores (value, position)."""

    def __init__(self, size: int):
        m = 1
        while m < max(size, 1):
            m *= 2
        self.m = m
        self.tree = [(INF, -1)] * (2 * m)

    def set(self, pos: int, value: float):
        i = pos + self.m
        tree = self.tree
        tree[i] = (value, pos)
        i >>= 1
        while i:
            a, b = tree[2 * i], tree[2 * i + 1]
            tree[i] = a if a <= b else b
            i >>= 1

    def min(self, lo: int, hi: int):
        """Minimum over positions ``[lo, hi)``."""
        best = (INF, -1)
        tree = self.tree
        lo += self.m
        hi += self.m
        while lo < hi:
            if lo & 1:
                if tree[lo] < best:
                    best = tree[lo]
                lo += 1
            if hi & 1:
                hi -= 1
                if tree[hi] < best:
                    best = tree[hi]
            lo >>= 1
            hi >>= 1
        return best


def _direct_dominance_2d(xs, ys) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` where point j directly dominates point i.

    Sweeps right to left keeping the processed points in a min-x segment tree
    over y ranks; the dominators of ``p`` are then peeled off one by one as
    the leftmost processed point above ``p`` and below the previous one.
    """
    n = len(xs)
    yrank_order = sorted(range(n), key=lambda i: (ys[i], i))
    rank = [0] * n
    for r, i in enumerate(yrank_order):
        rank[i] = r
    tree = _MinSegmentTree(n)
    out = []
    for i in sorted(range(n), key=lambda i: (xs[i], i), reverse=True):
        r = rank[i]
        ceiling = n
        while True:
            _, pos = tree.min(r + 1, ceiling)
            if pos < 0:
                break
            out.append((i, yrank_order[pos]))
            ceiling = pos
        tree.set(r, xs[i])
    return out


def minibox_edges_2d(cloud: PointCloud) -> EdgeSet:
    """Direct dominance sweep on the cloud and on its mirror image in y."""
    _require_dim(cloud, Strategy.SWEEP2D)
    _require_distinct(cloud)
    xs = cloud.points[:, 0].tolist()
    ys = cloud.points[:, 1].tolist()
    pairs = _direct_dominance_2d(xs, ys)
    pairs += _direct_dominance_2d(xs, [-y for y in ys])
    return EdgeSet.from_pairs(pairs, cloud=cloud)


def _staircase_sweep_anchor(i, order, xs, ys, on_accept=None):
    """Inner loop of the plane sweep for one anchor ``order[i]``.

    Returns the indices q above the anchor with an empty minibox. The four
    quadrants of the sweep plane share one code path by folding each point
    into the first quadrant with absolute offsets.
    """
    a = order[i]
    px, py = xs[a], ys[a]
    quadrants = [OrderedStaircase() for _ in range(4)]
    found = []
    for j in order[i + 1:]:
        dx = xs[j] - px
        dy = ys[j] - py
        quad = (2 if dx < 0 else 0) + (1 if dy < 0 else 0)
        if quadrants[quad].insert((abs(dx), abs(dy))):
            found.append(j)
            if on_accept is not None:
                on_accept(j, quad, quadrants[quad])
    return found


def minibox_edges_3d_staircase(cloud: PointCloud) -> EdgeSet:
    """Plane sweep in z per anchor with four staircases; O(n^2 log n), O(n) space."""
    _require_dim(cloud, Strategy.STAIRCASE3D)
    _require_distinct(cloud)
    pts = cloud.points
    order = np.argsort(pts[:, 2], kind="stable").tolist()
    xs = pts[:, 0].tolist()
    ys = pts[:, 1].tolist()
    pairs = []
    for i in range(len(order)):
        a = order[i]
        pairs.extend((a, j) for j in _staircase_sweep_anchor(i, order, xs, ys))
    return EdgeSet.from_pairs(pairs, cloud=cloud)


class DirectDominance3D:
    """Priority-search-tree sweep reporting the points directly dominating
    each point of a fixed 3-d array, all queries going to one range tree."""

    def __init__(self, points):
        pts = np.ascontiguousarray(points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError("DirectDominance3D needs 3-d points")
        self.points = pts
        self.rows = pts.tolist()
        self.tree = LayeredRangeTree(pts)
        self.pst = PrioritySearchTree(pts[:, 0].tolist())

    def _min_z(self, x1, x2, y1, y2, zmin):
        # rectangle sides sit on coordinates of already known points: keep open
        (lx, ly), (hx, hy) = open_to_closed((x1, y1), (x2, y2))
        j = self.tree.range_min_last((lx, ly), (hx, hy), math.nextafter(zmin, INF))
        if j < 0:
            return SENTINEL, -1
        return tuple(self.rows[j]), j

    def dominators(self, i: int, trace=None) -> list[int]:
        px, py, pz = self.rows[i]
        point, j = self._min_z(px, INF, py, INF, pz)
        if j < 0:
            return []
        pst = self.pst
        pst.clear()
        pst.insert(RectItem(px, INF, py, INF, point, j))
        found = []
        while not pst.root.marked:
            res = pst.pop_min()
            q = res.item
            found.append(q.index)
            qz = q.point[2]
            left_pt, left_j = self._min_z(*res.left, qz)
            right_pt, right_j = self._min_z(*res.right, qz)
            new_left = RectItem(*res.left, left_pt, left_j)
            new_right = RectItem(*res.right, right_pt, right_j)
            pst.insert(new_left)
            pst.insert(new_right)
            if trace is not None:
                trace(res, new_left, new_right)
        pst.clear()
        return found

    def pairs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self.rows)):
            out.extend((i, j) for j in self.dominators(i))
        return out


_REFLECTIONS_3D = ((1.0, 1.0, 1.0), (-1.0, 1.0, 1.0), (1.0, -1.0, 1.0), (-1.0, -1.0, 1.0))


def minibox_edges_3d_pst(cloud: PointCloud) -> EdgeSet:
    """Direct dominance pairs of the four xy-reflections of the cloud."""
    _require_dim(cloud, Strategy.PST3D)
    _require_distinct(cloud)
    pairs = []
    for signs in _REFLECTIONS_3D:
        pairs.extend(DirectDominance3D(cloud.points * np.array(signs)).pairs())
    return EdgeSet.from_pairs(pairs, cloud=cloud)


def minibox_edges_highd(cloud: PointCloud, strategy: Strategy | str = Strategy.RANGETREE) -> EdgeSet:
    """Query every pair's open minibox against a range tree or kd-tree."""
    strategy = Strategy(strategy)
    if strategy not in (Strategy.RANGETREE, Strategy.KDTREE):
        raise StrategyError(f"{strategy.value!r} is not a pairwise range-query strategy")
    _require_dim(cloud, strategy)
    _require_distinct(cloud)
    pts = cloud.points
    n = cloud.n
    pairs = []
    if strategy is Strategy.RANGETREE:
        # open faces become closed ones one ulp inside
        empty = LayeredRangeTree(pts).closed_empty
        up = np.nextafter(pts, INF)
        down = np.nextafter(pts, -INF)
    else:
        empty = KdTree(pts).open_empty
        up = down = pts
    for i in range(n - 1):
        below = pts[i] < pts[i + 1:]
        lo = np.where(below, up[i], up[i + 1:]).tolist()
        hi = np.where(below, down[i + 1:], down[i]).tolist()
        for off, (a, b) in enumerate(zip(lo, hi)):
            if empty(a, b):
                pairs.append((i, i + 1 + off))
    return EdgeSet.from_pairs(pairs, cloud=cloud)


def direct_dominance_pairs(cloud: PointCloud) -> EdgeSet:
    """Pairs where one point dominates the other with nothing in between."""
    _require_distinct(cloud)
    if cloud.dim == 2:
        pairs = _direct_dominance_2d(cloud.points[:, 0].tolist(), cloud.points[:, 1].tolist())
    elif cloud.dim == 3:
        pairs = DirectDominance3D(cloud.points).pairs()
    else:
        pairs = _direct_dominance_scan(cloud.points)
    return EdgeSet.from_pairs(pairs, cloud=cloud)


def _direct_dominance_scan(pts: np.ndarray) -> list[tuple[int, int]]:
    above = (pts[None, :, :] > pts[:, None, :]).all(axis=2)  # above[i, j]: j dominates i
    out = []
    for i in range(len(pts)):
        for j in np.flatnonzero(above[i]).tolist():
            if not np.any(above[i] & above[:, j]):
                out.append((i, j))
    return out


_DISPATCH = {
    Strategy.BRUTE: minibox_edges_brute,
    Strategy.SWEEP2D: minibox_edges_2d,
    Strategy.STAIRCASE3D: minibox_edges_3d_staircase,
    Strategy.PST3D: minibox_edges_3d_pst,
}


def minibox_edges(cloud: PointCloud, strategy: Strategy | str = "auto") -> EdgeSet:
    if cloud.n < 2:
        return EdgeSet.from_pairs([], [])
    strategy = Strategy.auto(cloud.dim) if strategy == "auto" else Strategy(strategy)
    _require_dim(cloud, strategy)
    if strategy in _DISPATCH:
        return _DISPATCH[strategy](cloud)
    return minibox_edges_highd(cloud, strategy)
