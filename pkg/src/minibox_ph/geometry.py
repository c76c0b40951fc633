"""Chebyshev-metric primitives: distances, axis-parallel boxes, miniboxes and
the per-axis de-duplication step every edge algorithm relies on."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_RELATIVE_EPSILON = 1e-9
MAX_PERTURBATION_ROUNDS = 64


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Immutable ``n x d`` array of float64 coordinates."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64, copy=True)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1) if pts.size else pts.reshape(0, 1)
        if pts.ndim != 2:
            raise DimensionMismatch("points must form a 2-d array")
        if pts.shape[1] < 1:
            raise DimensionMismatch("points need at least one coordinate")
        if not np.all(np.isfinite(pts)):
            raise ValueError("coordinates must be finite")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.points[i]

    def has_distinct_coordinates(self) -> bool:
        return not duplicated_axes(self.points)


def dist_linf(p: Sequence[float], q: Sequence[float]) -> float:
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise DimensionMismatch(f"dimension mismatch: {p.shape} vs {q.shape}")
    if p.size == 0:
        return 0.0
    return float(np.max(np.abs(p - q)))


def diameter_linf(points) -> float:
    pts = np.asarray(points, dtype=np.float64)
    if len(pts) < 2:
        return 0.0
    return float(np.max(pts.max(axis=0) - pts.min(axis=0)))


@dataclass(frozen=True)
class Box:
    """Product of intervals, each endpoint individually open or closed.

    An axis with ``lo > hi``, or ``lo == hi`` with an open endpoint, makes the
    whole box empty.
    """

    lo: tuple
    hi: tuple
    lo_closed: tuple
    hi_closed: tuple

    def __post_init__(self):
        d = len(self.lo)
        if not (len(self.hi) == len(self.lo_closed) == len(self.hi_closed) == d):
            raise DimensionMismatch("inconsistent box dimensions")
        object.__setattr__(self, "lo", tuple(float(v) for v in self.lo))
        object.__setattr__(self, "hi", tuple(float(v) for v in self.hi))
        object.__setattr__(self, "lo_closed", tuple(bool(v) for v in self.lo_closed))
        object.__setattr__(self, "hi_closed", tuple(bool(v) for v in self.hi_closed))

    @classmethod
    def closed(cls, lo, hi) -> "Box":
        d = len(lo)
        return cls(tuple(lo), tuple(hi), (True,) * d, (True,) * d)

    @classmethod
    def open(cls, lo, hi) -> "Box":
        d = len(lo)
        return cls(tuple(lo), tuple(hi), (False,) * d, (False,) * d)

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def is_closed(self) -> bool:
        return all(self.lo_closed) and all(self.hi_closed)

    @property
    def is_open(self) -> bool:
        return not any(self.lo_closed) and not any(self.hi_closed)

    def _axis_empty(self, k: int) -> bool:
        lo, hi = self.lo[k], self.hi[k]
        if lo > hi:
            return True
        return lo == hi and not (self.lo_closed[k] and self.hi_closed[k])

    @property
    def is_empty(self) -> bool:
        return any(self._axis_empty(k) for k in range(self.dim))

    def degenerate_axes(self) -> list[int]:
        return [k for k in range(self.dim) if self.lo[k] == self.hi[k] and not self._axis_empty(k)]

    def contains(self, point) -> bool:
        if len(point) != self.dim:
            raise DimensionMismatch("point and box dimensions differ")
        for k, x in enumerate(point):
            lo, hi = self.lo[k], self.hi[k]
            if x < lo or x > hi:
                return False
            if x == lo and not self.lo_closed[k]:
                return False
            if x == hi and not self.hi_closed[k]:
                return False
        return True

    def issubset(self, other: "Box") -> bool:
        if other.dim != self.dim:
            raise DimensionMismatch("box dimensions differ")
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        for k in range(self.dim):
            if self.lo[k] < other.lo[k]:
                return False
            if self.lo[k] == other.lo[k] and self.lo_closed[k] and not other.lo_closed[k]:
                return False
            if self.hi[k] > other.hi[k]:
                return False
            if self.hi[k] == other.hi[k] and self.hi_closed[k] and not other.hi_closed[k]:
                return False
        return True


def closed_ball(center, radius: float) -> Box:
    c = [float(v) for v in center]
    return Box.closed([v - radius for v in c], [v + radius for v in c])


def open_ball(center, radius: float) -> Box:
    c = [float(v) for v in center]
    return Box.open([v - radius for v in c], [v + radius for v in c])


def minibox(p, q) -> Box:
    """Open bounding box of ``p`` and ``q``; empty when they share a coordinate."""
    if len(p) != len(q):
        raise DimensionMismatch("dimension mismatch")
    lo = [min(a, b) for a, b in zip(p, q)]
    hi = [max(a, b) for a, b in zip(p, q)]
    return Box.open(lo, hi)


def box_intersection(boxes: Iterable[Box]) -> Box:
    boxes = list(boxes)
    if not boxes:
        raise ValueError("need at least one box")
    d = boxes[0].dim
    if any(b.dim != d for b in boxes):
        raise DimensionMismatch("boxes of different dimensions")
    lo, hi, lo_c, hi_c = [], [], [], []
    for k in range(d):
        a = max(b.lo[k] for b in boxes)
        z = min(b.hi[k] for b in boxes)
        # a shared endpoint stays closed only if closed in every box attaining it
        lo.append(a)
        lo_c.append(all(b.lo_closed[k] for b in boxes if b.lo[k] == a))
        hi.append(z)
        hi_c.append(all(b.hi_closed[k] for b in boxes if b.hi[k] == z))
    return Box(tuple(lo), tuple(hi), tuple(lo_c), tuple(hi_c))


def thicken(box: Box, eps: float) -> Box:
    """Set of points within Chebyshev distance ``eps`` of a closed box."""
    if eps < 0:
        raise ValueError("eps must be non-negative")
    if not box.is_closed:
        raise ValueError("only closed boxes can be thickened")
    if box.is_empty:
        return box
    return Box.closed([v - eps for v in box.lo], [v + eps for v in box.hi])


def witness_box(p, q) -> Box:
    """Closed box of points at distance exactly half of d(p, q) from both.

    Axes where rounding would invert the interval (those attaining, or
    within an ulp of, the maximum gap) collapse onto the midpoint.
    """
    r = dist_linf(p, q) / 2.0
    box = box_intersection([closed_ball(p, r), closed_ball(q, r)])
    lo, hi = list(box.lo), list(box.hi)
    for k, (a, b) in enumerate(zip(p, q)):
        if abs(a - b) / 2.0 == r or lo[k] > hi[k]:
            lo[k] = hi[k] = (a + b) / 2.0
    return Box.closed(lo, hi)


def duplicated_axes(points: np.ndarray) -> list[int]:
    """Axes on which at least two points share a coordinate value."""
    pts = np.asarray(points)
    bad = []
    for k in range(pts.shape[1] if pts.ndim == 2 else 0):
        col = np.sort(pts[:, k])
        if col.size > 1 and np.any(col[1:] == col[:-1]):
            bad.append(k)
    return bad


def default_epsilon(points: np.ndarray) -> float:
    pts = np.asarray(points, dtype=np.float64)
    extent = float(np.max(pts.max(axis=0) - pts.min(axis=0))) if len(pts) else 0.0
    return DEFAULT_RELATIVE_EPSILON * (extent if extent > 0 else 1.0)


def preprocess(cloud: PointCloud, epsilon: float | None = None, rng_seed: int = 0) -> PointCloud:
    """Return a cloud whose points are pairwise distinct on every axis.

    Each axis carrying a repeated value gets i.i.d. offsets drawn from
    ``uniform(-epsilon, epsilon)``. Redraws always start from the original
    coordinates, so no coordinate moves by more than ``epsilon``.
    """
    pts = cloud.points
    bad = duplicated_axes(pts)
    if not bad:
        return cloud
    if epsilon is None:
        epsilon = default_epsilon(pts)
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    rng = np.random.default_rng(rng_seed)
    out = np.array(pts, copy=True)
    for k in bad:
        for _ in range(MAX_PERTURBATION_ROUNDS):
            col = pts[:, k] + rng.uniform(-epsilon, epsilon, size=len(pts))
            if np.unique(col).size == col.size:
                out[:, k] = col
                break
        else:
            raise RuntimeError(
                f"axis {k}: coordinates still collide after {MAX_PERTURBATION_ROUNDS} "
                f"perturbation rounds with epsilon={epsilon!r}; increase epsilon"
            )
    logger.debug("perturbed axes %s with epsilon=%g", bad, epsilon)
    return PointCloud(out)


class EdgeSet:
    """Canonical edge list: ``(i, j)`` with ``i < j`` in lexicographic order,
    each with its filtration radius (half the Chebyshev length)."""

    __slots__ = ("pairs", "values")

    def __init__(self, pairs: np.ndarray, values: np.ndarray):
        self.pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        self.values = np.asarray(values, dtype=np.float64).reshape(-1)
        if len(self.pairs) != len(self.values):
            raise ValueError("pairs and values differ in length")
        self.pairs.setflags(write=False)
        self.values.setflags(write=False)

    @classmethod
    def from_pairs(cls, pairs, values=None, cloud: PointCloud | None = None) -> "EdgeSet":
        """Canonicalize arbitrary (possibly repeated or reversed) pairs.

        Values come from ``cloud`` when given, else from ``values``.
        """
        arr = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs, dtype=np.int64)
        arr = arr.reshape(-1, 2)
        if np.any(arr[:, 0] == arr[:, 1]):
            raise ValueError("self-loops are not edges")
        if cloud is None and values is None:
            raise ValueError("need either values or a cloud")
        if cloud is None:
            vals = np.asarray(values, dtype=np.float64).reshape(-1)
        canon = np.sort(arr, axis=1)
        if len(canon):
            keyed = np.unique(canon, axis=0, return_index=True)
            canon, first = keyed
        else:
            first = np.zeros(0, dtype=np.int64)
        if cloud is not None:
            vals = edge_radii(cloud.points, canon)
        else:
            vals = vals[first]
        return cls(canon, vals)

    @classmethod
    def complete(cls, cloud: PointCloud) -> "EdgeSet":
        i, j = np.triu_indices(cloud.n, k=1)
        pairs = np.stack([i, j], axis=1)
        return cls(pairs, edge_radii(cloud.points, pairs))

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return np.array_equal(self.pairs, other.pairs) and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"EdgeSet(k={len(self)})"

    def as_list(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in self.pairs.tolist()]

    def as_set(self) -> set[tuple[int, int]]:
        return set(self.as_list())

    def issubset(self, other: "EdgeSet") -> bool:
        return self.as_set() <= other.as_set()


def edge_radii(points: np.ndarray, pairs: np.ndarray) -> np.ndarray:
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if not len(pairs):
        return np.zeros(0)
    diff = np.abs(points[pairs[:, 0]] - points[pairs[:, 1]])
    return diff.max(axis=1) / 2.0
