"""Static layered range tree with fractional cascading.

Levels ``0 .. d-3`` are balanced trees over one coordinate each, every node
carrying an associated tree for the next coordinate. Level ``d-2`` is the
layered level: each node keeps its points sorted by the last coordinate,
with cascade pointers into both children, so one binary search at the top of
the level serves all canonical nodes below it.

The basic query returns the point with minimum last coordinate inside an
orthogonal range whose last side is ``[lo, +inf)``; emptiness of a closed
box is that minimum compared against the box's upper bound.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

import numpy as np

INF = math.inf


def open_to_closed(lo, hi):
    """Closed float box equal, as a set of floats, to the open box ``(lo, hi)``."""
    return (
        [math.nextafter(float(a), INF) for a in lo],
        [math.nextafter(float(b), -INF) for b in hi],
    )


class _CascadeLevel:
    __slots__ = ("keys", "vals", "ids", "pl", "pr")

    def __init__(self, pts: np.ndarray, ids: np.ndarray, axis: int):
        order = np.argsort(pts[ids, axis], kind="stable")
        ids = ids[order]
        self.keys = pts[ids, axis].tolist()
        m = len(ids)
        size = 4 * max(m, 1)
        self.vals = [None] * size
        self.ids = [None] * size
        self.pl = [None] * size
        self.pr = [None] * size
        if m:
            self._build(1, 0, m, ids.tolist(), pts[ids, -1].tolist())

    def _build(self, v, lo, hi, ids, last):
        if hi - lo == 1:
            self.vals[v] = [last[lo]]
            self.ids[v] = [ids[lo]]
            return
        mid = (lo + hi) // 2
        self._build(2 * v, lo, mid, ids, last)
        self._build(2 * v + 1, mid, hi, ids, last)
        lv, li = self.vals[2 * v], self.ids[2 * v]
        rv, ri = self.vals[2 * v + 1], self.ids[2 * v + 1]
        # stable merge; pl/pr[k] = number of child values < merged[k]
        vals, out_ids, pl, pr = [], [], [], []
        i = j = 0
        nl, nr = len(lv), len(rv)
        while i < nl or j < nr:
            if j >= nr or (i < nl and lv[i] <= rv[j]):
                val = lv[i]
                out_ids.append(li[i])
                i += 1
            else:
                val = rv[j]
                out_ids.append(ri[j])
                j += 1
            vals.append(val)
            pl.append(bisect_left(lv, val, 0, i))
            pr.append(bisect_left(rv, val, 0, j))
        pl.append(nl)
        pr.append(nr)
        self.vals[v] = vals
        self.ids[v] = out_ids
        self.pl[v] = pl
        self.pr[v] = pr

    def query(self, lo, hi, last_lo, cap, best):
        """Min last coordinate >= last_lo below ``cap`` among points in range.

        ``best`` is ``[value, index]`` and is updated in place.
        """
        k = len(lo) - 1
        a = bisect_left(self.keys, lo[k])
        b = bisect_right(self.keys, hi[k])
        if a >= b:
            return
        vals, ids, pl, pr = self.vals, self.ids, self.pl, self.pr
        stack = [(1, 0, len(self.keys), bisect_left(vals[1], last_lo))]
        while stack:
            v, nlo, nhi, pos = stack.pop()
            arr = vals[v]
            if pos >= len(arr):
                continue
            z = arr[pos]
            if z >= best[0] or z > cap:
                continue
            if a <= nlo and nhi <= b:
                best[0] = z
                best[1] = ids[v][pos]
                if cap < INF:
                    return
                continue
            mid = (nlo + nhi) // 2
            if a < mid:
                stack.append((2 * v, nlo, mid, pl[v][pos]))
            if b > mid:
                stack.append((2 * v + 1, mid, nhi, pr[v][pos]))


# associated structures this small are scanned instead of built
BUCKET_SIZE = 8


class _Bucket:
    __slots__ = ("rows",)

    def __init__(self, pts: np.ndarray, ids: np.ndarray):
        self.rows = list(zip(pts[ids].tolist(), ids.tolist()))

    def query(self, lo, hi, last_lo, cap, best):
        axes = range(len(lo))
        for row, j in self.rows:
            z = row[-1]
            if z < last_lo or z >= best[0] or z > cap:
                continue
            if all(lo[k] <= row[k] <= hi[k] for k in axes):
                best[0] = z
                best[1] = j
                if cap < INF:
                    return


class _TreeLevel:
    """Balanced tree on one axis, laid out as a perfect binary tree so the
    canonical nodes of a range can be walked bottom-up without a stack."""

    __slots__ = ("keys", "assoc", "axis", "size")

    def __init__(self, pts: np.ndarray, ids: np.ndarray, axis: int, cascade_axis: int):
        order = np.argsort(pts[ids, axis], kind="stable")
        ids = ids[order]
        self.axis = axis
        self.keys = pts[ids, axis].tolist()
        m = len(ids)
        size = 1
        while size < m:
            size *= 2
        self.size = size
        self.assoc = [None] * (2 * size)
        nxt = axis + 1
        level = _CascadeLevel if nxt == cascade_axis else None
        width = 1
        first = size
        while first >= 1:
            for v in range(first, min(2 * first, first + (m + width - 1) // width)):
                sub = ids[(v - first) * width:min((v - first + 1) * width, m)]
                if len(sub) <= BUCKET_SIZE:
                    self.assoc[v] = _Bucket(pts, sub)
                elif level is not None:
                    self.assoc[v] = level(pts, sub, nxt)
                else:
                    self.assoc[v] = _TreeLevel(pts, sub, nxt, cascade_axis)
            first //= 2
            width *= 2

    def query(self, lo, hi, last_lo, cap, best):
        k = self.axis
        size = self.size
        l = bisect_left(self.keys, lo[k]) + size
        r = bisect_right(self.keys, hi[k]) + size
        assoc = self.assoc
        early = cap < INF
        while l < r:
            if l & 1:
                assoc[l].query(lo, hi, last_lo, cap, best)
                # emptiness queries only need one witness
                if early and best[1] >= 0:
                    return
                l += 1
            if r & 1:
                r -= 1
                assoc[r].query(lo, hi, last_lo, cap, best)
                if early and best[1] >= 0:
                    return
            l >>= 1
            r >>= 1


class LayeredRangeTree:
    """Orthogonal range structure on a fixed ``n x d`` point array (d >= 2)."""

    def __init__(self, points):
        pts = np.ascontiguousarray(points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] < 2:
            raise ValueError("LayeredRangeTree needs points of dimension >= 2")
        self.points = pts
        self.n, self.dim = pts.shape
        ids = np.arange(self.n)
        if self.n == 0:
            self._root = None
        elif self.dim == 2:
            self._root = _CascadeLevel(pts, ids, 0)
        else:
            self._root = _TreeLevel(pts, ids, 0, self.dim - 2)

    def _run(self, lo, hi, last_lo, cap):
        best = [INF, -1]
        if self._root is not None:
            self._root.query(lo, hi, last_lo, cap, best)
        return best

    def range_min_last(self, lo, hi, last_lo) -> int:
        """Index of the point with least last coordinate in the range, or -1.

        ``lo``/``hi`` bound the first ``d - 1`` coordinates (closed); the last
        coordinate must be ``>= last_lo``.
        """
        if len(lo) != self.dim - 1 or len(hi) != self.dim - 1:
            raise ValueError("range must bound the first d-1 coordinates")
        return self._run(list(lo), list(hi), last_lo, INF)[1]

    def range_min_z(self, xrange, yrange, zmin):
        """3-d min-z query; the sentinel ``(inf, inf, inf)`` when empty."""
        if self.dim != 3:
            raise ValueError("range_min_z needs 3-d points")
        j = self.range_min_last((xrange[0], yrange[0]), (xrange[1], yrange[1]), zmin)
        if j < 0:
            return (INF, INF, INF), -1
        return tuple(self.points[j].tolist()), j

    def closed_empty(self, lo, hi) -> bool:
        if len(lo) != self.dim or len(hi) != self.dim:
            raise ValueError("box dimension differs from tree dimension")
        if any(a > b for a, b in zip(lo, hi)):
            return True
        best = self._run(list(lo[:-1]), list(hi[:-1]), lo[-1], hi[-1])
        return not best[0] <= hi[-1]

    def range_empty(self, box) -> bool:
        """True iff no point lies strictly inside the open box."""
        lo, hi = open_to_closed(box.lo, box.hi)
        return self.closed_empty(lo, hi)
