from __future__ import annotations

import numpy as np

LEAF_SIZE = 16


class KdTree:
    """Static kd-tree answering open-box emptiness.

    Splits cycle through the axes at the median; every node keeps the
    bounding box of its points so whole subtrees can be discarded (box
    disjoint) or accepted (box strictly inside the query) without descent.
    """

    def __init__(self, points, leaf_size: int = LEAF_SIZE):
        pts = np.ascontiguousarray(points, dtype=np.float64)
        if pts.ndim != 2:
            raise ValueError("points must be an n x d array")
        self.points = pts
        self.n, self.dim = pts.shape
        self.leaf_size = max(1, int(leaf_size))
        # node: (bbox_lo, bbox_hi, left, right, leaf_points)
        self._nodes: list = []
        self._rows = pts.tolist()
        if self.n:
            self._build(np.arange(self.n), 0)

    def _build(self, ids: np.ndarray, depth: int) -> int:
        sub = self.points[ids]
        node = len(self._nodes)
        self._nodes.append(None)
        lo = tuple(sub.min(axis=0).tolist())
        hi = tuple(sub.max(axis=0).tolist())
        if len(ids) <= self.leaf_size:
            self._nodes[node] = (lo, hi, -1, -1, [self._rows[i] for i in ids])
            return node
        axis = depth % self.dim
        order = np.argsort(sub[:, axis], kind="stable")
        half = len(ids) // 2
        left = self._build(ids[order[:half]], depth + 1)
        right = self._build(ids[order[half:]], depth + 1)
        self._nodes[node] = (lo, hi, left, right, None)
        return node

    def leaves(self):
        """Point lists of every leaf (each point appears in exactly one)."""
        return [node[4] for node in self._nodes if node[4] is not None]

    def range_empty(self, box) -> bool:
        """True iff no stored point lies strictly inside the open ``box``."""
        if box.dim != self.dim:
            raise ValueError("box dimension differs from tree dimension")
        return self.open_empty(box.lo, box.hi)

    def open_empty(self, qlo, qhi) -> bool:
        if not self._nodes:
            return True
        axes = range(self.dim)
        nodes = self._nodes
        stack = [0]
        while stack:
            blo, bhi, left, right, rows = nodes[stack.pop()]
            disjoint = False
            inside = True
            for k in axes:
                a, b = qlo[k], qhi[k]
                if bhi[k] <= a or blo[k] >= b:
                    disjoint = True
                    break
                if inside and (blo[k] <= a or bhi[k] >= b):
                    inside = False
            if disjoint:
                continue
            if inside:
                return False
            if rows is not None:
                for row in rows:
                    for k in axes:
                        if not qlo[k] < row[k] < qhi[k]:
                            break
                    else:
                        return False
                continue
            stack.append(left)
            stack.append(right)
        return True
