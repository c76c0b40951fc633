from __future__ import annotations

from sortedcontainers import SortedList


class OrderedStaircase:
    """Mutually non-dominating 2-d points kept in x order.

    Sorted by x, the stored y values strictly decrease. Inserting a point
    tells whether the open box spanned by the origin and the point is free of
    every point offered so far (stored or not).
    """

    __slots__ = ("_pts",)

    def __init__(self, points=()):
        self._pts = SortedList()
        for pt in points:
            self.insert(pt)

    def __len__(self):
        return len(self._pts)

    def __iter__(self):
        return iter(self._pts)

    def points(self) -> list[tuple[float, float]]:
        return list(self._pts)

    def predecessor(self, x: float):
        i = self._pts.bisect_left((x, float("-inf")))
        return self._pts[i - 1] if i else None

    def insert(self, pt) -> bool:
        """Offer ``pt``; return True (and store it) iff its box is empty.

        The box is empty exactly when ``pt`` does not dominate its
        x-predecessor; on success every stored point dominating ``pt`` is
        dropped.
        """
        x, y = pt
        pts = self._pts
        i = pts.bisect_left((x, float("-inf")))
        if i and pts[i - 1][1] < y:
            return False
        j = i
        n = len(pts)
        while j < n and pts[j][1] > y:
            j += 1
        if j > i:
            del pts[i:j]
        pts.add((x, y))
        return True

    def is_staircase(self) -> bool:
        ys = [p[1] for p in self._pts]
        return all(a > b for a, b in zip(ys, ys[1:]))
