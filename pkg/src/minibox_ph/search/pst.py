"""Dynamic priority search tree over a fixed, balanced skeleton of x keys.

Every stored item lives on the root-to-leaf path of its own key slot and the
tree is a min-heap on ``z`` along every such path (McCreight's layout with a
static skeleton). The skeleton is a complete binary tree over the sorted
candidate keys, so insert, delete and pop are O(log n) in the worst case.
A sorted index of the occupied keys provides the in-order walk needed to
find the rectangles right of a popped point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from sortedcontainers import SortedList

INF = math.inf
SENTINEL = (INF, INF, INF)


@dataclass(order=False)
class RectItem:
    """A point together with the vertical rectangle it was drawn from."""

    x1: float
    x2: float
    y1: float
    y2: float
    point: tuple = SENTINEL
    index: int = -1
    slot: int = field(default=-1, compare=False)

    @property
    def z(self) -> float:
        return self.point[2]

    @property
    def marked(self) -> bool:
        return self.point[2] == INF

    @property
    def rect(self) -> tuple:
        return (self.x1, self.x2, self.y1, self.y2)

    def key(self):
        return (self.point[2], self.slot)


class PopResult(NamedTuple):
    item: RectItem
    left: tuple
    right: tuple
    deleted: list


class EmptyRootError(LookupError):
    pass


class PrioritySearchTree:
    def __init__(self, keys):
        keys = sorted(set(keys))
        self._slot = {k: i for i, k in enumerate(keys)}
        size = 1
        while size < max(len(keys), 1):
            size *= 2
        self._leaves = size
        self._height = size.bit_length() - 1
        self._nodes: dict[int, RectItem] = {}
        self._by_slot: dict[int, RectItem] = {}
        self._order = SortedList()

    def __len__(self):
        return len(self._by_slot)

    def __bool__(self):
        return bool(self._by_slot)

    def clear(self):
        self._nodes.clear()
        self._by_slot.clear()
        self._order.clear()

    @property
    def root(self) -> RectItem | None:
        return self._nodes.get(1)

    def _toward(self, node: int, slot: int) -> int:
        depth = node.bit_length() - 1
        return (self._leaves + slot) >> (self._height - depth - 1)

    def insert(self, item: RectItem) -> None:
        slot = self._slot[item.x1]
        if slot in self._by_slot:
            raise KeyError(f"key {item.x1!r} already stored")
        item.slot = slot
        self._by_slot[slot] = item
        self._order.add(slot)
        nodes = self._nodes
        v = 1
        while True:
            cur = nodes.get(v)
            if cur is None:
                nodes[v] = item
                return
            if item.key() < cur.key():
                nodes[v], item = item, cur
            v = self._toward(v, item.slot)

    def _remove_node(self, v: int) -> None:
        nodes = self._nodes
        while v < self._leaves:
            a = nodes.get(2 * v)
            b = nodes.get(2 * v + 1)
            if a is None and b is None:
                break
            if b is None or (a is not None and a.key() < b.key()):
                nodes[v] = a
                v = 2 * v
            else:
                nodes[v] = b
                v = 2 * v + 1
        del nodes[v]

    def delete(self, x1: float) -> RectItem:
        slot = self._slot[x1]
        item = self._by_slot.pop(slot)
        self._order.remove(slot)
        v = 1
        while self._nodes.get(v) is not item:
            v = self._toward(v, slot)
        self._remove_node(v)
        return item

    def pop_min(self) -> PopResult:
        """Remove the root and every rectangle it shadows.

        Rectangles ``[x1, x2] x [y1, y2]`` with ``q_x < x2`` and ``q_y < y2``
        are dropped; returns the popped item and the two rectangles that now
        replace the region around ``q``.
        """
        item = self._nodes.get(1)
        if item is None or item.marked:
            raise EmptyRootError("root is empty or marked")
        qx, qy = item.point[0], item.point[1]
        self._by_slot.pop(item.slot)
        pos = self._order.index(item.slot)
        self._order.pop(pos)
        self._remove_node(1)

        deleted = []
        order = self._order
        while pos < len(order):
            nxt = self._by_slot[order[pos]]
            if not (qx < nxt.x2 and qy < nxt.y2):
                break
            deleted.append(self.delete(nxt.x1))
        if pos < len(order):
            nxt = self._by_slot[order[pos]]
            xr, yr = nxt.x1, nxt.y1
        else:
            xr, yr = INF, item.y1
        left = (item.x1, qx, item.y1, item.y2)
        right = (qx, xr, yr, qy)
        return PopResult(item, left, right, deleted)

    def items(self) -> list[RectItem]:
        """Stored items in x order."""
        return [self._by_slot[s] for s in self._order]

    def check_heap(self) -> bool:
        for v, item in self._nodes.items():
            if v > 1 and self._nodes[v // 2].key() > item.key():
                return False
            leaf = self._leaves + item.slot
            if leaf >> (leaf.bit_length() - v.bit_length()) != v:
                return False
        return len(self._nodes) == len(self._by_slot)
