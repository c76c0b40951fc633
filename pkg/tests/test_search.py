import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from minibox_ph.geometry import Box, minibox
from minibox_ph.minibox import DirectDominance3D
from minibox_ph.search import KdTree, LayeredRangeTree, OrderedStaircase, PrioritySearchTree, RectItem
from minibox_ph.search.pst import SENTINEL, EmptyRootError

INF = math.inf


# ordered staircase ---------------------------------------------------------

def test_staircase_empty_accepts():
    s = OrderedStaircase()
    assert s.insert((2.0, 5.0))
    assert s.points() == [(2.0, 5.0)]


def test_staircase_rejects_dominating_point():
    s = OrderedStaircase([(1, 3)])
    assert not s.insert((2, 4))
    assert s.points() == [(1, 3)]


def test_staircase_insert_deletes_dominators():
    # q2, q1, q4, q3 in x order, then q5 removes q1 and q4
    s = OrderedStaircase()
    for q in [(3, 7), (1, 9), (8, 2), (5, 5)]:
        assert s.insert(q)
    assert s.points() == [(1, 9), (3, 7), (5, 5), (8, 2)]
    assert s.insert((2, 4))
    assert s.points() == [(1, 9), (2, 4), (8, 2)]
    assert not s.insert((4, 6))


@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50)), max_size=40, unique_by=(lambda p: p[0], lambda p: p[1])))
def test_staircase_matches_definition(pts):
    s = OrderedStaircase()
    kept = []
    for p in pts:
        expected = not any(q[0] < p[0] and q[1] < p[1] for q in kept)
        assert s.insert(p) == expected
        if expected:
            kept = [q for q in kept if not (q[0] > p[0] and q[1] > p[1])] + [p]
        assert s.is_staircase()
        assert s.points() == sorted(kept)
        for a in s.points():
            for b in s.points():
                assert not (a[0] < b[0] and a[1] < b[1])


# priority search tree -------------------------------------------------------

def test_pst_single_node_pop():
    t = PrioritySearchTree([0.0, 2.0])
    t.insert(RectItem(0.0, INF, 0.0, INF, (2.0, 3.0, 1.0), 7))
    res = t.pop_min()
    assert res.item.index == 7
    assert res.left == (0.0, 2.0, 0.0, INF)
    assert res.right == (2.0, INF, 0.0, 3.0)
    assert len(t) == 0


def test_pst_marked_root_raises():
    t = PrioritySearchTree([0.0])
    t.insert(RectItem(0.0, INF, 0.0, INF))
    assert t.root.point == SENTINEL
    with pytest.raises(EmptyRootError):
        t.pop_min()
    with pytest.raises(EmptyRootError):
        PrioritySearchTree([]).pop_min()


def test_pst_random_heap_order(rng):
    keys = rng.permutation(200).astype(float).tolist()
    t = PrioritySearchTree(keys)
    live = {}
    for step in range(2000):
        if live and rng.random() < 0.45:
            k = list(live)[rng.integers(len(live))]
            assert t.delete(k).point[2] == live.pop(k)
        else:
            free = [k for k in keys if k not in live]
            if not free:
                continue
            k = free[rng.integers(len(free))]
            z = float(rng.integers(0, 30))
            t.insert(RectItem(k, k + 1, 0.0, 1.0, (k, 0.0, z), int(k)))
            live[k] = z
        assert t.check_heap()
        if live:
            assert t.root.z == min(live.values())
        assert [it.x1 for it in t.items()] == sorted(live)


def _check_against_shadow(points, anchor):
    """Replay the sweep for ``anchor`` and compare rectangles with a staircase."""
    dd = DirectDominance3D(np.array(points, dtype=float))
    px, py, _ = points[anchor]
    shadow = OrderedStaircase()
    checks = []

    def trace(res, left, right):
        q = res.item.point
        shadow.insert((q[0], q[1]))
        items = dd.pst.items()
        # x-projections tile [px, inf) without overlap
        assert items[0].x1 == px and items[-1].x2 == INF
        assert all(a.x2 == b.x1 for a, b in zip(items, items[1:]))
        for it in items:
            assert it.y1 == py
            height = min((y for x, y in shadow.points() if x <= it.x1), default=INF)
            assert it.y2 == height
        checks.append(len(items))

    dd.dominators(anchor, trace)
    return checks


def test_pst_rectangles_match_shadow_staircase(rng):
    for seed in range(5):
        pts = np.random.default_rng(seed).random((60, 3)).tolist()
        for anchor in range(0, 60, 7):
            _check_against_shadow(pts, anchor)


def test_pst_figure_sequence():
    pts = [(0, 0, 0), (3, 7, 1), (1, 9, 2), (8, 2, 3), (5, 5, 4), (2, 4, 5), (6, 3, 6)]
    dd = DirectDominance3D(np.array(pts, dtype=float))
    log = []
    found = dd.dominators(0, lambda res, left, right: log.append((res, left, right)))
    assert found == [1, 2, 3, 4, 5, 6]
    res, left, right = log[4]
    assert res.item.index == 5
    # rectangles between q1-q4 and q4-q3 go; q5's own rectangle was q2-q1
    assert sorted(r.rect for r in res.deleted) == [(3.0, 5.0, 0.0, 7.0), (5.0, 8.0, 0.0, 5.0)]
    assert left.rect == (1.0, 2.0, 0.0, 9.0) and left.marked
    assert right.rect == (2.0, 8.0, 0.0, 4.0) and right.index == 6
    res, left, right = log[5]
    assert res.item.index == 6 and left.marked and right.marked
    assert dd.pst.root is None


# layered range tree and kd-tree ---------------------------------------------

def _scan_min_z(pts, x, y, zmin):
    best = (INF, INF, INF)
    for p in pts:
        if x[0] <= p[0] <= x[1] and y[0] <= p[1] <= y[1] and p[2] >= zmin and p[2] < best[2]:
            best = tuple(p)
    return best


def test_range_min_z_matches_scan():
    rng = np.random.default_rng(0)
    pts = rng.random((100, 3))
    tree = LayeredRangeTree(pts)
    rows = pts.tolist()
    for _ in range(50):
        x = sorted(rng.random(2))
        y = sorted(rng.random(2))
        zmin = rng.random() * 0.8
        got, j = tree.range_min_z(x, y, zmin)
        assert got == _scan_min_z(rows, x, y, zmin)
        assert (j < 0) == (got == SENTINEL)


def test_range_min_z_examples():
    pts = np.array([[0.5, 0.5, 0.5], [0.1, 0.9, 0.2]])
    tree = LayeredRangeTree(pts)
    assert tree.range_min_z((0.6, 0.9), (0.0, 1.0), 0.0)[0] == SENTINEL
    assert tree.range_min_z((0.4, 0.6), (0.4, 0.6), 0.0)[0] == (0.5, 0.5, 0.5)


def _scan_open_empty(pts, box):
    return not any(box.contains(p) for p in pts)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_range_empty_matches_scan(d):
    rng = np.random.default_rng(d)
    pts = rng.random((200, d))
    rt, kd = LayeredRangeTree(pts), KdTree(pts)
    rows = pts.tolist()
    for _ in range(100):
        a, b = rng.random(d), rng.random(d)
        # also exercise boxes spanned by stored points, where faces touch points
        if rng.random() < 0.5:
            a, b = pts[rng.integers(200)], pts[rng.integers(200)]
        box = minibox(a, b)
        expected = _scan_open_empty(rows, box)
        assert rt.range_empty(box) == expected
        assert kd.range_empty(box) == expected


def test_range_empty_examples():
    pts = np.array([[0.0, 0.0], [1.0, 1.0], [0.5, 0.5]])
    for tree in (LayeredRangeTree(pts), KdTree(pts)):
        assert tree.range_empty(Box.open((5, 5), (6, 6)))
        assert not tree.range_empty(minibox((0, 0), (1, 1)))
        assert tree.range_empty(minibox((0, 0), (0.5, 0.5)))


def test_kdtree_leaves_partition():
    pts = np.random.default_rng(1).random((137, 3))
    leaves = KdTree(pts, leaf_size=3).leaves()
    seen = sorted(tuple(p) for leaf in leaves for p in leaf)
    assert seen == sorted(map(tuple, pts.tolist()))
