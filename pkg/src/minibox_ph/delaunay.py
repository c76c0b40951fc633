"""Chebyshev Delaunay edges through witness points.

A pair {p, q} is a Delaunay edge iff the closed box of points at distance
r = d(p, q)/2 from both is not covered by the open radius-r balls of the
other sites. The covering question is settled exactly: along each axis the
box is cut at every ball face, the cut values are sorted as rationals, and
coverage of each grid vertex becomes an integer comparison of ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .geometry import DimensionMismatch, EdgeSet, PointCloud

# float pre-filter slack before the exact intersection test
_SLACK = 1e-9


def _exact(x, decimal: bool) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    return Fraction(repr(float(x))) if decimal else Fraction(float(x))


def _dist(a, b) -> Fraction:
    return max(abs(u - v) for u, v in zip(a, b))


@dataclass(frozen=True)
class WitnessReport:
    vertices: tuple
    candidate: tuple
    radius: float
    verdict: bool
    equidistant: bool
    blocking: Optional[int] = None
    blocking_distance: Optional[float] = None


def verify_witness(cloud: PointCloud, simplex: Sequence[int], z, decimal: bool = True) -> WitnessReport:
    """Check whether ``z`` is a witness point of ``simplex``.

    ``z`` must sit at half the simplex diameter from every vertex with no
    site strictly closer. With ``decimal=True`` every float is read as the
    shortest decimal that prints it, so hand-written coordinates such as
    ``5.95`` compare exactly.
    """
    simplex = tuple(int(v) for v in simplex)
    if not simplex:
        raise ValueError("simplex must be non-empty")
    if len(z) != cloud.dim:
        raise DimensionMismatch("candidate and cloud dimensions differ")
    pts = [[_exact(c, decimal) for c in row] for row in cloud.points.tolist()]
    zz = [_exact(c, decimal) for c in z]
    verts = [pts[v] for v in simplex]
    diam = max((_dist(a, b) for a in verts for b in verts), default=Fraction(0))
    r = diam / 2
    equidistant = all(_dist(zz, v) == r for v in verts)
    blocking, block_d = None, None
    members = set(simplex)
    for y, row in enumerate(pts):
        if y in members:
            continue
        dy = _dist(zz, row)
        if dy < r and (block_d is None or dy < block_d):
            blocking, block_d = y, dy
    return WitnessReport(
        vertices=simplex,
        candidate=tuple(float(c) for c in zz),
        radius=float(r),
        verdict=equidistant and blocking is None,
        equidistant=equidistant,
        blocking=blocking,
        blocking_distance=None if block_d is None else float(block_d),
    )


def _axis_positions(values, breaks):
    """Doubled rank of each value among sorted ``breaks`` (values outside map past the ends)."""
    index = {b: 2 * k for k, b in enumerate(breaks)}
    lo, hi = breaks[0], breaks[-1]
    out = []
    for v in values:
        if v < lo:
            out.append(-1)
        elif v > hi:
            out.append(2 * len(breaks) - 1)
        else:
            out.append(index[v])
    return out


def delaunay_edge_witness(cloud: PointCloud, i: int, j: int):
    """A witness point (tuple of Fractions) of the pair, or None if covered."""
    if i == j:
        raise ValueError("an edge needs two distinct points")
    pts = cloud.points
    p, q = pts[i], pts[j]
    r_float = float(np.max(np.abs(p - q))) / 2.0
    a_lo_f = np.maximum(p, q) - r_float
    a_hi_f = np.minimum(p, q) + r_float
    near = np.all(pts - r_float < a_hi_f + _SLACK * (1 + np.abs(a_hi_f)), axis=1)
    near &= np.all(pts + r_float > a_lo_f - _SLACK * (1 + np.abs(a_lo_f)), axis=1)
    near[[i, j]] = False
    sites = np.flatnonzero(near).tolist()

    P = [Fraction(float(c)) for c in p]
    Q = [Fraction(float(c)) for c in q]
    r = _dist(P, Q) / 2
    a_lo = [max(u, v) - r for u, v in zip(P, Q)]
    a_hi = [min(u, v) + r for u, v in zip(P, Q)]
    d = cloud.dim

    balls = []
    for y in sites:
        Y = [Fraction(float(c)) for c in pts[y]]
        lo = [c - r for c in Y]
        hi = [c + r for c in Y]
        if all(lo[k] < a_hi[k] and hi[k] > a_lo[k] for k in range(d)):
            balls.append((lo, hi))
    if not balls:
        return tuple((a + b) / 2 for a, b in zip(a_lo, a_hi))

    breaks, covers = [], []
    for k in range(d):
        cuts = {a_lo[k], a_hi[k]}
        for lo, hi in balls:
            if a_lo[k] <= lo[k] <= a_hi[k]:
                cuts.add(lo[k])
            if a_lo[k] <= hi[k] <= a_hi[k]:
                cuts.add(hi[k])
        axis = sorted(cuts)
        breaks.append(axis)
        lo_pos = np.array(_axis_positions([b[0][k] for b in balls], axis))
        hi_pos = np.array(_axis_positions([b[1][k] for b in balls], axis))
        verts = 2 * np.arange(len(axis))
        covers.append((lo_pos[:, None] < verts[None, :]) & (verts[None, :] < hi_pos[:, None]))

    shape = tuple(len(a) for a in breaks)
    covered = np.zeros(shape, dtype=bool)
    for b in range(len(balls)):
        cell = covers[0][b]
        for k in range(1, d):
            cell = np.multiply.outer(cell, covers[k][b])
        covered |= cell
        if covered.all():
            return None
    free = np.argwhere(~covered)[0]
    return tuple(breaks[k][int(t)] for k, t in enumerate(free))


def is_delaunay_edge(cloud: PointCloud, i: int, j: int) -> bool:
    return delaunay_edge_witness(cloud, i, j) is not None


def alpha_flag_edges(cloud: PointCloud) -> EdgeSet:
    """All Delaunay edges, each entering at half its Chebyshev length."""
    n = cloud.n
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if is_delaunay_edge(cloud, i, j)]
    return EdgeSet.from_pairs(pairs, cloud=cloud)
