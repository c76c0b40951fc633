"""Reproducible point sets: uniform clouds, the two-segment worst case, and
two small reference configurations in R^3 with known witness facts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import PointCloud

# five points whose Delaunay complex is not flag
PAPER3_POINTS = (
    (0.0, 0.0, 0.0),
    (2.0, 1.0, 1.0),
    (1.4, 1.6, -0.6),
    (0.9, -0.3, -0.3),
    (1.1, 1.4, 1.2),
)

# eight points where Alpha and Čech disagree in degree two
PAPER8_POINTS = (
    (6.2, 1.1, 1.9),
    (2.4, 4.8, 1.4),
    (8.6, 4.4, 5.3),
    (7.3, 8.2, 4.9),
    (7.9, 3.9, 7.6),
    (4.2, 6.8, 0.2),
    (9.0, 9.2, 9.7),
    (1.0, 0.1, -2.4),
)


def uniform(n: int, d: int, seed: int = 0) -> PointCloud:
    """``n`` points drawn uniformly from the unit cube [0, 1]^d."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    return PointCloud(np.random.default_rng(seed).random((n, d)))


def s1s2(n: int) -> PointCloud:
    """Two parallel segments of ``n`` points each.

    p_i = (i/n, 1 - i/n) and q_j = (2 + j/n, 1 - j/n) for i, j = 1..n. Every
    pair p_i, q_j with j <= i spans an empty minibox. Points i and n+i share
    their y coordinate, so run ``preprocess`` before edge enumeration.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = np.arange(1, n + 1) / n
    p = np.column_stack([t, 1 - t])
    q = np.column_stack([2 + t, 1 - t])
    return PointCloud(np.vstack([p, q]))


def paper3() -> PointCloud:
    return PointCloud(np.array(PAPER3_POINTS))


def paper8() -> PointCloud:
    return PointCloud(np.array(PAPER8_POINTS))


GENERATORS = ("uniform", "s1s2", "paper3", "paper8")


def generate(name: str, n: int = 100, d: int = 2, seed: int = 0) -> PointCloud:
    if name == "uniform":
        return uniform(n, d, seed)
    if name == "s1s2":
        return s1s2(n)
    if name == "paper3":
        return paper3()
    if name == "paper8":
        return paper8()
    raise ValueError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")


@dataclass(frozen=True)
class WitnessFact:
    """Expected outcome of checking ``z`` against ``simplex`` (0-based indices)."""

    name: str
    cloud: str
    simplex: tuple
    z: tuple
    radius: float
    witness: bool
    blocker: Optional[int] = None
    blocker_distance: Optional[float] = None


WITNESS_FACTS = (
    WitnessFact("edge x1x2 witness (1,0,1)", "paper3", (0, 1), (1.0, 0.0, 1.0), 1.0, True),
    WitnessFact("edge x1x3 witness (0.8,0.8,0)", "paper3", (0, 2), (0.8, 0.8, 0.0), 0.8, True),
    WitnessFact("edge x2x3 witness (1.5,1.5,0.2)", "paper3", (1, 2), (1.5, 1.5, 0.2), 0.8, True),
    WitnessFact("triangle x1x2x3 witness (5.5,4.2,3.9)", "paper8", (0, 1, 2), (5.5, 4.2, 3.9), 3.1, True),
    WitnessFact("triangle x1x2x4 witness (4.05,4.65,4.95)", "paper8", (0, 1, 3), (4.05, 4.65, 4.95), 3.55, True),
    WitnessFact("triangle x1x3x4 witness (8.75,4.65,1.75)", "paper8", (0, 2, 3), (8.75, 4.65, 1.75), 3.55, True),
    WitnessFact("triangle x2x3x4 witness (5.5,5.1,3.9)", "paper8", (1, 2, 3), (5.5, 5.1, 3.9), 3.1, True),
    WitnessFact("circumcenter w1 (5.95,4.65,1.75) blocked", "paper8", (0, 1, 2, 3),
                (5.95, 4.65, 1.75), 3.55, False, blocker=5, blocker_distance=2.15),
    WitnessFact("circumcenter w2 (5.05,4.65,4.95) blocked", "paper8", (0, 1, 2, 3),
                (5.05, 4.65, 4.95), 3.55, False, blocker=4, blocker_distance=2.85),
)


@dataclass(frozen=True)
class FactResult:
    fact: WitnessFact
    passed: bool
    detail: str


def check_fact(fact: WitnessFact) -> FactResult:
    """Run the exact witness check and compare with the expected outcome."""
    from .delaunay import verify_witness

    # the report rounds exact rationals to the nearest float, as do the literals
    report = verify_witness(generate(fact.cloud), fact.simplex, fact.z)
    ok = report.equidistant and report.radius == fact.radius
    ok = ok and report.verdict == fact.witness
    if fact.blocker is not None:
        ok = ok and report.blocking is not None and report.blocking_distance is not None
        ok = ok and report.blocking_distance < report.radius
        ok = ok and report.blocking == fact.blocker
        ok = ok and report.blocking_distance == fact.blocker_distance
    detail = f"r={report.radius:g} equidistant={report.equidistant} verdict={report.verdict}"
    if report.blocking is not None:
        detail += f" blocker=x{report.blocking + 1} at {report.blocking_distance:g}"
    return FactResult(fact, bool(ok), detail)


def check_edge_facts() -> list:
    """The three witnessed edges of the five-point set must pass the Delaunay edge test."""
    from .delaunay import is_delaunay_edge

    cloud = paper3()
    return [(f.simplex, is_delaunay_edge(cloud, *f.simplex)) for f in WITNESS_FACTS if len(f.simplex) == 2]
