"""Persistence diagrams over F2.

Degree 0 uses union-find; higher degrees use the standard column reduction
with clearing. Columns are Python integers used as bit sets, so adding two
columns is a single xor and the pivot is the highest set bit.
"""

from __future__ import annotations

import math
from typing import Iterable

from .filtration import Filtration

INF = math.inf


class Diagram:
    """Per-degree multisets of (birth, death) pairs; death may be ``inf``."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: dict | None = None):
        pairs = pairs or {}
        self.pairs = {int(k): sorted((float(b), float(d)) for b, d in v) for k, v in pairs.items()}

    def degree(self, k: int) -> list:
        return self.pairs.get(k, [])

    @property
    def degrees(self) -> list:
        return sorted(self.pairs)

    def finite(self, k: int) -> list:
        return [p for p in self.degree(k) if p[1] != INF]

    def infinite(self, k: int) -> list:
        return [p for p in self.degree(k) if p[1] == INF]

    def scaled(self, factor: float) -> "Diagram":
        return Diagram({k: [(b * factor, d * factor) for b, d in v] for k, v in self.pairs.items()})

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return diagrams_equal(self, other, set(self.pairs) | set(other.pairs))

    def __repr__(self):
        body = ", ".join(f"H{k}: {len(v)} pairs" for k, v in sorted(self.pairs.items()))
        return f"Diagram({body})"


def diagrams_equal(a: Diagram, b: Diagram, degrees: Iterable[int]) -> bool:
    """Exact multiset equality in each requested degree."""
    return all(a.degree(k) == b.degree(k) for k in degrees)


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def persistence_h0(filtration: Filtration) -> Diagram:
    """Degree-0 diagram by union-find over edges in filtration order.

    Every vertex is born at its own value; on a merge the component whose
    oldest vertex came later dies (elder rule).
    """
    position = {}
    parent = {}
    birth = {}
    pairs = []
    for idx, (simplex, value) in enumerate(zip(filtration.simplices, filtration.values.tolist())):
        if len(simplex) == 1:
            v = simplex[0]
            parent[v] = v
            position[v] = idx
            birth[v] = value
        elif len(simplex) == 2:
            a, b = _find(parent, simplex[0]), _find(parent, simplex[1])
            if a == b:
                continue
            if position[a] > position[b]:
                a, b = b, a
            # b is the younger root
            parent[b] = a
            if value > birth[b]:
                pairs.append((birth[b], value))
    for v in parent:
        if _find(parent, v) == v:
            pairs.append((birth[v], INF))
    return Diagram({0: pairs})


def _reduce_dimension(columns, pivots, cleared):
    """Reduce one dimension's columns; returns {column: pivot row} and zero columns."""
    paired = {}
    zero = []
    for c, col in enumerate(columns):
        if c in cleared:
            zero.append(c)
            continue
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                break
            col ^= other
        if col:
            low = col.bit_length() - 1
            pivots[low] = col
            paired[c] = low
        else:
            zero.append(c)
    return paired, zero


def persistence_reduce(filtration: Filtration, max_degree: int = 1, clearing: bool = True) -> Diagram:
    """Diagrams in degrees 0..max_degree by boundary-matrix reduction.

    Pairs with birth equal to death are dropped. With ``clearing`` the
    dimensions are processed top-down and columns of simplices already known
    to be paired as pivots are skipped.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if filtration.max_dim < max_degree + 1:
        raise ValueError(
            f"filtration has max_dim={filtration.max_dim}; degree {max_degree} needs {max_degree + 1}"
        )
    top = max_degree + 1
    values = filtration.values.tolist()
    dims = filtration.dims.tolist()
    # global index of each simplex, grouped by dimension in filtration order
    by_dim = [[] for _ in range(top + 1)]
    local = [0] * len(dims)
    for g, k in enumerate(dims):
        if k <= top:
            local[g] = len(by_dim[k])
            by_dim[k].append(g)

    def columns(k):
        out = []
        for g in by_dim[k]:
            col = 0
            for f in filtration.boundaries[g]:
                col |= 1 << local[f]
            out.append(col)
        return out

    # negative[k] maps a k-simplex (local) that is a pivot to the (k+1)-column that kills it
    killed = [dict() for _ in range(top + 1)]
    positive = [set() for _ in range(top + 1)]
    positive[0] = set(range(len(by_dim[0])))
    cleared = [set() for _ in range(top + 1)]
    order = range(top, 0, -1) if clearing else range(1, top + 1)
    for k in order:
        paired, zero = _reduce_dimension(columns(k), {}, cleared[k] if clearing else ())
        for c, row in paired.items():
            killed[k - 1][row] = c
            cleared[k - 1].add(row)
        positive[k].update(zero)

    pairs = {}
    for k in range(max_degree + 1):
        out = []
        for s in sorted(positive[k]):
            b = values[by_dim[k][s]]
            killer = killed[k].get(s)
            if killer is None:
                out.append((b, INF))
            else:
                d = values[by_dim[k + 1][killer]]
                if d > b:
                    out.append((b, d))
        pairs[k] = out
    return Diagram(pairs)


def persistence_reduce_naive(filtration: Filtration, max_degree: int = 1) -> Diagram:
    """Unoptimised reference: one boundary matrix over all simplices, no clearing."""
    if filtration.max_dim < max_degree + 1:
        raise ValueError("filtration dimension too small for the requested degree")
    n = len(filtration)
    dims = filtration.dims.tolist()
    values = filtration.values.tolist()
    low_to_col = {}
    reduced = []
    for j in range(n):
        col = set(filtration.boundaries[j])
        while col:
            low = max(col)
            if low not in low_to_col:
                break
            col ^= reduced[low_to_col[low]]
        reduced.append(col)
        if col:
            low_to_col[max(col)] = j
    death_of = {low: j for low, j in low_to_col.items()}
    pairs = {k: [] for k in range(max_degree + 1)}
    for j in range(n):
        k = dims[j]
        if k > max_degree or reduced[j]:
            continue
        if j in death_of:
            d = values[death_of[j]]
            if d > values[j]:
                pairs[k].append((values[j], d))
        else:
            pairs[k].append((values[j], INF))
    return Diagram(pairs)
