"""Plain-text formats: point files in, edge lists / filtrations / diagrams out."""

from __future__ import annotations

import json
import os
import re
import tempfile

import numpy as np

from .geometry import PointCloud

_SPLIT = re.compile(r"[\s,]+")


class PointFileError(ValueError):
    pass


def parse_points(text: str, dim: int | None = None) -> PointCloud:
    rows = []
    width = dim
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _SPLIT.split(line) if f]
        try:
            row = [float(f) for f in fields]
        except ValueError as exc:
            raise PointFileError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(row)
        if len(row) != width:
            raise PointFileError(f"line {lineno}: expected {width} coordinates, got {len(row)}")
        rows.append(row)
    if width is None:
        raise PointFileError("no points found")
    return PointCloud(np.array(rows, dtype=np.float64).reshape(len(rows), width))


def read_points(path, dim: int | None = None) -> PointCloud:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PointFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_points(text, dim)


def format_points(cloud: PointCloud) -> str:
    return "".join(" ".join(repr(float(v)) for v in row) + "\n" for row in cloud.points)


def format_edges(edges) -> str:
    return "".join(f"{i} {j} {r:.17g}\n" for (i, j), r in zip(edges.pairs.tolist(), edges.values.tolist()))


def parse_edges(text: str):
    from .geometry import EdgeSet

    pairs, values = [], []
    for line in text.splitlines():
        if not line.strip():
            continue
        i, j, r = line.split()
        pairs.append((int(i), int(j)))
        values.append(float(r))
    return EdgeSet.from_pairs(pairs, values)


def format_filtration(filtration) -> str:
    lines = []
    for verts, value in zip(filtration.simplices, filtration.values):
        lines.append(f"{len(verts) - 1} {' '.join(map(str, verts))} {value:.17g}\n")
    return "".join(lines)


def diagrams_to_json(diagram) -> str:
    blocks = []
    for k in sorted(diagram.pairs):
        pairs = [[b, None if np.isinf(d) else d] for b, d in diagram.pairs[k]]
        blocks.append({"degree": k, "pairs": pairs})
    return "[\n" + ",\n".join(json.dumps(b) for b in blocks) + "\n]"


def diagrams_from_json(text: str):
    from .persistence import Diagram

    data = json.loads(text)
    return Diagram({
        block["degree"]: [(b, float("inf") if d is None else d) for b, d in block["pairs"]]
        for block in data
    })


def write_atomic(path, text: str) -> None:
    """Write via a temp file in the target directory so failures leave nothing behind."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
