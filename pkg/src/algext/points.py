"""Finite sampled point sets standing in for compact Hausdorff spaces.

A PointSet is an ordered list of labelled points, optionally carrying a
coordinate tuple per point (sampled subsets of C^d keep d coordinates).
All function algebras in this package live on such a set.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError


class PointSet:
    """Ordered, labelled finite point set with optional complex coordinates.

    coords, when present, is an (n, d) complex array: row i holds the
    coordinates of point i.  Labels must be distinct and non-empty.
    """

    def __init__(self, labels, coords=None):
        labels = tuple(str(l) for l in labels)
        if not labels:
            raise ShapeError("a point set needs at least one point")
        if len(set(labels)) != len(labels):
            raise ShapeError("point labels must be distinct")
        self.labels = labels
        if coords is not None:
            coords = np.array(coords, dtype=complex)
            if coords.ndim == 1:
                coords = coords.reshape(-1, 1)
            if coords.shape[0] != len(labels):
                raise ShapeError(
                    f"{len(labels)} labels but {coords.shape[0]} coordinate rows"
                )
            coords.flags.writeable = False
        self.coords = coords

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"PointSet({len(self.labels)} points)"

    def coordinate(self, axis=0):
        """Values of the axis-th coordinate function on the samples."""
        if self.coords is None:
            raise ShapeError("point set has no coordinates")
        return np.array(self.coords[:, axis])

    def index_of(self, label):
        return self.labels.index(label)


def single_point():
    """One-point set; functions on it are the complex scalars."""
    return PointSet(("*",), coords=[[0.0]])


def interval_points(n, a=0.0, b=1.0):
    """n equispaced samples of the real interval [a, b]."""
    values = np.linspace(a, b, n)
    return PointSet([f"s{i}" for i in range(n)], coords=values.reshape(-1, 1))


def circle_points(n, radius=1.0):
    """n equispaced samples of the circle of the given radius."""
    angles = 2.0 * np.pi * np.arange(n) / n
    values = radius * np.exp(1j * angles)
    return PointSet([f"c{i}" for i in range(n)], coords=values.reshape(-1, 1))


def grid_points(n, a=-1.0, b=1.0):
    """n samples of the square [a,b] x [a,b], row-major on a near-square grid."""
    side = int(np.ceil(np.sqrt(n)))
    line = np.linspace(a, b, side)
    values = [complex(x, y) for y in line for x in line][:n]
    return PointSet([f"g{i}" for i in range(n)], coords=np.array(values).reshape(-1, 1))


def disk_points(n):
    """n samples of the closed unit disk: concentric circles plus the centre.

    Deterministic layout; the outermost ring always lies on the boundary
    circle so sup norms over the samples see the boundary.
    """
    if n == 1:
        return PointSet(["d0"], coords=[[0.0 + 0.0j]])
    rings = max(1, int(np.round(np.sqrt(n / np.pi))))
    values = [0.0 + 0.0j]
    remaining = n - 1
    for k in range(1, rings + 1):
        radius = k / rings
        count = remaining if k == rings else max(1, int(np.round(remaining / (rings - k + 1))))
        angles = 2.0 * np.pi * (np.arange(count) + 0.5 * k) / max(count, 1)
        values.extend(radius * np.exp(1j * angles))
        remaining -= count
    values = np.array(values[:n])
    return PointSet([f"d{i}" for i in range(n)], coords=values.reshape(-1, 1))


def explicit_points(values, labels=None):
    """Point set from explicit complex values."""
    values = np.asarray(list(values), dtype=complex)
    if labels is None:
        labels = [f"p{i}" for i in range(len(values))]
    return PointSet(labels, coords=values.reshape(-1, 1))
