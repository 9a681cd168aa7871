"""Deterministic point sets on spheres."""

import math
from functools import lru_cache
from typing import Tuple

import numpy as np

from spikyball.exceptions import GeometryError

_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def _icosahedron() -> Tuple[np.ndarray, np.ndarray]:
    t = _GOLDEN
    vertices = np.array(
        [
            [-1, t, 0], [1, t, 0], [-1, -t, 0], [1, -t, 0],
            [0, -1, t], [0, 1, t], [0, -1, -t], [0, 1, -t],
            [t, 0, -1], [t, 0, 1], [-t, 0, -1], [-t, 0, 1],
        ],
        dtype=float,
    )  # fmt: skip
    faces = np.array(
        [
            [0, 11, 5], [0, 5, 1], [0, 1, 7], [0, 7, 10], [0, 10, 11],
            [1, 5, 9], [5, 11, 4], [11, 10, 2], [10, 7, 6], [7, 1, 8],
            [3, 9, 4], [3, 4, 2], [3, 2, 6], [3, 6, 8], [3, 8, 9],
            [4, 9, 5], [2, 4, 11], [6, 2, 10], [8, 6, 7], [9, 8, 1],
        ]
    )  # fmt: skip
    return vertices / np.linalg.norm(vertices, axis=1)[:, None], faces


def _subdivide(vertices: np.ndarray, faces: np.ndarray):
    edges = np.concatenate([faces[:, [0, 1]], faces[:, [1, 2]], faces[:, [2, 0]]])
    edges = np.sort(edges, axis=1)
    unique, inverse = np.unique(edges, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    mids = vertices[unique[:, 0]] + vertices[unique[:, 1]]
    mids = mids / np.linalg.norm(mids, axis=1)[:, None]
    n_faces = faces.shape[0]
    offset = vertices.shape[0]
    ab = offset + inverse[:n_faces]
    bc = offset + inverse[n_faces : 2 * n_faces]
    ca = offset + inverse[2 * n_faces :]
    a, b, c = faces[:, 0], faces[:, 1], faces[:, 2]
    new_faces = np.concatenate(
        [
            np.stack([a, ab, ca], axis=1),
            np.stack([b, bc, ab], axis=1),
            np.stack([c, ca, bc], axis=1),
            np.stack([ab, bc, ca], axis=1),
        ]
    )
    return np.vstack([vertices, mids]), new_faces


@lru_cache(maxsize=8)
def icosphere(level: int) -> Tuple[np.ndarray, np.ndarray]:
    """Vertices and faces of the icosahedron subdivided ``level`` times."""
    if level < 0:
        raise GeometryError(f"Subdivision level must be >= 0, got {level}")
    vertices, faces = _icosahedron()
    for _ in range(level):
        vertices, faces = _subdivide(vertices, faces)
    vertices.setflags(write=False)
    faces.setflags(write=False)
    return vertices, faces


@lru_cache(maxsize=8)
def mesh_covering_radius(level: int) -> float:
    """Largest spherical circumradius over the icosphere triangles.

    Every point of a triangle lies within its circumradius of one of the
    triangle's vertices, so this bounds the covering radius of the vertices.
    """
    vertices, faces = icosphere(level)
    a, b, c = vertices[faces[:, 0]], vertices[faces[:, 1]], vertices[faces[:, 2]]
    normals = np.cross(b - a, c - a)
    normals = normals / np.linalg.norm(normals, axis=1)[:, None]
    dots = np.abs(np.sum(normals * a, axis=1))
    return float(np.max(np.arccos(np.clip(dots, -1.0, 1.0))))


def fibonacci_sphere(n: int) -> np.ndarray:
    """``n`` points on S^2 along the golden-angle spiral."""
    if n < 1:
        raise GeometryError(f"Need at least one point, got {n}")
    k = np.arange(n) + 0.5
    z = 1.0 - 2.0 * k / n
    radius = np.sqrt(1.0 - z * z)
    phi = 2.0 * math.pi * k / _GOLDEN
    return np.stack([radius * np.cos(phi), radius * np.sin(phi), z], axis=1)


def circle_points(count: int, offset: float = 0.0) -> np.ndarray:
    """``count`` evenly spaced points on S^1 starting at angle ``offset``."""
    angles = offset + 2.0 * math.pi * np.arange(count) / count
    return np.stack([np.cos(angles), np.sin(angles)], axis=1)


def uniform_sphere(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """``count`` uniform samples from the unit sphere in E^dim."""
    points = rng.standard_normal((count, dim))
    return points / np.linalg.norm(points, axis=1)[:, None]
