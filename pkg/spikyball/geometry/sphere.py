"""Spherical primitives: distances, cap predicates and equatorial slices."""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import null_space

from spikyball.exceptions import GeometryError

from .types import (
    DEFAULT_TOLERANCE,
    SphericalCap,
    Tolerance,
    UnitVector,
    VectorLike,
    as_array,
)


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise GeometryError(f"Dimension mismatch: {a.size} vs {b.size}")


def angular_distance(a: VectorLike, b: VectorLike) -> float:
    """Spherical distance arccos(<a, b>) in [0, pi]."""
    u, v = as_array(a), as_array(b)
    _check_same_dim(u, v)
    return float(np.arccos(np.clip(np.dot(u, v), -1.0, 1.0)))


def pairwise_angular_distances(points: np.ndarray) -> np.ndarray:
    """Matrix of angular distances between the rows of ``points``."""
    gram = np.clip(points @ points.T, -1.0, 1.0)
    return np.arccos(gram)


def cap_contains(
    cap: SphericalCap, p: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Membership test in inner-product form.

    Closed caps accept <p, center> >= cos(radius) - eps_predicate, open caps
    require <p, center> > cos(radius) + eps_predicate.
    """
    point = as_array(p)
    _check_same_dim(point, cap.center.coords)
    dot = float(np.dot(point, cap.center.coords))
    threshold = math.cos(cap.radius)
    if cap.open:
        return dot > threshold + tol.eps_predicate
    return dot >= threshold - tol.eps_predicate


def caps_intersect(
    c1: SphericalCap, c2: SphericalCap, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether two caps smaller than a hemisphere meet.

    Two closed caps meet iff the center distance is at most r1 + r2; if
    either cap is open the inequality is strict.
    """
    _check_same_dim(c1.center.coords, c2.center.coords)
    for cap in (c1, c2):
        if not cap.is_small:
            raise GeometryError(
                f"Cap radius {cap.radius} is not below pi/2; outside supported regime"
            )
    gap = angular_distance(c1.center, c2.center)
    reach = c1.radius + c2.radius
    if c1.open or c2.open:
        return gap < reach - tol.eps_predicate
    return gap <= reach + tol.eps_predicate


def orthonormal_frame(axis: VectorLike) -> np.ndarray:
    """Orthonormal basis (as rows) of the hyperplane orthogonal to ``axis``.

    Gram-Schmidt over e_1, ..., e_d in index order, skipping coordinate axes
    that are (numerically) in the span of the vectors kept so far.
    """
    normal = as_array(axis)
    norm = float(np.linalg.norm(normal))
    if norm < 1e-12:
        raise GeometryError("Degenerate axis: zero vector")
    normal = normal / norm
    dim = normal.size
    basis = [normal]
    for j in range(dim):
        if len(basis) == dim:
            break
        candidate = np.zeros(dim)
        candidate[j] = 1.0
        for b in basis:
            candidate = candidate - np.dot(candidate, b) * b
        residual = float(np.linalg.norm(candidate))
        if residual > 1e-8:
            basis.append(candidate / residual)
    return np.array(basis[1:])


def orthogonal_complement(vectors: np.ndarray) -> np.ndarray:
    """Orthonormal rows spanning the complement of the row span of ``vectors``."""
    return null_space(np.atleast_2d(vectors)).T


@dataclass(frozen=True, eq=False)
class EquatorFrame:
    """Coordinates on the great subsphere orthogonal to ``axis``.

    ``basis`` holds d-1 orthonormal rows spanning axis^perp, so intrinsic
    coordinates live in E^{d-1}.
    """

    axis: np.ndarray
    basis: np.ndarray

    @classmethod
    def from_axis(cls, axis: VectorLike) -> "EquatorFrame":
        normal = as_array(axis)
        normal = normal / np.linalg.norm(normal)
        return cls(axis=normal, basis=orthonormal_frame(normal))

    @property
    def dim(self) -> int:
        """Ambient dimension d."""
        return int(self.axis.size)

    def to_intrinsic(self, points: np.ndarray) -> np.ndarray:
        """Ambient vectors of the equator hyperplane -> E^{d-1} coordinates."""
        return np.atleast_2d(points) @ self.basis.T

    def to_ambient(self, points: np.ndarray) -> np.ndarray:
        """E^{d-1} coordinates -> ambient vectors orthogonal to the axis."""
        return np.atleast_2d(points) @ self.basis


def equatorial_slice(
    cap: SphericalCap,
    axis: VectorLike,
    frame: Optional[EquatorFrame] = None,
) -> Optional[Tuple[SphericalCap, EquatorFrame]]:
    """Intersect a cap with the equator {p : <p, axis> = 0}.

    Writing center = cos(theta) * axis + sin(theta) * w', the slice is the
    (d-2)-dimensional cap centered at w' with radius arccos(cos(beta) / sin(theta)).

    Args:
        cap: Cap with radius beta < pi/2.
        axis: Unit normal of the equator.
        frame: Optional precomputed frame for ``axis`` (reused across caps).

    Returns:
        ``(slice_cap, frame)`` with ``slice_cap`` in the frame's intrinsic
        coordinates, or None when the slice is empty or a single point.

    Raises:
        GeometryError: zero axis, dimension mismatch or a cap that is not small.
    """
    normal = as_array(axis)
    _check_same_dim(normal, cap.center.coords)
    if float(np.linalg.norm(normal)) < 1e-12:
        raise GeometryError("Degenerate axis: zero vector")
    if not cap.is_small:
        raise GeometryError(f"Slice needs a cap radius below pi/2, got {cap.radius}")
    if cap.dim < 3:
        raise GeometryError("Equatorial slices need dimension >= 3")
    frame = frame or EquatorFrame.from_axis(normal)
    normal = frame.axis

    center = cap.center.coords
    cos_theta = float(np.dot(center, normal))
    in_plane = center - cos_theta * normal
    sin_theta = float(np.linalg.norm(in_plane))
    cos_beta = math.cos(cap.radius)
    if sin_theta < 1e-12 or sin_theta <= cos_beta:
        return None
    ratio = cos_beta / sin_theta
    slice_center = UnitVector.normalized(frame.to_intrinsic(in_plane)[0])
    slice_cap = SphericalCap(slice_center, math.acos(ratio), open=cap.open)
    return slice_cap, frame
