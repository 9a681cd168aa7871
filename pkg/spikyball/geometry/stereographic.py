"""Stereographic projection from s onto the tangent hyperplane H at -s.

H = {x : <x, s> = -1}. Caps avoiding s map to Euclidean balls in H and the
map preserves incidence, which is what lets ball-piercing results be pulled
back to caps.
"""

import math

import numpy as np

from spikyball.exceptions import GeometryError

from .sphere import angular_distance, orthonormal_frame
from .types import (
    DEFAULT_TOLERANCE,
    EuclideanBall,
    SphericalCap,
    Tolerance,
    UnitVector,
    VectorLike,
    as_array,
)


def stereographic_project(
    s: VectorLike, p: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Project p != s to s + t (p - s) with t = 2 / (1 - <p, s>)."""
    pole, point = as_array(s), as_array(p)
    if pole.shape != point.shape:
        raise GeometryError(f"Dimension mismatch: {pole.size} vs {point.size}")
    if angular_distance(pole, point) <= tol.eps_geometry:
        raise GeometryError("Point is too close to the projection center")
    t = 2.0 / (1.0 - float(np.dot(point, pole)))
    return pole + t * (point - pole)


def stereographic_lift(s: VectorLike, x: VectorLike) -> np.ndarray:
    """Inverse projection: the second intersection of line(s, x) with the sphere."""
    pole, point = as_array(s), as_array(x)
    direction = point - pole
    # For x in H, <s, x - s> = -2, so the second root is 4 / |x - s|^2.
    lam = -2.0 * float(np.dot(pole, direction)) / float(np.dot(direction, direction))
    lifted = pole + lam * direction
    return lifted / np.linalg.norm(lifted)


def _plane_direction(center: np.ndarray, toward: np.ndarray) -> np.ndarray:
    """Unit vector orthogonal to ``center`` pointing toward ``toward``.

    Falls back to the first frame vector when the two are (anti)parallel.
    """
    residual = toward - float(np.dot(toward, center)) * center
    norm = float(np.linalg.norm(residual))
    if norm < 1e-9:
        return orthonormal_frame(center)[0]
    return residual / norm


def cap_image_ball(
    s: VectorLike, cap: SphericalCap, tol: Tolerance = DEFAULT_TOLERANCE
) -> EuclideanBall:
    """Stereographic image of a cap that avoids s.

    The diameter of the image ball joins the projections of the two boundary
    points of the cap on the great circle through s and the cap center.
    """
    pole = as_array(s)
    center = cap.center.coords
    if angular_distance(pole, center) <= cap.radius + tol.eps_geometry:
        raise GeometryError("Cap contains or touches the projection center")
    q = _plane_direction(center, pole)
    near = math.cos(cap.radius) * center + math.sin(cap.radius) * q
    far = math.cos(cap.radius) * center - math.sin(cap.radius) * q
    a = stereographic_project(pole, near, tol)
    b = stereographic_project(pole, far, tol)
    radius = float(np.linalg.norm(a - b)) / 2.0
    return EuclideanBall(center=(a + b) / 2.0, radius=radius)


def ball_preimage_cap(
    s: VectorLike, ball: EuclideanBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> SphericalCap:
    """Closed cap whose stereographic image is ``ball``.

    The ball's diameter along the line through -s and its center lifts to
    two boundary points of the cap; the cap is the arc between them that
    contains the lift of the ball center. The returned cap is smaller than
    a hemisphere whenever the ball sits close enough to -s (check
    ``cap.is_small``).
    """
    pole = as_array(s)
    if ball.radius < tol.eps_geometry:
        raise GeometryError(f"Ball radius {ball.radius} is numerically degenerate")
    if abs(float(np.dot(ball.center, pole)) + 1.0) > tol.eps_geometry:
        raise GeometryError("Ball center is not in the tangent hyperplane at -s")
    offset = ball.center + pole
    norm = float(np.linalg.norm(offset))
    if norm < 1e-12:
        direction = orthonormal_frame(pole)[0]
    else:
        direction = offset / norm
    b1 = stereographic_lift(pole, ball.center + ball.radius * direction)
    b2 = stereographic_lift(pole, ball.center - ball.radius * direction)
    inner = stereographic_lift(pole, ball.center)

    half_chord = angular_distance(b1, b2) / 2.0
    midpoint = b1 + b2
    if np.linalg.norm(midpoint) < 1e-12:
        # Antipodal lifts: the cap is a hemisphere centered at the inner point.
        return SphericalCap(UnitVector.normalized(inner), math.pi / 2, open=False)
    mid = midpoint / np.linalg.norm(midpoint)
    if angular_distance(mid, inner) <= half_chord:
        return SphericalCap(UnitVector(mid), half_chord, open=False)
    return SphericalCap(UnitVector(-mid), math.pi - half_chord, open=False)
