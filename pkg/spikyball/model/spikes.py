"""Vertex/cap correspondence and the structural predicates on spiky balls."""

import logging
import math
from typing import List, Sequence

import numpy as np

from spikyball.exceptions import GeometryError
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    SphericalCap,
    Tolerance,
    UnitVector,
    VectorLike,
    as_array,
    cap_contains,
    pairwise_angular_distances,
)

from .types import SpikyBall, Symmetry, VertexCapPair

logger = logging.getLogger(__name__)

# Bisection steps used to locate where a segment leaves or enters a spike
SEGMENT_BISECTION_STEPS = 60


def vertex_cap(x: VectorLike, index: int = 0) -> VertexCapPair:
    """Base cap and piercing cap of the vertex ``x``.

    Raises:
        GeometryError: if |x| <= 1.
    """
    vertex = as_array(x)
    norm = float(np.linalg.norm(vertex))
    if norm <= 1.0:
        raise GeometryError(f"Vertex must lie outside the unit ball, got norm {norm}")
    y = UnitVector(vertex / norm)
    alpha = math.acos(1.0 / norm)
    return VertexCapPair(
        vertex_index=index,
        base_cap=SphericalCap(y, alpha, open=True),
        piercing_cap=SphericalCap(-y, math.pi / 2 - alpha, open=True),
    )


def vertex_caps(ball: SpikyBall) -> List[VertexCapPair]:
    return [vertex_cap(x, i) for i, x in enumerate(ball.vertices)]


def spike_gap(points: np.ndarray, vertices: np.ndarray) -> np.ndarray:
    """Minimum over lambda in [0, 1] of |q - lambda x|^2 - (1 - lambda)^2.

    q lies in conv(B^d ∪ {x}) exactly when this is <= 0. Rows of ``points``
    and ``vertices`` are broadcast against each other.
    """
    q = np.atleast_2d(points)
    x = np.atleast_2d(vertices)
    xx = np.sum(x * x, axis=-1)
    qx = np.sum(q * x, axis=-1)
    qq = np.sum(q * q, axis=-1)
    a = xx - 1.0
    b = 2.0 - 2.0 * qx
    c = qq - 1.0
    lam = np.clip(-b / (2.0 * a), 0.0, 1.0)
    return a * lam * lam + b * lam + c


def point_in_spike(
    q: VectorLike, x: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether q belongs to the closed spike conv(B^d ∪ {x})."""
    point, vertex = as_array(q), as_array(x)
    if float(np.linalg.norm(vertex)) <= 1.0:
        raise GeometryError("Spike apex must lie outside the unit ball")
    if float(np.dot(point, point)) <= 1.0:
        return True
    return bool(spike_gap(point, vertex)[0] <= tol.eps_predicate)


def is_vertex(i: int, ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True if x_i is outside every other spike of ``ball``."""
    if not 0 <= i < ball.n:
        raise IndexError(f"Vertex index {i} out of range for {ball.n} vertices")
    others = np.delete(ball.vertices, i, axis=0)
    if others.shape[0] == 0:
        return True
    gaps = spike_gap(ball.vertices[i], others)
    return bool(np.all(gaps > tol.eps_predicate))


def _pairs(n: int):
    rows, cols = np.triu_indices(n, k=1)
    return rows, cols


def is_two_illuminable(ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Every pair of open piercing caps meets.

    The piercing cap centers are -y_i, so their pairwise distances equal
    those of the y_i.
    """
    if ball.n < 2:
        return True
    distances = pairwise_angular_distances(ball.directions)
    radii = math.pi / 2 - ball.alphas
    rows, cols = _pairs(ball.n)
    reach = radii[rows] + radii[cols]
    return bool(np.all(distances[rows, cols] < reach - tol.eps_predicate))


def is_packing(
    caps: Sequence[SphericalCap], tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether no two caps overlap beyond ``eps_predicate``."""
    if len(caps) < 2:
        return True
    centers = np.array([cap.center.coords for cap in caps])
    radii = np.array([cap.radius for cap in caps])
    distances = pairwise_angular_distances(centers)
    rows, cols = _pairs(len(caps))
    return bool(
        np.all(radii[rows] + radii[cols] <= distances[rows, cols] + tol.eps_predicate)
    )


def base_caps(ball: SpikyBall) -> List[SphericalCap]:
    return [pair.base_cap for pair in vertex_caps(ball)]


def _inside(points: np.ndarray, vertices: np.ndarray, eps: float) -> np.ndarray:
    inside_ball = np.sum(points * points, axis=-1) <= 1.0
    return inside_ball | (spike_gap(points, vertices) <= eps)


def _segment_boundary(
    start: np.ndarray, end: np.ndarray, apex: np.ndarray, eps: float
) -> np.ndarray:
    """Largest t such that start + t (end - start) is still in spike(apex).

    Each row of ``start`` must lie in its spike. Spikes are convex, so the
    set of such t is an interval starting at 0.
    """
    lo = np.zeros(start.shape[0])
    hi = np.ones(start.shape[0])
    done = _inside(end, apex, eps)
    lo[done] = 1.0
    for _ in range(SEGMENT_BISECTION_STEPS):
        mid = (lo + hi) / 2.0
        points = start + mid[:, None] * (end - start)
        inside = _inside(points, apex, eps)
        lo = np.where(inside & ~done, mid, lo)
        hi = np.where(inside | done, hi, mid)
    return lo


def is_convex(ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Pairwise segment criterion for convexity of the spiky ball.

    For every pair i < j the segment [x_i, x_j] must be covered by
    spike_i ∪ spike_j: the parameter where it leaves spike_i may not fall
    short of the parameter where it enters spike_j.
    """
    if ball.n < 2:
        return True
    rows, cols = _pairs(ball.n)
    xi = ball.vertices[rows]
    xj = ball.vertices[cols]
    exit_i = _segment_boundary(xi, xj, xi, tol.eps_predicate)
    # Entry into spike_j measured from x_i is 1 minus the exit measured from x_j.
    entry_j = 1.0 - _segment_boundary(xj, xi, xj, tol.eps_predicate)
    ok = exit_i >= entry_j - tol.eps_geometry
    if not np.all(ok):
        bad = int(np.flatnonzero(~ok)[0])
        logger.debug(
            f"Segment [x_{rows[bad]}, x_{cols[bad]}] leaves the body: "
            f"exit {exit_i[bad]:.6f} < entry {entry_j[bad]:.6f}"
        )
        return False
    return True


def closed_piercing_caps_intersect(
    ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Pairwise intersection of the closed piercing caps of a symmetric body.

    Antipodal partners are skipped, since their piercing caps are disjoint
    whenever alpha > 0.
    """
    if ball.n < 2:
        return True
    directions = ball.directions
    distances = pairwise_angular_distances(directions)
    radii = math.pi / 2 - ball.alphas
    rows, cols = _pairs(ball.n)
    partners = np.linalg.norm(directions[rows] + directions[cols], axis=1) <= 1e-9
    reach = radii[rows] + radii[cols] + tol.eps_predicate
    return bool(np.all((distances[rows, cols] <= reach) | partners))


def illuminates_vertex(
    v: VectorLike, pair: VertexCapPair, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether direction v illuminates the vertex behind ``pair``."""
    return cap_contains(pair.piercing_cap, v, tol)


def _contains_row(rows: np.ndarray, target: np.ndarray, slack: float) -> bool:
    return bool(np.any(np.linalg.norm(rows - target, axis=1) <= slack))


def symmetry_violations(ball: SpikyBall, slack: float = 1e-9) -> List[str]:
    """Vertices whose required mirror images are missing."""
    violations = []
    vertices = ball.vertices
    scale = slack * max(1.0, float(np.max(ball.norms)))
    if ball.symmetry is Symmetry.ORIGIN:
        for i, x in enumerate(vertices):
            if not _contains_row(vertices, -x, scale):
                violations.append(f"vertex {i} has no antipodal partner")
    elif ball.symmetry is Symmetry.UNCONDITIONAL:
        # Single coordinate flips generate the whole sign-flip group.
        for i, x in enumerate(vertices):
            for j in range(ball.dim):
                flipped = x.copy()
                flipped[j] = -flipped[j]
                if not _contains_row(vertices, flipped, scale):
                    violations.append(f"vertex {i} is missing its flip in axis {j}")
                    break
    return violations


def validate_instance(
    ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> List[str]:
    """List every violated instance invariant (empty when the ball is valid)."""
    violations = symmetry_violations(ball)
    for i in range(ball.n):
        if not is_vertex(i, ball, tol):
            violations.append(f"vertex {i} lies inside another spike")
    return violations


def ensure_valid(ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE) -> SpikyBall:
    """Return ``ball`` unchanged or raise GeometryError naming the violations."""
    violations = validate_instance(ball, tol)
    if violations:
        raise GeometryError("Invalid spiky ball: " + "; ".join(violations))
    return ball
