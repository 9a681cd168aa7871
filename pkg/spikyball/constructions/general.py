"""Directions for 2-illuminable spiky balls in E^d, d >= 4.

The piercing caps that contain a generic point s are pierced by s itself.
The remaining caps are projected stereographically from s to balls in the
tangent hyperplane at -s, pierced there by the ball construction, and the
piercing points are lifted back to the sphere.
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from spikyball.coverings import CoveringSpec, CoverStatus, uniform_sphere
from spikyball.exceptions import GeometryError, RetryBudgetExceeded
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    EquatorFrame,
    EuclideanBall,
    SphericalCap,
    Tolerance,
    UnitVector,
    stereographic_lift,
)
from spikyball.model import DirectionSet, SpikyBall, is_two_illuminable, vertex_caps
from spikyball.piercing import (
    cap_margins,
    pierce_balls_danzer,
    reduce_caps_via_stereographic,
)

from .completion import complete_positive_hull, verified_directions
from .interfaces import ConstructionOutcome, IlluminationMethod

logger = logging.getLogger(__name__)

SPLIT_CANDIDATES = 64
COVER_RADIUS = math.pi / 6


def require_cover(
    cover: Optional[CoveringSpec],
    sphere_dim: int,
    radius: float,
    tol: Tolerance,
) -> CoveringSpec:
    """Check that ``cover`` is a verified covering of S^sphere_dim by radius caps.

    Raises:
        GeometryError: missing, unverified, wrong dimension or too coarse.
    """
    if cover is None:
        raise GeometryError(f"A covering of S^{sphere_dim} is required")
    if cover.status is CoverStatus.UNVERIFIED:
        raise GeometryError("Covering has not been verified")
    if cover.sphere_dim != sphere_dim:
        raise GeometryError(
            f"Covering is of S^{cover.sphere_dim}, expected S^{sphere_dim}"
        )
    if cover.radius > radius + tol.eps_predicate:
        raise GeometryError(
            f"Covering radius {cover.radius:.12g} exceeds {radius:.12g}"
        )
    return cover


def choose_split_point(
    caps: Sequence[SphericalCap],
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
    candidates: int = SPLIT_CANDIDATES,
) -> UnitVector:
    """Seeded random point kept farthest from every cap boundary.

    Raises:
        RetryBudgetExceeded: if every candidate lies within eps_geometry of
            some cap boundary.
    """
    rng = np.random.default_rng(rng_seed)
    points = uniform_sphere(rng, candidates, caps[0].dim)
    gaps = np.min(np.abs(cap_margins(caps, points)), axis=0)
    best = int(np.argmax(gaps))
    if gaps[best] <= tol.eps_geometry:
        raise RetryBudgetExceeded(
            f"All {candidates} split candidates lie on a cap boundary"
        )
    return UnitVector(points[best])


def construct_general(
    ball: SpikyBall,
    cover: Optional[CoveringSpec],
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> ConstructionOutcome:
    """Split point, stereographic reduction, ball piercing, lift and complete.

    The piercing caps are shrunk by 2 * eps_geometry first, so points that
    land in the closed shrunk caps pierce the original open caps.

    Raises:
        GeometryError: d < 4, the instance is not 2-illuminable, or the
            covering of S^{d-2} by pi/6 caps is missing or unusable.
        ConstructionError: the completed set fails verification.
    """
    if ball.dim < 4:
        raise GeometryError(f"The general construction needs d >= 4, got {ball.dim}")
    cover = require_cover(cover, ball.dim - 2, COVER_RADIUS, tol)
    if not is_two_illuminable(ball, tol):
        raise GeometryError("Instance is not 2-illuminable")

    shrink = 2.0 * tol.eps_geometry
    caps = [pair.piercing_cap.shrunk(shrink) for pair in vertex_caps(ball)]
    s = choose_split_point(caps, rng_seed, tol)
    reduction = reduce_caps_via_stereographic(caps, s, tol)
    logger.info(
        f"Split point lies in {len(reduction.contains_s)} of {len(caps)} caps; "
        f"{len(reduction.outside)} caps go to the hyperplane"
    )

    rows = []
    if reduction.contains_s:
        rows.append(s.coords)
    details = {
        "split_point": s.coords.tolist(),
        "caps_containing_split": len(reduction.contains_s),
        "projected_caps": len(reduction.outside),
        "cover_size": cover.size,
    }
    if reduction.ball_images:
        frame = EquatorFrame.from_axis(s.coords)
        # H = -s + s^perp, so intrinsic coordinates come from x + s.
        balls = [
            EuclideanBall(frame.to_intrinsic(image.center + s.coords)[0], image.radius)
            for image in reduction.ball_images
        ]
        solution = pierce_balls_danzer(balls, cover, tol)
        hyperplane_points = frame.to_ambient(solution.points) - s.coords
        rows.extend(stereographic_lift(s.coords, x) for x in hyperplane_points)
        details["anchor_cap"] = reduction.outside[solution.details["anchor"]]

    rows = complete_positive_hull(np.array(rows), rng_seed, tol)
    directions, report = verified_directions(ball, rows, tol)
    if len(directions) > 3 + cover.size:
        logger.warning(
            f"General construction used {len(directions)} directions, "
            f"above 3 + {cover.size}"
        )
    return ConstructionOutcome(directions, report, details)


def illuminate_general(
    ball: SpikyBall,
    cover: CoveringSpec,
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> DirectionSet:
    """Verified set of at most 3 + |cover| directions."""
    return construct_general(ball, cover, rng_seed, tol).directions


class GeneralConstruction:
    """Stereographic reduction to ball piercing for d >= 4."""

    name = "general"
    method = IlluminationMethod.GENERAL
    description = "3 + N(S^{d-2}, pi/6) directions for 2-illuminable spiky balls"
    cover_radius: Optional[float] = COVER_RADIUS

    def can_handle(self, ball: SpikyBall) -> bool:
        return ball.dim >= 4

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        return construct_general(ball, cover, seed, tol)
