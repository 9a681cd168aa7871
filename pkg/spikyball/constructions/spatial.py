"""At most five directions for 2-illuminable spiky balls in E^3."""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from spikyball.coverings import CoveringSpec
from spikyball.exceptions import GeometryError
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    SphericalCap,
    Tolerance,
    orthogonal_complement,
)
from spikyball.model import DirectionSet, SpikyBall, is_two_illuminable, vertex_caps
from spikyball.piercing import cap_margins, certify_cap_piercing, pierce_caps_exact
from spikyball.piercing.caps import MAX_CAPS

from .completion import complete_positive_hull, verified_directions
from .interfaces import ConstructionOutcome, IlluminationMethod

logger = logging.getLogger(__name__)

# Pairwise-intersecting disks in the plane can always be pierced by 4 points
DANZER_PIERCING = 4


def complete_piercing_points(
    points: np.ndarray,
    caps: Sequence[SphericalCap],
    witnesses: Sequence[int],
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> np.ndarray:
    """Piercing points plus the fewest completing directions found.

    Coplanar points need two completing directions. In that case the point
    with the most slack is rotated toward the plane normal by half its slack,
    which keeps every cap it witnesses pierced, and one direction suffices.
    """
    rows = complete_positive_hull(points, rng_seed, tol)
    if len(rows) <= len(points) + 1:
        return rows
    complement = orthogonal_complement(points)
    if complement.shape[0] == 0:
        return rows
    normal = complement[0]
    margins = cap_margins(caps, points) - tol.eps_geometry
    witnesses = np.asarray(witnesses)
    slack = np.array(
        [
            margins[witnesses == k, k].min() if np.any(witnesses == k) else math.pi
            for k in range(len(points))
        ]
    )
    k = int(np.argmax(slack))
    if slack[k] <= 0:
        return rows
    step = min(float(slack[k]), math.pi) / 2.0
    lifted = np.array(points, dtype=float)
    lifted[k] = math.cos(step) * lifted[k] + math.sin(step) * normal
    certify_cap_piercing(caps, lifted, tol)
    logger.debug(f"Lifted piercing point {k} off its plane by {step:.3e} rad")
    completed = complete_positive_hull(lifted, rng_seed, tol)
    return completed if len(completed) < len(rows) else rows


def construct_3d(
    ball: SpikyBall,
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_n: int = MAX_CAPS,
) -> ConstructionOutcome:
    """Minimum piercing of the piercing caps, completed to a positive basis.

    Raises:
        GeometryError: d != 3, the instance is not 2-illuminable or too large.
        ConstructionError: the completed set fails verification.
    """
    if ball.dim != 3:
        raise GeometryError(f"The spatial construction needs d = 3, got {ball.dim}")
    if ball.n > max_n:
        raise GeometryError(f"Exact cap piercing handles at most {max_n} caps")
    if not is_two_illuminable(ball, tol):
        raise GeometryError("Instance is not 2-illuminable")

    caps = [pair.piercing_cap for pair in vertex_caps(ball)]
    solution = pierce_caps_exact(caps, max_n=max_n, tol=tol)
    if solution.size > DANZER_PIERCING:
        logger.warning(
            f"Piercing caps need {solution.size} points, more than "
            f"{DANZER_PIERCING}; reporting a {solution.size + 1}-direction set"
        )
    rows = complete_piercing_points(
        solution.points, caps, solution.witnesses, rng_seed, tol
    )
    directions, report = verified_directions(ball, rows, tol)
    logger.info(
        f"Spatial construction: {solution.size} piercing points, "
        f"{len(directions)} directions"
    )
    return ConstructionOutcome(
        directions,
        report,
        {
            "piercing_size": solution.size,
            "candidates": solution.details.get("candidates"),
            "danzer_exceeded": solution.size > DANZER_PIERCING,
        },
    )


def illuminate_3d(
    ball: SpikyBall, rng_seed: int = 0, tol: Tolerance = DEFAULT_TOLERANCE
) -> DirectionSet:
    """Verified set of at most 5 directions (one more per extra piercing point)."""
    return construct_3d(ball, rng_seed, tol).directions


class SpatialConstruction:
    """Exact cap piercing on S^2 for d = 3."""

    name = "3d"
    method = IlluminationMethod.THREE_D
    description = "At most five directions for 2-illuminable spiky balls in E^3"
    cover_radius: Optional[float] = None

    def can_handle(self, ball: SpikyBall) -> bool:
        return ball.dim == 3

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        return construct_3d(ball, seed, tol)
