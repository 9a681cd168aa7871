"""Three directions for 2-illuminable spiky balls in the plane."""

import logging
import math
from typing import Optional

import numpy as np

from spikyball.coverings import CoveringSpec
from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance
from spikyball.model import DirectionSet, SpikyBall, is_two_illuminable

from .completion import verified_directions
from .interfaces import ConstructionOutcome, IlluminationMethod

logger = logging.getLogger(__name__)


def _wrap(angle: np.ndarray) -> np.ndarray:
    """Map angles to (-pi, pi]."""
    return math.pi - np.mod(math.pi - angle, 2.0 * math.pi)


def _unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def construct_2d(
    ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> ConstructionOutcome:
    """Place two directions inside the shortest piercing arc, plus a third.

    Every piercing arc meets the shortest arc A0 = (-r0, r0) (offsets from its
    center) and is at least as long, so it covers one of the two ends of A0.
    v1 sits midway between the left end and the nearest right endpoint of the
    arcs covering the left end; v2 is placed symmetrically; v3 closes the
    positive basis.

    Raises:
        GeometryError: the instance is not planar or not 2-illuminable.
        ConstructionError: an end of A0 leaves less than eps_geometry room.
    """
    if ball.dim != 2:
        raise GeometryError(f"The planar construction needs d = 2, got {ball.dim}")
    if not is_two_illuminable(ball, tol):
        raise GeometryError("Instance is not 2-illuminable")

    centers = np.arctan2(-ball.directions[:, 1], -ball.directions[:, 0])
    radii = math.pi / 2 - ball.alphas
    shortest = int(np.argmin(radii))
    theta0, r0 = float(centers[shortest]), float(radii[shortest])
    offsets = _wrap(centers - theta0)
    lo, hi = offsets - radii, offsets + radii

    left = lo <= -r0
    # Arcs not covering the left end of A0 reach past its right end.
    m1 = min(r0, float(np.min(hi[left] + r0))) / 2.0
    right = ~left
    m2 = r0 / 2.0
    if np.any(right):
        m2 = min(r0, float(np.min(r0 - lo[right]))) / 2.0
    if min(m1, m2) < tol.eps_geometry:
        raise ConstructionError(
            f"Shortest arc leaves only {min(m1, m2):.3e} rad of room at an end"
        )

    v1 = _unit(theta0 - r0 + m1)
    v2 = _unit(theta0 + r0 - m2)
    v3 = -(v1 + v2) / np.linalg.norm(v1 + v2)
    directions, report = verified_directions(ball, np.vstack([v1, v2, v3]), tol)
    logger.info(f"Planar construction: arc {shortest}, margins {m1:.3e}, {m2:.3e}")
    return ConstructionOutcome(
        directions,
        report,
        {"shortest_arc": shortest, "end_margins": [m1, m2]},
    )


def illuminate_2d(ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE) -> DirectionSet:
    """Verified 3-direction set for a 2-illuminable planar spiky ball."""
    return construct_2d(ball, tol).directions


class PlanarConstruction:
    """Shortest-arc construction for d = 2."""

    name = "2d"
    method = IlluminationMethod.TWO_D
    description = "Three directions for 2-illuminable planar spiky balls"
    cover_radius: Optional[float] = None

    def can_handle(self, ball: SpikyBall) -> bool:
        return ball.dim == 2

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        return construct_2d(ball, tol)
