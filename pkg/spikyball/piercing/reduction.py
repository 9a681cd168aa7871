"""Split a cap family at a point s and project the rest to balls."""

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from spikyball.exceptions import GeometryError
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    EuclideanBall,
    SphericalCap,
    Tolerance,
    UnitVector,
    angular_distance,
    cap_image_ball,
)

logger = logging.getLogger(__name__)


@dataclass
class CapReduction:
    """Caps containing s, and ball images of the others.

    ``ball_images[k]`` is the image of ``caps[outside[k]]``.
    """

    contains_s: List[int] = field(default_factory=list)
    outside: List[int] = field(default_factory=list)
    ball_images: List[EuclideanBall] = field(default_factory=list)


def boundary_gap(caps: Sequence[SphericalCap], s: UnitVector) -> float:
    """Smallest angular distance from s to a cap boundary."""
    return min(abs(angular_distance(cap.center, s) - cap.radius) for cap in caps)


def reduce_caps_via_stereographic(
    caps: Sequence[SphericalCap],
    s: UnitVector,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> CapReduction:
    """Caps containing s stay behind; the others map to balls in H.

    Raises:
        GeometryError: if s lies within eps_geometry of a cap boundary.
    """
    reduction = CapReduction()
    for index, cap in enumerate(caps):
        distance = angular_distance(cap.center, s)
        if distance < cap.radius - tol.eps_geometry:
            reduction.contains_s.append(index)
        elif distance > cap.radius + tol.eps_geometry:
            reduction.outside.append(index)
            reduction.ball_images.append(cap_image_ball(s, cap, tol))
        else:
            raise GeometryError(
                f"Projection center lies on the boundary of cap {index}"
            )
    logger.debug(
        f"s lies in {len(reduction.contains_s)} caps; "
        f"{len(reduction.ball_images)} caps projected to balls"
    )
    return reduction
