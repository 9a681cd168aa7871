"""Directions for origin-symmetric cap bodies from a pi/4 covering.

The longest spike pair +-z1 is lit by +-z1 itself. Every other piercing cap
meets the equator orthogonal to z1 in a cap of radius at least pi/4, so a
pi/4 covering of that equator, rotated into general position, pierces them.
"""

import logging
import math
from typing import List, Optional

import numpy as np

from spikyball.coverings import CoveringSpec, rotate_cover_generic
from spikyball.exceptions import GeometryError, InvariantViolation
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    EquatorFrame,
    SphericalCap,
    Tolerance,
    equatorial_slice,
    positive_hull_full,
)
from spikyball.model import (
    DirectionSet,
    SpikyBall,
    Symmetry,
    is_convex,
    symmetry_violations,
    vertex_caps,
)
from spikyball.piercing import cap_margins

from .completion import verified_directions
from .general import require_cover
from .interfaces import ConstructionOutcome, IlluminationMethod

logger = logging.getLogger(__name__)

COVER_RADIUS = math.pi / 4
MIN_SLICE_RADIUS = math.pi / 4


def _partner(ball: SpikyBall, index: int) -> Optional[int]:
    gaps = np.linalg.norm(ball.directions + ball.directions[index], axis=1)
    match = np.flatnonzero(gaps <= 1e-9)
    return int(match[0]) if match.size else None


def _check_instance(ball: SpikyBall, tol: Tolerance) -> None:
    if ball.dim < 3:
        raise GeometryError(f"The symmetric construction needs d >= 3, got {ball.dim}")
    if ball.symmetry is Symmetry.NONE:
        raise GeometryError("Instance is not tagged origin-symmetric")
    violations = symmetry_violations(ball)
    if violations:
        raise GeometryError("Instance is not symmetric: " + "; ".join(violations))
    if not is_convex(ball, tol):
        raise GeometryError("Instance is not convex")


def equator_slices(
    caps: List[SphericalCap],
    indices: List[int],
    frame: EquatorFrame,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> List[SphericalCap]:
    """Slices of ``caps[i]`` for i in ``indices``, each of radius >= pi/4.

    Raises:
        InvariantViolation: a slice is empty or narrower than pi/4.
    """
    slices = []
    for index in indices:
        result = equatorial_slice(caps[index], frame.axis, frame)
        radius = result[0].radius if result is not None else 0.0
        if radius < MIN_SLICE_RADIUS - tol.eps_predicate:
            raise InvariantViolation(
                f"Equator slice of piercing cap {index} has radius {radius:.12g} "
                f"< pi/4"
            )
        slices.append(result[0])
    return slices


def construct_symmetric(
    ball: SpikyBall,
    cover: Optional[CoveringSpec],
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> ConstructionOutcome:
    """{+-z1} plus a rotated pi/4 covering of the equator orthogonal to z1.

    Raises:
        GeometryError: the instance is not a symmetric convex body in d >= 3,
            or the covering of S^{d-2} by pi/4 caps is missing or unusable.
        InvariantViolation: an equator slice is narrower than pi/4, or the
            output does not positively span the space.
        RetryBudgetExceeded: no rotation pierces every slice strictly.
        ConstructionError: the output fails verification.
    """
    _check_instance(ball, tol)
    cover = require_cover(cover, ball.dim - 2, COVER_RADIUS, tol)

    caps = [pair.piercing_cap for pair in vertex_caps(ball)]
    # argmin keeps the lowest index among equal radii
    first = int(np.argmin([cap.radius for cap in caps]))
    partner = _partner(ball, first)
    z1 = caps[first].center.coords
    frame = EquatorFrame.from_axis(z1)
    others = [i for i in range(ball.n) if i not in (first, partner)]
    slices = equator_slices(caps, others, frame, tol)
    other_caps = [caps[i] for i in others]

    def pierces_all(candidate: CoveringSpec) -> bool:
        if not other_caps:
            return True
        margins = cap_margins(other_caps, frame.to_ambient(candidate.centers))
        return bool(np.all(margins.max(axis=1) >= tol.eps_geometry))

    rotated = rotate_cover_generic(cover, slices, rng_seed, tol, accept=pierces_all)
    rows = np.vstack([z1, -z1, frame.to_ambient(rotated.centers)])
    if not positive_hull_full(rows, tol):
        raise InvariantViolation("Equator covering does not positively span z1^perp")
    directions, report = verified_directions(ball, rows, tol)
    logger.info(
        f"Symmetric construction: longest spike {first}, "
        f"{len(directions)} directions from a cover of size {cover.size}"
    )
    return ConstructionOutcome(
        directions,
        report,
        {
            "longest_spike": first,
            "partner": partner,
            "min_slice_radius": min((cap.radius for cap in slices), default=None),
            "cover_size": cover.size,
        },
    )


def illuminate_symmetric(
    ball: SpikyBall,
    cover: CoveringSpec,
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> DirectionSet:
    """Verified set of at most 2 + |cover| directions."""
    return construct_symmetric(ball, cover, rng_seed, tol).directions


class SymmetricConstruction:
    """Equator covering for origin-symmetric cap bodies."""

    name = "symmetric"
    method = IlluminationMethod.SYMMETRIC
    description = "2 + N(S^{d-2}, pi/4) directions for symmetric cap bodies"
    cover_radius: Optional[float] = COVER_RADIUS

    def can_handle(self, ball: SpikyBall) -> bool:
        return ball.dim >= 3 and ball.symmetry is not Symmetry.NONE

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        return construct_symmetric(ball, cover, seed, tol)
