"""Piercing pairwise-intersecting Euclidean balls from a pi/6 sphere covering.

With B0 = B(c0, r0) the smallest ball, the points c0 and c0 + sqrt(3) r0 u_k
(u_k running over a pi/6 covering of the unit sphere) meet every ball that
meets B0 and is at least as large.
"""

import itertools
import logging
import math
from typing import Sequence

import numpy as np

from spikyball.coverings.types import CoveringSpec, CoverStatus
from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, EuclideanBall, Tolerance

from .interfaces import PiercingSolution

logger = logging.getLogger(__name__)

STANDOFF = math.sqrt(3.0)


def _check_family(balls: Sequence[EuclideanBall], tol: Tolerance) -> int:
    if len(balls) == 0:
        raise GeometryError("Cannot pierce an empty ball family")
    dim = balls[0].dim
    for index, ball in enumerate(balls):
        if ball.dim != dim:
            raise GeometryError(
                f"Ball {index} has dimension {ball.dim}, expected {dim}"
            )
    for (i, a), (j, b) in itertools.combinations(enumerate(balls), 2):
        if not a.intersects(b, slack=tol.eps_predicate):
            raise GeometryError(f"Balls {i} and {j} do not intersect")
    return dim


def _check_cover(cover: CoveringSpec, dim: int, tol: Tolerance) -> None:
    if cover.status is CoverStatus.UNVERIFIED:
        raise GeometryError("Covering has not been verified")
    if cover.sphere_dim != dim - 1:
        raise GeometryError(
            f"Covering is of S^{cover.sphere_dim}, balls need S^{dim - 1}"
        )
    if cover.radius > math.pi / 6 + tol.eps_predicate:
        raise GeometryError(f"Covering radius {cover.radius} exceeds pi/6")


def pierce_balls_danzer(
    balls: Sequence[EuclideanBall],
    cover: CoveringSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> PiercingSolution:
    """Pierce a pairwise-intersecting ball family with 1 + |cover| points.

    Raises:
        GeometryError: two balls are disjoint, or the covering is unverified,
            of the wrong dimension or too coarse.
        ConstructionError: a ball is left unpierced.
    """
    dim = _check_family(balls, tol)
    _check_cover(cover, dim, tol)

    radii = np.array([ball.radius for ball in balls])
    smallest = int(np.argmin(radii))
    c0, r0 = balls[smallest].center, balls[smallest].radius
    points = np.vstack([c0, c0 + STANDOFF * r0 * cover.centers])

    centers = np.array([ball.center for ball in balls])
    distances = np.linalg.norm(centers[:, None, :] - points[None, :, :], axis=2)
    margins = radii[:, None] - distances
    witnesses = np.argmax(margins, axis=1)
    best = margins[np.arange(len(balls)), witnesses]
    missed = np.flatnonzero(best < -tol.eps_predicate)
    if missed.size:
        raise ConstructionError(
            f"Ball {int(missed[0])} is not pierced (margin {best[missed[0]]:.3e})"
        )
    logger.debug(
        f"Pierced {len(balls)} balls with {len(points)} points around ball {smallest}"
    )
    return PiercingSolution(
        points=points,
        witnesses=[int(k) for k in witnesses],
        optimal=False,
        min_margin=float(best.min()),
        details={"anchor": smallest},
    )
