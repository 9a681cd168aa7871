"""Illumination verification of a spiky ball by a finite direction set."""

import logging
import math

import numpy as np

from spikyball.exceptions import GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance, positive_hull_full

from .types import DirectionSet, IlluminationReport, SpikyBall

logger = logging.getLogger(__name__)


def illumination_margins(ball: SpikyBall, dirs: DirectionSet) -> np.ndarray:
    """Matrix of angular margins (piercing radius - distance), vertices x dirs."""
    # The piercing cap of x_i is centered at -y_i with radius pi/2 - alpha_i.
    dots = np.clip(-ball.directions @ dirs.directions.T, -1.0, 1.0)
    radii = math.pi / 2 - ball.alphas
    return radii[:, None] - np.arccos(dots)


def verify_illumination(
    ball: SpikyBall, dirs: DirectionSet, tol: Tolerance = DEFAULT_TOLERANCE
) -> IlluminationReport:
    """Check that ``dirs`` illuminates ``ball``.

    A vertex counts as illuminated when some direction lies in its open
    piercing cap with angular margin at least ``eps_geometry``; the witness
    is the direction with the largest margin. The verdict additionally
    requires the positive hull of the directions to be the whole space.

    Raises:
        GeometryError: if the dimensions disagree.
    """
    if ball.dim != dirs.dim:
        raise GeometryError(
            f"Direction set has dimension {dirs.dim}, instance has {ball.dim}"
        )
    margins = illumination_margins(ball, dirs)
    best = np.argmax(margins, axis=1)
    best_margin = margins[np.arange(ball.n), best]
    lit = best_margin >= tol.eps_geometry

    witnesses = [int(k) if ok else None for k, ok in zip(best, lit)]
    failures = [int(i) for i in np.flatnonzero(~lit)]
    hull_ok = positive_hull_full(dirs.directions, tol)
    verdict = not failures and hull_ok

    report = IlluminationReport(
        verdict=bool(verdict),
        witnesses=witnesses,
        failures=failures,
        positive_hull_ok=bool(hull_ok),
        min_margin=float(np.min(best_margin)),
        details={"size": len(dirs), "dim": ball.dim, "vertices": ball.n},
    )
    if failures:
        logger.info(f"{len(failures)} of {ball.n} vertices are not illuminated")
    if not hull_ok:
        logger.info("Directions do not positively span the space")
    return report
