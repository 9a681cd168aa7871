"""Coverings that can be written down directly."""

import logging
import math
from typing import Optional

from spikyball.exceptions import GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance

from .greedy import greedy_cover
from .mesh import circle_points
from .types import CoveringSpec
from .verification import verify_cover

logger = logging.getLogger(__name__)


def known_cover(m: int, alpha: float) -> Optional[CoveringSpec]:
    """Evenly spaced ceil(pi / alpha) points on S^1, None elsewhere.

    Arcs of length 2 alpha need at least 2 pi / (2 alpha) copies to wrap the
    circle, so the S^1 cover is minimal. The result is unverified.
    """
    if not (0.0 < alpha <= math.pi / 2 + 1e-12):
        raise GeometryError(f"Cap radius must lie in (0, pi/2], got {alpha}")
    if m != 1:
        return None
    count = math.ceil(math.pi / alpha - 1e-9)
    return CoveringSpec(sphere_dim=1, radius=alpha, centers=circle_points(count))


def obtain_cover(
    m: int,
    alpha: float,
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> CoveringSpec:
    """Verified cover: the known one when available, greedy otherwise."""
    spec = known_cover(m, alpha)
    if spec is not None:
        verification = verify_cover(spec, tol)
        if verification.passed:
            return verification.spec
        logger.warning(f"Known cover of S^{m} failed verification; using greedy")
    return greedy_cover(m, alpha, rng_seed=rng_seed, tol=tol)
