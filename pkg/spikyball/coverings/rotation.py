"""Moving a covering into general position with respect to a cap family."""

import logging
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import special_ortho_group

from spikyball.exceptions import GeometryError, RetryBudgetExceeded
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, Tolerance
from spikyball.utils.config import get_settings

from .types import CoveringSpec

logger = logging.getLogger(__name__)


def boundary_clearance(centers: np.ndarray, caps: Sequence[SphericalCap]) -> float:
    """Smallest |dist(center_k, cap center) - cap radius| over all pairs."""
    if len(caps) == 0:
        return float("inf")
    cap_centers = np.array([cap.center.coords for cap in caps])
    radii = np.array([cap.radius for cap in caps])
    dots = np.clip(centers @ cap_centers.T, -1.0, 1.0)
    return float(np.min(np.abs(np.arccos(dots) - radii[None, :])))


def rotate_cover_generic(
    spec: CoveringSpec,
    caps_to_miss: Sequence[SphericalCap],
    rng_seed: int = 0,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_attempts: Optional[int] = None,
    accept: Optional[Callable[[CoveringSpec], bool]] = None,
) -> CoveringSpec:
    """Rotate ``spec`` until no center is within eps_geometry of a cap boundary.

    The identity is tried first, then seeded uniform rotations. ``accept``
    adds a further condition on the rotated covering.

    Raises:
        GeometryError: if a cap lives in another dimension.
        RetryBudgetExceeded: if no rotation works within ``max_attempts``.
    """
    dim = spec.ambient_dim
    for index, cap in enumerate(caps_to_miss):
        if cap.dim != dim:
            raise GeometryError(f"Cap {index} has dimension {cap.dim}, expected {dim}")
    budget = max_attempts or get_settings().retry_budget
    rng = np.random.default_rng(rng_seed)

    candidate = spec
    for attempt in range(budget):
        if attempt > 0:
            rotation = special_ortho_group.rvs(dim, random_state=rng)
            candidate = spec.rotated(rotation)
        clearance = boundary_clearance(candidate.centers, caps_to_miss)
        if clearance >= tol.eps_geometry and (accept is None or accept(candidate)):
            if attempt:
                logger.debug(f"Covering placed generically after {attempt} rotations")
            return candidate
    raise RetryBudgetExceeded(
        f"No rotation within {budget} attempts keeps every covering center "
        f"{tol.eps_geometry} away from the cap boundaries"
    )
