"""Completing a direction set so that it positively spans the space."""

import logging
from typing import Tuple

import numpy as np

from spikyball.exceptions import ConstructionError
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    Tolerance,
    orthogonal_complement,
    positive_hull_full,
)
from spikyball.model import (
    DirectionSet,
    IlluminationReport,
    SpikyBall,
    verify_illumination,
)

logger = logging.getLogger(__name__)

PERTURBATION_ATTEMPTS = 32


def complete_positive_hull(
    directions: np.ndarray, rng_seed: int = 0, tol: Tolerance = DEFAULT_TOLERANCE
) -> np.ndarray:
    """Append directions until the positive hull is the whole space.

    A rank-deficient set first gets an orthonormal basis of the missing
    complement; then -normalize(sum) closes a strictly positive dependency.
    The completing direction is perturbed (seeded) only if the sum vanishes
    or the check still fails numerically.
    """
    rows = np.atleast_2d(np.asarray(directions, dtype=float))
    if positive_hull_full(rows, tol):
        return rows
    dim = rows.shape[1]
    if np.linalg.matrix_rank(rows) < dim:
        rows = np.vstack([rows, orthogonal_complement(rows)])
        if positive_hull_full(rows, tol):
            return rows

    total = rows.sum(axis=0)
    rng = np.random.default_rng(rng_seed)
    for attempt in range(PERTURBATION_ATTEMPTS):
        candidate = -total
        if attempt or np.linalg.norm(candidate) < 1e-9:
            candidate = candidate + 0.1 * rng.standard_normal(dim)
        norm = float(np.linalg.norm(candidate))
        if norm < 1e-12:
            continue
        completed = np.vstack([rows, candidate / norm])
        if positive_hull_full(completed, tol):
            if attempt:
                logger.debug(f"Completing direction perturbed {attempt} times")
            return completed
    raise ConstructionError("Could not complete the direction set to a positive basis")


def verified_directions(
    ball: SpikyBall, rows: np.ndarray, tol: Tolerance = DEFAULT_TOLERANCE
) -> Tuple[DirectionSet, IlluminationReport]:
    """Wrap ``rows`` as a direction set and verify it against ``ball``.

    Raises:
        ConstructionError: if the verification verdict is negative.
    """
    directions = DirectionSet(ball.dim, rows)
    report = verify_illumination(ball, directions, tol)
    if not report.verdict:
        raise ConstructionError(
            f"Construction output failed verification: "
            f"unlit vertices {report.failures}, "
            f"positive hull ok = {report.positive_hull_ok}"
        )
    return directions, report
