"""Greedy cap coverings with local improvement.

The sphere is discretized into a finite element set with a known (S^1, S^2)
or estimated (higher spheres) covering radius rho, and caps of the working
radius alpha - rho are chosen greedily from a random candidate pool until
every element is covered. The cover is then shrunk one center at a time:
drop a center, relocate all centers to the minimax centers of their cells,
and keep the smaller cover whenever every element stays covered.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from spikyball.bounds.estimates import dumer_bound
from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance

from .mesh import (
    circle_points,
    fibonacci_sphere,
    icosphere,
    mesh_covering_radius,
    uniform_sphere,
)
from .types import CoveringSpec
from .verification import verify_cover

logger = logging.getLogger(__name__)

CIRCLE_ELEMENTS = 4096
MESH_LEVEL = 6
SAMPLED_ELEMENTS_PER_DIM = 10_000
MAX_SAMPLED_ELEMENTS = 40_000
SAMPLED_WORKING_FRACTION = 0.9
DEFAULT_CANDIDATES = {1: 256, 2: 400}
SAMPLED_CANDIDATES = 1000
REFINE_ROUNDS = 30
ENCLOSING_STEPS = 20
RESTARTS = 3
SAMPLED_DROP_ATTEMPTS = 3
REPAIR_ROUNDS = 50


def _distances(elements: np.ndarray, centers: np.ndarray) -> np.ndarray:
    dots = np.clip(elements @ centers.T, -1.0, 1.0)
    return np.arccos(dots.max(axis=1))


def _greedy(elements: np.ndarray, pool: np.ndarray, working: float) -> np.ndarray:
    """Greedy max coverage of the elements by caps centered in the pool."""
    covers = (elements @ pool.T) >= math.cos(working)
    uncovered = np.ones(elements.shape[0], dtype=bool)
    chosen = []
    while uncovered.any():
        gains = covers[uncovered].sum(axis=0)
        best = int(np.argmax(gains))
        if gains[best] == 0:
            # Nothing in the pool reaches this element; center a cap on it.
            element = elements[int(np.flatnonzero(uncovered)[0])]
            chosen.append(element)
            uncovered &= (elements @ element) < math.cos(working)
            continue
        chosen.append(pool[best])
        uncovered &= ~covers[:, best]
    return np.array(chosen)


def _enclosing_center(points: np.ndarray, start: np.ndarray) -> np.ndarray:
    """Approximate center of the smallest cap containing ``points``."""
    center = start
    for step in range(1, ENCLOSING_STEPS + 1):
        far = points[int(np.argmin(points @ center))]
        center = center + (far - center) / (step + 1)
        center = center / np.linalg.norm(center)
    return center


def _refine(
    elements: np.ndarray, centers: np.ndarray, working: float
) -> Tuple[np.ndarray, float]:
    """Minimax relocation; stops once the working radius is reached."""
    best = centers
    best_radius = float(_distances(elements, centers).max())
    current = centers
    for _ in range(REFINE_ROUNDS):
        if best_radius <= working:
            break
        assign = np.argmax(elements @ current.T, axis=1)
        moved = current.copy()
        for k in range(current.shape[0]):
            cell = elements[assign == k]
            if cell.shape[0]:
                moved[k] = _enclosing_center(cell, current[k])
        current = moved
        radius = float(_distances(elements, current).max())
        if radius < best_radius:
            best, best_radius = current, radius
    return best, best_radius


def _restart_points(
    count: int, sphere_dim: int, rng: np.random.Generator, attempt: int
) -> np.ndarray:
    if sphere_dim == 2 and attempt == 0:
        return fibonacci_sphere(count)
    return uniform_sphere(rng, count, sphere_dim + 1)


def _shrink(
    elements: np.ndarray,
    centers: np.ndarray,
    working: float,
    sphere_dim: int,
    rng: np.random.Generator,
    max_drops: Optional[int],
) -> np.ndarray:
    """Remove centers one at a time while the elements stay covered."""
    drops = 0
    while centers.shape[0] > 1 and (max_drops is None or drops < max_drops):
        drops += 1
        assign = np.argmax(elements @ centers.T, axis=1)
        sizes = np.bincount(assign, minlength=centers.shape[0])
        trial = np.delete(centers, int(np.argmin(sizes)), axis=0)
        trial, radius = _refine(elements, trial, working)
        attempt = 0
        while radius > working and attempt < RESTARTS:
            start = _restart_points(trial.shape[0], sphere_dim, rng, attempt)
            trial, radius = _refine(elements, start, working)
            attempt += 1
        if radius > working:
            break
        logger.debug(f"Cover shrunk to {trial.shape[0]} centers")
        centers = trial
    return centers


def _elements(
    sphere_dim: int, alpha: float, rng: np.random.Generator
) -> Tuple[np.ndarray, float]:
    """Element set and the working radius for caps of radius ``alpha``."""
    if sphere_dim == 1:
        return circle_points(CIRCLE_ELEMENTS), alpha - math.pi / CIRCLE_ELEMENTS
    if sphere_dim == 2:
        vertices, _ = icosphere(MESH_LEVEL)
        return np.asarray(vertices), alpha - mesh_covering_radius(MESH_LEVEL)
    count = min(SAMPLED_ELEMENTS_PER_DIM * sphere_dim, MAX_SAMPLED_ELEMENTS)
    return uniform_sphere(rng, count, sphere_dim + 1), SAMPLED_WORKING_FRACTION * alpha


def greedy_cover(
    m: int,
    alpha: float,
    rng_seed: int = 0,
    candidate_count: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> CoveringSpec:
    """Verified covering of S^m by closed caps of radius ``alpha``.

    Raises:
        GeometryError: m < 1 or alpha outside (0, pi/2].
        ConstructionError: the cover still fails verification after repair.
    """
    if m < 1:
        raise GeometryError(f"Sphere dimension must be >= 1, got {m}")
    if not (0.0 < alpha <= math.pi / 2 + 1e-12):
        raise GeometryError(f"Cap radius must lie in (0, pi/2], got {alpha}")
    rng = np.random.default_rng(rng_seed)
    elements, working = _elements(m, alpha, rng)
    if working <= 0:
        raise GeometryError(f"Cap radius {alpha} is below the mesh resolution")
    count = candidate_count or DEFAULT_CANDIDATES.get(m, SAMPLED_CANDIDATES)
    pool = uniform_sphere(rng, count, m + 1)
    pool = np.vstack([pool, -pool])

    centers = _greedy(elements, pool, working)
    greedy_size = centers.shape[0]
    if m == 1:
        even = math.ceil(math.pi / alpha - 1e-9)
        if even <= greedy_size:
            centers = circle_points(even)
    else:
        max_drops = None if m == 2 else SAMPLED_DROP_ATTEMPTS
        centers = _shrink(elements, centers, working, m, rng, max_drops)
    logger.info(
        f"Greedy cover of S^{m} at radius {alpha:.6g}: {greedy_size} centers, "
        f"{centers.shape[0]} after improvement"
    )

    verification = verify_cover(CoveringSpec(m, alpha, centers), tol)
    rounds = 0
    while not verification.passed and rounds < REPAIR_ROUNDS:
        if verification.witness is None:
            break
        rounds += 1
        centers = np.vstack([centers, verification.witness])
        verification = verify_cover(CoveringSpec(m, alpha, centers), tol)
    if not verification.passed:
        raise ConstructionError(
            f"Greedy cover of S^{m} at radius {alpha} failed verification"
        )
    if m >= 3:
        _compare_with_estimate(m, alpha, verification.spec.size)
    return verification.spec


def _compare_with_estimate(m: int, alpha: float, size: int) -> None:
    estimate = dumer_bound(m, alpha, variant="exact")
    if size > estimate:
        logger.warning(
            f"Greedy cover of S^{m} at radius {alpha:.6g} uses {size} caps, "
            f"above the covering estimate {estimate:.1f}"
        )
