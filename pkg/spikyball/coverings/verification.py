"""Coverage checks for cap coverings.

S^1 is decided exactly from the gaps between consecutive centers. S^2 is
certified on an icosphere mesh: if every mesh vertex is within alpha - rho of
a center, where rho bounds the mesh covering radius, the whole sphere is
covered. Higher spheres get a sampled check with a stated confidence.
"""

import logging
import math
from dataclasses import replace

import numpy as np

from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance

from .mesh import icosphere, mesh_covering_radius, uniform_sphere
from .types import CoveringSpec, CoverStatus, CoverVerification

logger = logging.getLogger(__name__)

MESH_LEVELS = (6, 7)
SAMPLE_COUNT = 1_000_000
SAMPLE_CHUNK = 100_000
CONFIDENCE = 0.999


def farthest_points(points: np.ndarray, centers: np.ndarray, chunk: int = 50_000):
    """Distance from each point to its nearest center (chunked)."""
    distances = np.empty(points.shape[0])
    for start in range(0, points.shape[0], chunk):
        block = points[start : start + chunk]
        dots = np.clip(block @ centers.T, -1.0, 1.0)
        distances[start : start + chunk] = np.arccos(dots.max(axis=1))
    return distances


def _verify_circle(spec: CoveringSpec, tol: Tolerance) -> CoverVerification:
    angles = np.sort(np.arctan2(spec.centers[:, 1], spec.centers[:, 0]))
    gaps = np.diff(np.append(angles, angles[0] + 2.0 * math.pi))
    widest = int(np.argmax(gaps))
    gap = float(gaps[widest])
    passed = gap <= 2.0 * spec.radius + tol.eps_predicate
    middle = angles[widest] + gap / 2.0
    status = CoverStatus.CERTIFIED if passed else CoverStatus.UNVERIFIED
    return CoverVerification(
        spec=replace(spec, status=status, confidence=None),
        passed=passed,
        min_margin=spec.radius - gap / 2.0,
        witness=np.array([math.cos(middle), math.sin(middle)]),
        details={"method": "exact gaps", "largest_gap": gap},
    )


def _verify_mesh(spec: CoveringSpec, tol: Tolerance) -> CoverVerification:
    for level in MESH_LEVELS:
        vertices, _ = icosphere(level)
        rho = mesh_covering_radius(level)
        distances = farthest_points(vertices, spec.centers)
        worst = int(np.argmax(distances))
        farthest = float(distances[worst])
        details = {"method": f"icosphere level {level}", "mesh_radius": rho}
        if farthest > spec.radius + tol.eps_predicate:
            logger.debug(f"Mesh vertex {worst} is uncovered at level {level}")
            return CoverVerification(
                spec=replace(spec, status=CoverStatus.UNVERIFIED, confidence=None),
                passed=False,
                min_margin=spec.radius - farthest,
                witness=vertices[worst].copy(),
                details=details,
            )
        if farthest + rho <= spec.radius + tol.eps_predicate:
            return CoverVerification(
                spec=replace(spec, status=CoverStatus.CERTIFIED, confidence=None),
                passed=True,
                min_margin=spec.radius - farthest,
                witness=vertices[worst].copy(),
                details=details,
            )
        logger.debug(f"Mesh level {level} is inconclusive (rho={rho:.3e})")
    logger.warning(
        f"Covering of S^2 by {spec.size} caps could not be certified at the finest mesh"
    )
    return CoverVerification(
        spec=replace(spec, status=CoverStatus.UNVERIFIED, confidence=None),
        passed=False,
        min_margin=spec.radius - farthest,
        witness=vertices[worst].copy(),
        details={**details, "inconclusive": True},
    )


def _verify_sampled(
    spec: CoveringSpec, tol: Tolerance, samples: int, rng_seed: int
) -> CoverVerification:
    rng = np.random.default_rng(rng_seed)
    farthest, witness = -1.0, None
    for start in range(0, samples, SAMPLE_CHUNK):
        count = min(SAMPLE_CHUNK, samples - start)
        points = uniform_sphere(rng, count, spec.ambient_dim)
        distances = farthest_points(points, spec.centers)
        worst = int(np.argmax(distances))
        if distances[worst] > farthest:
            farthest, witness = float(distances[worst]), points[worst].copy()
    passed = farthest <= spec.radius + tol.eps_predicate
    if passed:
        checked = replace(spec, status=CoverStatus.PROBABILISTIC, confidence=CONFIDENCE)
    else:
        checked = replace(spec, status=CoverStatus.UNVERIFIED, confidence=None)
    return CoverVerification(
        spec=checked,
        passed=passed,
        min_margin=spec.radius - farthest,
        witness=witness,
        details={
            "method": f"{samples} uniform samples",
            # With no miss among n samples, the uncovered fraction is below
            # ln(1 / (1 - confidence)) / n at the stated confidence.
            "uncovered_fraction_bound": math.log(1.0 / (1.0 - CONFIDENCE)) / samples,
        },
    )


def verify_cover(
    spec: CoveringSpec,
    tol: Tolerance = DEFAULT_TOLERANCE,
    samples: int = SAMPLE_COUNT,
    rng_seed: int = 0,
) -> CoverVerification:
    """Check that the caps of ``spec`` cover the sphere.

    The returned verification carries a copy of ``spec`` with the status
    set to certified (S^1, S^2), probabilistic (S^3 and up) or unverified.
    """
    if spec.sphere_dim == 1:
        result = _verify_circle(spec, tol)
    elif spec.sphere_dim == 2:
        result = _verify_mesh(spec, tol)
    else:
        result = _verify_sampled(spec, tol, samples, rng_seed)
    logger.info(
        f"Covering of S^{spec.sphere_dim} by {spec.size} caps of radius "
        f"{spec.radius:.6g}: {result.status.value}"
    )
    return result
