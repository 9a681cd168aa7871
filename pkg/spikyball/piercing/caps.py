"""Minimum piercing of open caps on S^2 via exact set cover."""

import itertools
import logging
import math
from typing import List, Sequence

import numpy as np

from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, Tolerance

from .interfaces import PiercingSolution
from .set_cover import exact_set_cover
from .witness import cap_margins, certify_cap_piercing

logger = logging.getLogger(__name__)

MAX_CAPS = 20


def boundary_intersections(c1: SphericalCap, c2: SphericalCap) -> List[np.ndarray]:
    """Points where the boundary circles of two caps on S^2 cross.

    Writes p = a c1 + b c2 + t n with n the unit normal of span(c1, c2).
    """
    u, v = c1.center.coords, c2.center.coords
    g = float(np.dot(u, v))
    if abs(g) > 1.0 - 1e-12:
        return []
    h1, h2 = math.cos(c1.radius), math.cos(c2.radius)
    a = (h1 - g * h2) / (1.0 - g * g)
    b = (h2 - g * h1) / (1.0 - g * g)
    base = a * u + b * v
    t_sq = 1.0 - float(np.dot(base, base))
    if t_sq < 0.0:
        return []
    normal = np.cross(u, v)
    normal = normal / np.linalg.norm(normal)
    t = math.sqrt(t_sq)
    points = [base + t * normal, base - t * normal]
    return [p / np.linalg.norm(p) for p in points]


def cap_candidates(caps: Sequence[SphericalCap]) -> np.ndarray:
    """Cap centers plus all pairwise boundary-circle intersections."""
    candidates = [cap.center.coords for cap in caps]
    for c1, c2 in itertools.combinations(caps, 2):
        candidates.extend(boundary_intersections(c1, c2))
    return np.array(candidates)


def pierce_caps_exact(
    caps: Sequence[SphericalCap],
    max_n: int = MAX_CAPS,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> PiercingSolution:
    """Minimum piercing set of open caps on S^2 over the candidate set.

    Caps are shrunk by 2 * eps_geometry before candidates are generated, so
    every candidate that lies in a shrunk cap pierces the original cap with
    room to spare. Minimality holds relative to the candidate set.

    Raises:
        GeometryError: too many caps, wrong dimension or a cap that is not
            below a hemisphere.
        ConstructionError: the candidates do not pierce every cap.
    """
    if len(caps) == 0:
        raise GeometryError("Cannot pierce an empty cap family")
    if len(caps) > max_n:
        raise GeometryError(f"Exact cap piercing supports at most {max_n} caps")
    for index, cap in enumerate(caps):
        if cap.dim != 3:
            raise GeometryError(f"Cap {index} is not on S^2 (dim {cap.dim})")
        if not cap.is_small:
            raise GeometryError(f"Cap {index} has radius {cap.radius} >= pi/2")

    shrink = 2.0 * tol.eps_geometry
    shrunk = [cap.shrunk(shrink) for cap in caps]
    candidates = cap_candidates(shrunk)
    inside = cap_margins(caps, candidates) >= 1.5 * tol.eps_geometry
    masks = [
        sum(1 << int(i) for i in np.flatnonzero(column)) for column in inside.T
    ]
    universe = (1 << len(caps)) - 1
    chosen = exact_set_cover(universe, masks)
    if chosen is None:
        raise ConstructionError(
            f"Candidate set of {len(candidates)} points does not pierce all caps"
        )
    points = candidates[chosen]
    witnesses, margin = certify_cap_piercing(caps, points, tol)
    logger.debug(
        f"Pierced {len(caps)} caps with {len(points)} of {len(candidates)} candidates"
    )
    return PiercingSolution(
        points=points,
        witnesses=witnesses,
        optimal=True,
        min_margin=margin,
        details={"candidates": int(len(candidates))},
    )
