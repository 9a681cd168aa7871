"""Minimum piercing of open arcs on the circle."""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np

from spikyball.exceptions import GeometryError, InvariantViolation
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, Tolerance

from .interfaces import PiercingSolution
from .witness import certify_cap_piercing

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def _arc_bounds(arcs: Sequence[SphericalCap], shrink: float) -> np.ndarray:
    """Closed intervals [center - r', center + r'] with r' = r - shrink."""
    rows = []
    for index, arc in enumerate(arcs):
        if arc.dim != 2:
            raise GeometryError(f"Arc {index} is not on the circle (dim {arc.dim})")
        if not arc.is_small:
            raise GeometryError(f"Arc {index} has radius {arc.radius} >= pi/2")
        half = arc.radius - shrink
        if half <= 0:
            raise GeometryError(f"Arc {index} is too short to pierce strictly")
        x, y = arc.center.coords
        theta = math.atan2(y, x)
        rows.append((theta - half, theta + half))
    return np.array(rows)


def _contains_origin(
    bounds: np.ndarray, i: int, origin: float, slack: float
) -> bool:
    offset = (origin - bounds[i, 0]) % TWO_PI
    length = bounds[i, 1] - bounds[i, 0]
    return offset <= length + slack or offset >= TWO_PI - slack


def _stab_from(
    bounds: np.ndarray, cut: int, slack: float
) -> List[Tuple[float, List[int]]]:
    """Greedy stabbing with the first point at the right end of arc ``cut``.

    Returns each point with the arcs it was placed for. Membership is decided
    here, while the unrolled coordinates are still exact.
    """
    origin = float(bounds[cut, 1])
    first = [cut] + [
        i
        for i in range(len(bounds))
        if i != cut and _contains_origin(bounds, i, origin, slack)
    ]
    stabs: List[Tuple[float, List[int]]] = [(origin, first)]
    taken = set(first)
    # Arcs missing the origin unroll into (origin, origin + 2 pi).
    unrolled = []
    for i in range(len(bounds)):
        if i in taken:
            continue
        start = (bounds[i, 0] - origin) % TWO_PI
        unrolled.append((start + bounds[i, 1] - bounds[i, 0], start, i))
    unrolled.sort()
    last = -math.inf
    for end, start, i in unrolled:
        if start > last:
            last = end
            stabs.append((origin + end, [i]))
        else:
            # Sorted by right end, so start <= last <= end.
            stabs[-1][1].append(i)
    return stabs


def _centered(bounds: np.ndarray, members: List[int], point: float) -> float:
    """Midpoint of the common part of the member arcs that contain ``point``."""
    lo, hi = -math.inf, math.inf
    for i in members:
        start = (bounds[i, 0] - point + math.pi) % TWO_PI - math.pi
        lo = max(lo, start)
        hi = min(hi, start + bounds[i, 1] - bounds[i, 0])
    return point + (lo + hi) / 2.0


def pierce_arcs_exact(
    arcs: Sequence[SphericalCap], tol: Tolerance = DEFAULT_TOLERANCE
) -> PiercingSolution:
    """Minimum set of points on S^1 meeting every open arc.

    Every arc endpoint is tried as the first cut and the remainder is
    stabbed greedily; the best run is optimal for the arcs shrunk by
    2 * eps_geometry. Each point is then moved to the middle of the common
    part of the arcs it serves.

    Raises:
        GeometryError: empty family or an arc that is not a proper open arc.
    """
    if len(arcs) == 0:
        raise GeometryError("Cannot pierce an empty arc family")
    bounds = _arc_bounds(arcs, 2.0 * tol.eps_geometry)
    best: List[Tuple[float, List[int]]] = []
    for cut in range(len(bounds)):
        stabs = _stab_from(bounds, cut, tol.eps_geometry)
        if not best or len(stabs) < len(best):
            best = stabs

    served = sorted(i for _, members in best for i in members)
    if served != list(range(len(bounds))):
        raise InvariantViolation(
            f"Arc sweep assigned {len(served)} memberships to {len(bounds)} arcs"
        )
    angles = [_centered(bounds, members, p) for p, members in best]
    points = np.array([[math.cos(a), math.sin(a)] for a in angles])
    witnesses, margin = certify_cap_piercing(arcs, points, tol)
    logger.debug(f"Pierced {len(arcs)} arcs with {len(points)} points")
    return PiercingSolution(
        points=points, witnesses=witnesses, optimal=True, min_margin=margin
    )
