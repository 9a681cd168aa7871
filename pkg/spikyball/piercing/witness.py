"""Witness bookkeeping for cap piercing."""

from typing import List, Sequence, Tuple

import numpy as np

from spikyball.exceptions import ConstructionError
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, Tolerance


def cap_margins(caps: Sequence[SphericalCap], points: np.ndarray) -> np.ndarray:
    """Angular margins radius - dist(center, point), caps x points."""
    centers = np.array([cap.center.coords for cap in caps])
    radii = np.array([cap.radius for cap in caps])
    dots = np.clip(centers @ np.atleast_2d(points).T, -1.0, 1.0)
    return radii[:, None] - np.arccos(dots)


def certify_cap_piercing(
    caps: Sequence[SphericalCap],
    points: np.ndarray,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Tuple[List[int], float]:
    """Best witness per cap and the smallest witness margin.

    Open caps need a margin of at least eps_geometry, closed caps at least 0.

    Raises:
        ConstructionError: naming the first cap that is not pierced.
    """
    margins = cap_margins(caps, points)
    best = np.argmax(margins, axis=1)
    best_margin = margins[np.arange(len(caps)), best]
    required = np.array([tol.eps_geometry if cap.open else 0.0 for cap in caps])
    missed = np.flatnonzero(best_margin < required)
    if missed.size:
        i = int(missed[0])
        raise ConstructionError(
            f"Cap {i} is not pierced (best margin {best_margin[i]:.3e}, "
            f"need {required[i]:.1e})"
        )
    return [int(k) for k in best], float(best_margin.min())
