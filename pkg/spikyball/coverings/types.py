"""Covering data types."""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from spikyball.exceptions import GeometryError


class CoverStatus(Enum):
    """How far a covering has been checked."""

    CERTIFIED = "certified"
    PROBABILISTIC = "probabilistic"
    UNVERIFIED = "unverified"


@dataclass(frozen=True, eq=False)
class CoveringSpec:
    """Closed caps of radius ``radius`` centered at ``centers`` on S^m.

    ``status`` is only ever upgraded by ``verify_cover``; rotations keep it.
    """

    sphere_dim: int
    radius: float
    centers: np.ndarray
    status: CoverStatus = CoverStatus.UNVERIFIED
    confidence: Optional[float] = None

    def __post_init__(self):
        if self.sphere_dim < 1:
            raise GeometryError(f"Sphere dimension must be >= 1, got {self.sphere_dim}")
        radius = float(self.radius)
        if not (0.0 < radius <= math.pi / 2 + 1e-12):
            raise GeometryError(f"Covering radius must lie in (0, pi/2], got {radius}")
        centers = np.array(self.centers, dtype=float)
        if centers.ndim != 2 or centers.shape[0] == 0:
            raise GeometryError("A covering needs at least one center")
        if centers.shape[1] != self.sphere_dim + 1:
            raise GeometryError(
                f"Centers of a covering of S^{self.sphere_dim} need "
                f"{self.sphere_dim + 1} coordinates, got {centers.shape[1]}"
            )
        norms = np.linalg.norm(centers, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-6):
            raise GeometryError("Covering centers must be unit vectors")
        centers = centers / norms[:, None]
        centers.setflags(write=False)
        object.__setattr__(self, "radius", radius)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "status", CoverStatus(self.status))

    @property
    def size(self) -> int:
        return int(self.centers.shape[0])

    @property
    def ambient_dim(self) -> int:
        return self.sphere_dim + 1

    def rotated(self, rotation: np.ndarray) -> "CoveringSpec":
        """Image under an orthogonal map; coverage is unchanged."""
        return replace(self, centers=self.centers @ np.asarray(rotation).T)

    def unverified(self) -> "CoveringSpec":
        return replace(self, status=CoverStatus.UNVERIFIED, confidence=None)


@dataclass
class CoverVerification:
    """Result of ``verify_cover``.

    ``min_margin`` is alpha minus the largest distance from a checked point
    to its nearest center; ``witness`` is that point (uncovered when the
    check fails).
    """

    spec: CoveringSpec
    passed: bool
    min_margin: float
    witness: Optional[np.ndarray] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> CoverStatus:
        return self.spec.status

    @property
    def summary(self) -> str:
        lines = [
            "Covering Check:",
            f"- Sphere: S^{self.spec.sphere_dim}",
            f"- Radius: {self.spec.radius:.12g}",
            f"- Centers: {self.spec.size}",
            f"- Method: {self.details.get('method', 'unknown')}",
            f"- Minimum margin: {self.min_margin:.3e}",
            f"- Verification: {self.status.value}",
        ]
        if self.spec.confidence is not None:
            lines.append(f"- Confidence: {self.spec.confidence}")
        lines.append(f"- Status: {'PASSED' if self.passed else 'FAILED'}")
        return "\n".join(lines)
