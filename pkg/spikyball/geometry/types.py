"""Core geometric value types."""

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from spikyball.exceptions import GeometryError

# Largest deviation from unit norm accepted before renormalizing
UNIT_NORM_SLACK = 1e-6


@dataclass(frozen=True)
class Tolerance:
    """Numeric tolerances shared by predicates and constructions.

    Attributes:
        eps_predicate: Slack for boundary comparisons (closed caps include it,
            open caps exclude it).
        eps_geometry: Minimum margin a construction must certify when it
            claims to strictly pierce an open set.
    """

    eps_predicate: float = 1e-9
    eps_geometry: float = 1e-7

    def __post_init__(self):
        if not (0 < self.eps_predicate <= self.eps_geometry < 1e-3):
            raise GeometryError(
                "Tolerances must satisfy 0 < eps_predicate <= eps_geometry < 1e-3, "
                f"got {self.eps_predicate} and {self.eps_geometry}"
            )


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, eq=False)
class UnitVector:
    """A point of the unit sphere S^{d-1} in E^d."""

    coords: np.ndarray

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float).reshape(-1)
        if coords.size < 2:
            raise GeometryError(f"Unit vectors need dimension >= 2, got {coords.size}")
        norm = float(np.linalg.norm(coords))
        if abs(norm - 1.0) > UNIT_NORM_SLACK:
            raise GeometryError(f"Vector is not unit: norm {norm:.12g}")
        coords = coords / norm
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def normalized(cls, vector: Sequence[float]) -> "UnitVector":
        """Scale a nonzero vector onto the sphere."""
        arr = np.asarray(vector, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(arr))
        if norm < 1e-12:
            raise GeometryError("Cannot normalize a zero vector")
        return cls(arr / norm)

    @classmethod
    def axis(cls, dim: int, index: int, sign: float = 1.0) -> "UnitVector":
        """The coordinate direction sign * e_index (0-based index)."""
        coords = np.zeros(dim)
        coords[index] = 1.0 if sign >= 0 else -1.0
        return cls(coords)

    @property
    def dim(self) -> int:
        return int(self.coords.size)

    def __neg__(self) -> "UnitVector":
        return UnitVector(-self.coords)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coords, dtype=dtype)

    def __repr__(self) -> str:
        return f"UnitVector({np.array2string(self.coords, precision=6)})"


VectorLike = Union[UnitVector, np.ndarray, Sequence[float]]


def as_array(vector: VectorLike) -> np.ndarray:
    """Coordinates of a vector-like value as a flat float array."""
    if isinstance(vector, UnitVector):
        return vector.coords
    return np.asarray(vector, dtype=float).reshape(-1)


@dataclass(frozen=True)
class SphericalCap:
    """Cap C(center, radius) (open) or C[center, radius] (closed) of S^{d-1}."""

    center: UnitVector
    radius: float
    open: bool = False

    def __post_init__(self):
        if not isinstance(self.center, UnitVector):
            object.__setattr__(self, "center", UnitVector(self.center))
        radius = float(self.radius)
        if not (0.0 < radius < math.pi):
            raise GeometryError(f"Cap radius must lie in (0, pi), got {radius}")
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self) -> int:
        return self.center.dim

    @property
    def is_small(self) -> bool:
        """True when the cap is smaller than a hemisphere."""
        return self.radius < math.pi / 2

    def closed(self) -> "SphericalCap":
        return SphericalCap(self.center, self.radius, open=False)

    def shrunk(self, amount: float) -> "SphericalCap":
        """Concentric closed cap with the radius reduced by ``amount``."""
        if amount >= self.radius:
            raise GeometryError(
                f"Cannot shrink a cap of radius {self.radius} by {amount}"
            )
        return SphericalCap(self.center, self.radius - amount, open=False)


@dataclass(frozen=True, eq=False)
class EuclideanBall:
    """Closed Euclidean ball B[center, radius]."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        center = np.array(self.center, dtype=float).reshape(-1)
        center.setflags(write=False)
        object.__setattr__(self, "center", center)
        radius = float(self.radius)
        if not radius > 0:
            raise GeometryError(f"Ball radius must be positive, got {radius}")
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self) -> int:
        return int(self.center.size)

    def contains(self, point: VectorLike, slack: float = 0.0) -> bool:
        return float(np.linalg.norm(as_array(point) - self.center)) <= (
            self.radius + slack
        )

    def margin(self, point: VectorLike) -> float:
        """Radius minus distance to the center (nonnegative inside)."""
        return self.radius - float(np.linalg.norm(as_array(point) - self.center))

    def intersects(self, other: "EuclideanBall", slack: float = 0.0) -> bool:
        gap = float(np.linalg.norm(self.center - other.center))
        return gap <= self.radius + other.radius + slack
