"""Spherical geometry primitives."""

from .hull import positive_dependency, positive_hull_full
from .sphere import (
    EquatorFrame,
    angular_distance,
    cap_contains,
    caps_intersect,
    equatorial_slice,
    orthogonal_complement,
    orthonormal_frame,
    pairwise_angular_distances,
)
from .stereographic import (
    ball_preimage_cap,
    cap_image_ball,
    stereographic_lift,
    stereographic_project,
)
from .types import (
    DEFAULT_TOLERANCE,
    EuclideanBall,
    SphericalCap,
    Tolerance,
    UnitVector,
    VectorLike,
    as_array,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "Tolerance",
    "UnitVector",
    "VectorLike",
    "SphericalCap",
    "EuclideanBall",
    "as_array",
    "angular_distance",
    "pairwise_angular_distances",
    "cap_contains",
    "caps_intersect",
    "EquatorFrame",
    "equatorial_slice",
    "orthonormal_frame",
    "orthogonal_complement",
    "stereographic_project",
    "stereographic_lift",
    "cap_image_ball",
    "ball_preimage_cap",
    "positive_dependency",
    "positive_hull_full",
]
