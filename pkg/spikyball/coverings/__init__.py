"""Coverings of spheres by equal closed caps."""

from .greedy import greedy_cover
from .known import known_cover, obtain_cover
from .mesh import (
    circle_points,
    fibonacci_sphere,
    icosphere,
    mesh_covering_radius,
    uniform_sphere,
)
from .rotation import boundary_clearance, rotate_cover_generic
from .types import CoveringSpec, CoverStatus, CoverVerification
from .verification import verify_cover

__all__ = [
    "CoveringSpec",
    "CoverStatus",
    "CoverVerification",
    "known_cover",
    "obtain_cover",
    "greedy_cover",
    "verify_cover",
    "rotate_cover_generic",
    "boundary_clearance",
    "icosphere",
    "mesh_covering_radius",
    "fibonacci_sphere",
    "circle_points",
    "uniform_sphere",
]
