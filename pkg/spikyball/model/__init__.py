"""Spiky ball model: instances, predicates, verification and generators."""

from .generators import (
    InstanceKind,
    derive_seed,
    gen_instance,
    instance_from_planar_disks,
    planar_lifted,
    sign_orbit,
    spanning_family_instance,
    symmetric_cap_body,
    two_illuminable,
    unconditional_cap_body,
)
from .spikes import (
    base_caps,
    closed_piercing_caps_intersect,
    ensure_valid,
    illuminates_vertex,
    is_convex,
    is_packing,
    is_two_illuminable,
    is_vertex,
    point_in_spike,
    spike_gap,
    symmetry_violations,
    validate_instance,
    vertex_cap,
    vertex_caps,
)
from .types import (
    DirectionSet,
    IlluminationReport,
    SpikyBall,
    Symmetry,
    VertexCapPair,
)
from .verification import illumination_margins, verify_illumination

__all__ = [
    "SpikyBall",
    "Symmetry",
    "VertexCapPair",
    "DirectionSet",
    "IlluminationReport",
    "vertex_cap",
    "vertex_caps",
    "base_caps",
    "spike_gap",
    "point_in_spike",
    "is_vertex",
    "is_two_illuminable",
    "is_packing",
    "is_convex",
    "closed_piercing_caps_intersect",
    "illuminates_vertex",
    "symmetry_violations",
    "validate_instance",
    "ensure_valid",
    "illumination_margins",
    "verify_illumination",
    "InstanceKind",
    "gen_instance",
    "derive_seed",
    "two_illuminable",
    "symmetric_cap_body",
    "unconditional_cap_body",
    "planar_lifted",
    "instance_from_planar_disks",
    "spanning_family_instance",
    "sign_orbit",
]
