"""Piercing solvers for arcs, caps and Euclidean balls."""

from .arcs import pierce_arcs_exact
from .balls import pierce_balls_danzer
from .caps import boundary_intersections, cap_candidates, pierce_caps_exact
from .interfaces import PiercingSolution
from .reduction import CapReduction, boundary_gap, reduce_caps_via_stereographic
from .set_cover import exact_set_cover, greedy_set_cover
from .witness import cap_margins, certify_cap_piercing

__all__ = [
    "PiercingSolution",
    "pierce_arcs_exact",
    "pierce_caps_exact",
    "pierce_balls_danzer",
    "reduce_caps_via_stereographic",
    "CapReduction",
    "boundary_gap",
    "boundary_intersections",
    "cap_candidates",
    "exact_set_cover",
    "greedy_set_cover",
    "cap_margins",
    "certify_cap_piercing",
]
