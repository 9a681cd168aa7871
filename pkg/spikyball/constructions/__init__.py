"""Illumination constructions producing verified direction sets."""

from .completion import complete_positive_hull, verified_directions
from .general import (
    GeneralConstruction,
    choose_split_point,
    construct_general,
    illuminate_general,
    require_cover,
)
from .interfaces import (
    Construction,
    ConstructionOutcome,
    ConstructionResult,
    IlluminationMethod,
)
from .manager import IlluminationManager
from .planar import PlanarConstruction, construct_2d, illuminate_2d
from .spatial import (
    SpatialConstruction,
    complete_piercing_points,
    construct_3d,
    illuminate_3d,
)
from .symmetric import (
    SymmetricConstruction,
    construct_symmetric,
    equator_slices,
    illuminate_symmetric,
)
from .unconditional import (
    KSpanningSignature,
    PhiParameter,
    TwoDSurvey,
    UnconditionalConstruction,
    build_uv_vectors,
    classify_k_spanning,
    construct_unconditional,
    coordinate_directions,
    enumerate_signatures,
    escape_test,
    illuminate_unconditional,
    survey_two_d,
)

__all__ = [
    "IlluminationMethod",
    "Construction",
    "ConstructionOutcome",
    "ConstructionResult",
    "IlluminationManager",
    "complete_positive_hull",
    "verified_directions",
    "PlanarConstruction",
    "construct_2d",
    "illuminate_2d",
    "SpatialConstruction",
    "construct_3d",
    "complete_piercing_points",
    "illuminate_3d",
    "GeneralConstruction",
    "choose_split_point",
    "construct_general",
    "illuminate_general",
    "require_cover",
    "SymmetricConstruction",
    "construct_symmetric",
    "equator_slices",
    "illuminate_symmetric",
    "UnconditionalConstruction",
    "KSpanningSignature",
    "PhiParameter",
    "TwoDSurvey",
    "build_uv_vectors",
    "classify_k_spanning",
    "construct_unconditional",
    "coordinate_directions",
    "enumerate_signatures",
    "escape_test",
    "illuminate_unconditional",
    "survey_two_d",
]
