"""Data model for spiky balls and direction sets."""

import copy
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from spikyball.exceptions import GeometryError
from spikyball.geometry import DEFAULT_TOLERANCE, SphericalCap, UnitVector


class Symmetry(Enum):
    """Symmetry tag of a spiky ball."""

    NONE = "none"
    ORIGIN = "origin"
    UNCONDITIONAL = "unconditional"


def _frozen_matrix(rows: Any, name: str) -> np.ndarray:
    matrix = np.array(rows, dtype=float)
    if matrix.ndim != 2:
        raise GeometryError(f"{name} must be a list of equal-length vectors")
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True, eq=False)
class SpikyBall:
    """Union of conv(B^d ∪ {x_i}) over the vertices x_i.

    Only cheap structural checks run here; the vertex and symmetry
    invariants are checked by ``spikyball.model.spikes.validate_instance``.
    """

    dim: int
    vertices: np.ndarray
    symmetry: Symmetry = Symmetry.NONE
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        vertices = _frozen_matrix(self.vertices, "vertices")
        if self.dim < 2:
            raise GeometryError(f"Dimension must be >= 2, got {self.dim}")
        if vertices.shape[0] == 0:
            raise GeometryError("A spiky ball needs at least one vertex")
        if vertices.shape[1] != self.dim:
            raise GeometryError(
                f"Vertices have dimension {vertices.shape[1]}, expected {self.dim}"
            )
        norms = np.linalg.norm(vertices, axis=1)
        too_short = np.flatnonzero(norms <= 1.0 + DEFAULT_TOLERANCE.eps_geometry)
        if too_short.size:
            raise GeometryError(
                f"Vertex {int(too_short[0])} has norm {norms[too_short[0]]:.12g} <= 1"
            )
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "symmetry", Symmetry(self.symmetry))
        object.__setattr__(self, "metadata", copy.deepcopy(self.metadata))

    @property
    def n(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vertices, axis=1)

    @property
    def directions(self) -> np.ndarray:
        """Unit vectors y_i = x_i / |x_i| (rows)."""
        return self.vertices / self.norms[:, None]

    @property
    def alphas(self) -> np.ndarray:
        """Base cap radii alpha_i = arccos(1 / |x_i|)."""
        return np.arccos(1.0 / self.norms)

    def rotated(self, rotation: np.ndarray) -> "SpikyBall":
        """Image under an orthogonal map (the symmetry tag is dropped)."""
        return SpikyBall(self.dim, self.vertices @ rotation.T, Symmetry.NONE)


@dataclass(frozen=True)
class VertexCapPair:
    """The caps assigned to one vertex.

    ``base_cap`` is C(y_i, alpha_i) and ``piercing_cap`` is the open cap
    C(-y_i, pi/2 - alpha_i) of directions that illuminate the vertex.
    """

    vertex_index: int
    base_cap: SphericalCap
    piercing_cap: SphericalCap


@dataclass(frozen=True, eq=False)
class DirectionSet:
    """Finite set of directions claimed to illuminate an instance."""

    dim: int
    directions: np.ndarray

    def __post_init__(self):
        directions = np.array(self.directions, dtype=float)
        if directions.ndim != 2 or directions.shape[0] == 0:
            raise GeometryError("A direction set needs at least one direction")
        if directions.shape[1] != self.dim:
            raise GeometryError(
                f"Directions have dimension {directions.shape[1]}, expected {self.dim}"
            )
        norms = np.linalg.norm(directions, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-6):
            raise GeometryError("All directions must be unit vectors")
        directions = directions / norms[:, None]
        directions.setflags(write=False)
        object.__setattr__(self, "directions", directions)

    @classmethod
    def from_vectors(cls, vectors: List[Any]) -> "DirectionSet":
        rows = np.array([np.asarray(v, dtype=float) for v in vectors])
        rows = rows / np.linalg.norm(rows, axis=1)[:, None]
        return cls(dim=rows.shape[1], directions=rows)

    def __len__(self) -> int:
        return int(self.directions.shape[0])

    def unit_vectors(self) -> List[UnitVector]:
        return [UnitVector(row) for row in self.directions]

    def extended(self, extra: np.ndarray) -> "DirectionSet":
        return DirectionSet(self.dim, np.vstack([self.directions, extra]))

    def rotated(self, rotation: np.ndarray) -> "DirectionSet":
        return DirectionSet(self.dim, self.directions @ rotation.T)


@dataclass
class IlluminationReport:
    """Outcome of checking a direction set against an instance."""

    verdict: bool
    witnesses: List[Optional[int]]
    failures: List[int]
    positive_hull_ok: bool
    min_margin: float
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return int(self.details.get("size", 0))

    @property
    def summary(self) -> str:
        return (
            f"Illumination Check:\n"
            f"- Directions: {self.size}\n"
            f"- Vertices illuminated: {len(self.witnesses) - len(self.failures)}"
            f" of {len(self.witnesses)}\n"
            f"- Minimum margin: {self.min_margin:.3e}\n"
            f"- Positive hull is the whole space: {self.positive_hull_ok}\n"
            f"- Status: {'PASSED' if self.verdict else 'FAILED'}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "failures": self.failures,
            "positive_hull_ok": self.positive_hull_ok,
            "min_margin": self.min_margin,
            **self.details,
        }
