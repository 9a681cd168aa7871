from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Protocol

from spikyball.coverings import CoveringSpec
from spikyball.geometry import Tolerance
from spikyball.model import DirectionSet, IlluminationReport, SpikyBall


class IlluminationMethod(Enum):
    """Available illumination constructions."""

    AUTO = "auto"
    TWO_D = "2d"
    THREE_D = "3d"
    GENERAL = "general"
    SYMMETRIC = "symmetric"
    UNCONDITIONAL = "unconditional"


@dataclass
class ConstructionOutcome:
    """Verified directions produced by a construction."""

    directions: DirectionSet
    report: IlluminationReport
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.directions)


class Construction(Protocol):
    """Protocol for illumination constructions."""

    name: str
    method: IlluminationMethod
    description: str
    # Radius of the covering of S^{d-2} the construction consumes, if any
    cover_radius: Optional[float]

    def can_handle(self, ball: SpikyBall) -> bool:
        """Check whether the construction applies to the instance."""
        ...

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        """Build and verify a direction set for the instance."""
        ...


@dataclass
class ConstructionResult:
    """Outcome of running a construction through the manager."""

    name: str
    status: bool
    directions: DirectionSet
    report: IlluminationReport
    details: Dict[str, Any]

    @property
    def size(self) -> int:
        return len(self.directions)

    @property
    def summary(self) -> str:
        lines = [
            f"Illumination ({self.name}):",
            f"- Dimension: {self.details.get('dim')}",
            f"- Vertices: {self.details.get('vertices')}",
            f"- Directions: {self.size}",
        ]
        if self.details.get("cover_size") is not None:
            lines.append(f"- Covering size: {self.details['cover_size']}")
        lines += [
            f"- Guaranteed bound: {self.details.get('theorem_bound')}",
            f"- Positive hull lower bound (d+1): {self.details.get('lower_bound')}",
            f"- Conjecture bound (2^d): {self.details.get('conjecture_bound')}",
            f"- Minimum margin: {self.report.min_margin:.3e}",
            f"- Status: {'PASSED' if self.status else 'FAILED'}",
        ]
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.name,
            "status": "PASSED" if self.status else "FAILED",
            "size": self.size,
            **self.details,
            "report": self.report.to_dict(),
        }
