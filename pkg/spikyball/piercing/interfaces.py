"""Result type shared by the piercing solvers."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np


@dataclass
class PiercingSolution:
    """Points that pierce a family of sets.

    Attributes:
        points: Piercing points as rows (unit vectors for cap families,
            hyperplane points for ball families).
        witnesses: For every input set, the index of a point inside it.
        optimal: True only when the solver proves minimality (S^1 and S^2).
        min_margin: Smallest witness margin over all input sets.
    """

    points: np.ndarray
    witnesses: List[int]
    optimal: bool
    min_margin: float
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return int(np.atleast_2d(self.points).shape[0]) if len(self.points) else 0

    @property
    def summary(self) -> str:
        return (
            f"Piercing Solution:\n"
            f"- Sets: {len(self.witnesses)}\n"
            f"- Points: {self.size}\n"
            f"- Optimal: {self.optimal}\n"
            f"- Minimum margin: {self.min_margin:.3e}"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": np.atleast_2d(self.points).tolist(),
            "witnesses": list(self.witnesses),
            "optimal": self.optimal,
            "min_margin": self.min_margin,
            **self.details,
        }
