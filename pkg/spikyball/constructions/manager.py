import logging
from typing import Dict, List, Optional, Tuple, Union

from spikyball.bounds import theorem_bound
from spikyball.coverings import CoveringSpec, obtain_cover
from spikyball.exceptions import ConstructionError, GeometryError, RetryBudgetExceeded
from spikyball.geometry import DEFAULT_TOLERANCE, Tolerance
from spikyball.model import SpikyBall, Symmetry

from .general import GeneralConstruction
from .interfaces import Construction, ConstructionResult, IlluminationMethod
from .planar import PlanarConstruction
from .spatial import SpatialConstruction
from .symmetric import SymmetricConstruction
from .unconditional import UnconditionalConstruction

logger = logging.getLogger(__name__)


class IlluminationManager:
    """Registry and dispatcher for illumination constructions."""

    def __init__(self):
        self.constructions: Dict[str, Construction] = {}
        self._covers: Dict[Tuple[int, float, int], CoveringSpec] = {}
        self._register_default_constructions()

    def _register_default_constructions(self) -> None:
        """Register built-in constructions."""
        self.register_construction(PlanarConstruction())
        self.register_construction(SpatialConstruction())
        self.register_construction(GeneralConstruction())
        self.register_construction(SymmetricConstruction())
        self.register_construction(UnconditionalConstruction())

    def register_construction(self, construction: Construction) -> None:
        """Register a new construction."""
        if construction.name in self.constructions:
            raise ValueError(f"Construction '{construction.name}' already exists")
        self.constructions[construction.name] = construction

    def get_available_constructions(self) -> List[str]:
        """Get names of all registered constructions."""
        return list(self.constructions.keys())

    def select_method(self, ball: SpikyBall) -> str:
        """Construction used for ``auto``: symmetry first, then dimension."""
        if ball.dim >= 3 and ball.symmetry is Symmetry.UNCONDITIONAL:
            return IlluminationMethod.UNCONDITIONAL.value
        if ball.dim >= 3 and ball.symmetry is Symmetry.ORIGIN:
            return IlluminationMethod.SYMMETRIC.value
        if ball.dim == 2:
            return IlluminationMethod.TWO_D.value
        if ball.dim == 3:
            return IlluminationMethod.THREE_D.value
        return IlluminationMethod.GENERAL.value

    def cover_for(
        self,
        construction: Construction,
        dim: int,
        seed: int = 0,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> Optional[CoveringSpec]:
        """Verified covering of S^{dim-2} the construction needs, cached per run."""
        if construction.cover_radius is None:
            return None
        key = (dim - 2, construction.cover_radius, seed)
        if key not in self._covers:
            logger.info(
                f"Building a covering of S^{dim - 2} by caps of radius "
                f"{construction.cover_radius:.6f}"
            )
            self._covers[key] = obtain_cover(
                dim - 2, construction.cover_radius, rng_seed=seed, tol=tol
            )
        return self._covers[key]

    def run(
        self,
        ball: SpikyBall,
        method: Union[str, IlluminationMethod] = IlluminationMethod.AUTO,
        cover: Optional[CoveringSpec] = None,
        seed: int = 0,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> ConstructionResult:
        """Run one construction and compare its size with the known bounds.

        Raises:
            GeometryError: unknown method, or the construction does not apply.
            ConstructionError: the construction could not produce a verified set.
        """
        name = getattr(method, "value", method)
        if name == IlluminationMethod.AUTO.value:
            name = self.select_method(ball)
            logger.info(f"Selected the {name} construction")
        if name not in self.constructions:
            raise GeometryError(f"Construction '{name}' not found")

        construction = self.constructions[name]
        if not construction.can_handle(ball):
            raise GeometryError(
                f"Construction '{name}' cannot handle a d={ball.dim} "
                f"{ball.symmetry.value} instance"
            )
        if cover is None:
            cover = self.cover_for(construction, ball.dim, seed, tol)
        outcome = construction.construct(ball, cover, seed, tol)

        cover_size = cover.size if construction.cover_radius is not None else None
        details = {
            "dim": ball.dim,
            "vertices": ball.n,
            "seed": seed,
            "cover_size": cover_size,
            "theorem_bound": theorem_bound(construction.method, ball.dim, cover_size),
            "lower_bound": ball.dim + 1,
            "conjecture_bound": 2**ball.dim,
            **outcome.details,
        }
        logger.info(
            f"{name} construction: {outcome.size} directions "
            f"(bound {details['theorem_bound']})"
        )
        return ConstructionResult(
            name=name,
            status=outcome.report.verdict,
            directions=outcome.directions,
            report=outcome.report,
            details=details,
        )

    def run_all(
        self,
        ball: SpikyBall,
        seed: int = 0,
        tol: Tolerance = DEFAULT_TOLERANCE,
    ) -> Dict[str, ConstructionResult]:
        """Run every applicable construction, skipping those that fail."""
        results = {}
        for name, construction in self.constructions.items():
            if not construction.can_handle(ball):
                continue
            try:
                results[name] = self.run(ball, name, seed=seed, tol=tol)
            except (GeometryError, ConstructionError, RetryBudgetExceeded) as e:
                logger.info(f"Construction {name} skipped: {e}")
        return results
