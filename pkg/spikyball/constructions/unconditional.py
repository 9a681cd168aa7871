"""Directions for unconditionally symmetric cap bodies.

The 2d coordinate directions +-e_j light every vertex whose piercing cap
strictly contains one of them. The other piercing caps are k-spanning: their
closures touch exactly k of the +-e_j. Tilting each e_j by a small angle phi
towards (u_j) or away from (v_j) the diagonal pierces those caps as well,
while the caps containing some +-e_j keep it inside for small phi.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from spikyball.coverings import CoveringSpec
from spikyball.exceptions import ConstructionError, GeometryError
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    SphericalCap,
    Tolerance,
    UnitVector,
    VectorLike,
    as_array,
)
from spikyball.model import (
    DirectionSet,
    SpikyBall,
    Symmetry,
    derive_seed,
    illumination_margins,
    is_convex,
    symmetry_violations,
    unconditional_cap_body,
    vertex_caps,
)

from .completion import verified_directions
from .interfaces import ConstructionOutcome, IlluminationMethod

logger = logging.getLogger(__name__)

PHI_START = math.pi / 8
PHI_FLOOR = 1e-6


@dataclass(frozen=True)
class KSpanningSignature:
    """Sign pattern of a k-spanning cap.

    The cap is centered at the vector with entries signs[i] / sqrt(k) at
    support[i] and zeros elsewhere, with radius arccos(1 / sqrt(k)).
    """

    k: int
    support: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        support = tuple(int(j) for j in self.support)
        signs = tuple(int(s) for s in self.signs)
        if self.k < 2:
            raise GeometryError(f"k must be at least 2, got {self.k}")
        if len(support) != self.k or len(set(support)) != self.k:
            raise GeometryError(f"Support {support} does not have {self.k} indices")
        if len(signs) != self.k or any(s not in (1, -1) for s in signs):
            raise GeometryError(f"Signs {signs} must be {self.k} values of +-1")
        if min(support) < 0:
            raise GeometryError(f"Support {support} has a negative index")
        order = sorted(range(self.k), key=lambda i: support[i])
        object.__setattr__(self, "support", tuple(support[i] for i in order))
        object.__setattr__(self, "signs", tuple(signs[i] for i in order))

    @property
    def radius(self) -> float:
        return math.acos(1.0 / math.sqrt(self.k))

    @property
    def sign_sum(self) -> int:
        return sum(self.signs)

    def center(self, d: int) -> np.ndarray:
        if self.k > d or max(self.support) >= d:
            raise GeometryError(f"Signature {self} does not fit in dimension {d}")
        center = np.zeros(d)
        center[list(self.support)] = np.array(self.signs) / math.sqrt(self.k)
        return center

    def cap(self, d: int) -> SphericalCap:
        """The open k-spanning cap in E^d."""
        return SphericalCap(UnitVector(self.center(d)), self.radius, open=True)


@dataclass(frozen=True)
class PhiParameter:
    """Tilt angle of the +-u_j, +-v_j directions."""

    phi: float

    def __post_init__(self):
        phi = float(self.phi)
        if not 0.0 < phi <= math.pi / 4 + 1e-15:
            raise GeometryError(f"phi must lie in (0, pi/4], got {phi}")
        object.__setattr__(self, "phi", phi)


def classify_k_spanning(
    cap: SphericalCap,
    d: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> Optional[KSpanningSignature]:
    """Signature of ``cap`` if it is k-spanning, None otherwise.

    The center must have exactly k entries of magnitude 1/sqrt(k) and zeros
    elsewhere, and the radius must equal arccos(1/sqrt(k)), all within
    eps_predicate.
    """
    if d is not None and cap.dim != d:
        raise GeometryError(f"Cap has dimension {cap.dim}, expected {d}")
    center = cap.center.coords
    support = np.flatnonzero(np.abs(center) > tol.eps_predicate)
    k = int(support.size)
    if k < 2:
        return None
    target = 1.0 / math.sqrt(k)
    if np.any(np.abs(np.abs(center[support]) - target) > tol.eps_predicate):
        return None
    if abs(cap.radius - math.acos(target)) > tol.eps_predicate:
        return None
    signs = tuple(int(s) for s in np.sign(center[support]))
    return KSpanningSignature(k, tuple(int(j) for j in support), signs)


def escape_test(
    cap: SphericalCap, u: VectorLike, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether u or -u lies in the open cap, i.e. |<center, u>| > cos(radius)."""
    dot = float(np.dot(cap.center.coords, as_array(u)))
    return abs(dot) > math.cos(cap.radius) + tol.eps_predicate


def enumerate_signatures(d: int) -> List[KSpanningSignature]:
    """Every k-spanning signature in E^d: k in [2, d], all supports and signs."""
    if d < 2:
        raise GeometryError(f"Dimension must be >= 2, got {d}")
    signatures = []
    for k in range(2, d + 1):
        for support in itertools.combinations(range(d), k):
            for signs in itertools.product((1, -1), repeat=k):
                signatures.append(KSpanningSignature(k, support, signs))
    return signatures


def build_uv_vectors(d: int, phi: float) -> DirectionSet:
    """The 4d directions +-u_j, +-v_j, in the order u_j, -u_j, v_j, -v_j.

    u_j has cos(phi) at position j and sin(phi)/sqrt(d-1) elsewhere; v_j
    has cos(phi) at j and -sin(phi)/sqrt(d-1) elsewhere.
    """
    if d < 2:
        raise GeometryError(f"Dimension must be >= 2, got {d}")
    phi = PhiParameter(phi).phi
    spread = math.sin(phi) / math.sqrt(d - 1)
    rows = []
    for j in range(d):
        u = np.full(d, spread)
        u[j] = math.cos(phi)
        v = -u
        v[j] = math.cos(phi)
        rows.extend([u, -u, v, -v])
    return DirectionSet(d, np.array(rows))


def coordinate_directions(d: int) -> DirectionSet:
    """+-e_j in the order e_1, -e_1, e_2, ..."""
    rows = []
    for j in range(d):
        e = np.zeros(d)
        e[j] = 1.0
        rows.extend([e, -e])
    return DirectionSet(d, np.array(rows))


def _check_instance(ball: SpikyBall, tol: Tolerance) -> None:
    if ball.dim < 3:
        raise GeometryError(
            f"The unconditional construction needs d >= 3, got {ball.dim}"
        )
    if ball.symmetry is not Symmetry.UNCONDITIONAL:
        raise GeometryError("Instance is not tagged unconditionally symmetric")
    violations = symmetry_violations(ball)
    if violations:
        raise GeometryError("Instance is not symmetric: " + "; ".join(violations))
    if not is_convex(ball, tol):
        raise GeometryError("Instance is not convex")


def _best_margins(ball: SpikyBall, dirs: DirectionSet) -> np.ndarray:
    return illumination_margins(ball, dirs).max(axis=1)


def construct_unconditional(
    ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> ConstructionOutcome:
    """Try +-e_j first, then halve phi from pi/8 until +-u_j, +-v_j work.

    Raises:
        GeometryError: the instance is not an unconditional cap body in d >= 3.
        ConstructionError: no phi down to 1e-6 lights every vertex.
    """
    _check_instance(ball, tol)
    spanning = sum(
        classify_k_spanning(pair.piercing_cap, tol=tol) is not None
        for pair in vertex_caps(ball)
    )
    details = {"spanning_caps": int(spanning)}

    coordinate = coordinate_directions(ball.dim)
    best = _best_margins(ball, coordinate)
    if best.min() >= tol.eps_geometry:
        directions, report = verified_directions(ball, coordinate.directions, tol)
        logger.info(f"Coordinate directions light all {ball.n} vertices")
        return ConstructionOutcome(directions, report, {**details, "two_d": True})
    logger.info(
        f"Coordinate directions leave {int(np.sum(best < tol.eps_geometry))} "
        f"vertices unlit; tilting by phi"
    )

    phi = PHI_START
    while phi >= PHI_FLOOR:
        candidate = build_uv_vectors(ball.dim, phi)
        best = _best_margins(ball, candidate)
        if best.min() >= tol.eps_geometry:
            break
        logger.debug(f"phi = {phi:.3e} leaves vertex {int(np.argmin(best))} unlit")
        phi /= 2.0
    else:
        worst = int(np.argmin(best))
        raise ConstructionError(
            f"No phi down to {PHI_FLOOR} pierces the piercing cap of vertex {worst} "
            f"(margin {best[worst]:.3e})"
        )
    directions, report = verified_directions(ball, candidate.directions, tol)
    logger.info(f"Tilted directions with phi = {phi:.6g} light all vertices")
    return ConstructionOutcome(
        directions, report, {**details, "two_d": False, "phi": phi}
    )


def illuminate_unconditional(
    ball: SpikyBall, tol: Tolerance = DEFAULT_TOLERANCE
) -> DirectionSet:
    """Verified set of 2d or 4d directions."""
    return construct_unconditional(ball, tol).directions


@dataclass
class TwoDSurvey:
    """How often the coordinate directions alone suffice."""

    dim: int
    count: int
    seed: int
    sizes: List[int] = field(default_factory=list)

    @property
    def resolved_two_d(self) -> int:
        return sum(size == 2 * self.dim for size in self.sizes)

    @property
    def fraction(self) -> float:
        return self.resolved_two_d / self.count if self.count else 0.0

    @property
    def summary(self) -> str:
        return (
            f"Coordinate Direction Survey:\n"
            f"- Dimension: {self.dim}\n"
            f"- Instances: {self.count} (seed {self.seed})\n"
            f"- Lit by the 2d coordinate directions: {self.resolved_two_d} "
            f"({self.fraction:.1%})\n"
            f"- Largest direction set: {max(self.sizes, default=0)}"
        )


def survey_two_d(
    d: int, count: int, seed: int = 0, tol: Tolerance = DEFAULT_TOLERANCE
) -> TwoDSurvey:
    """Run the construction on ``count`` generated unconditional cap bodies."""
    survey = TwoDSurvey(dim=d, count=count, seed=seed)
    for index in range(count):
        ball = unconditional_cap_body(d, derive_seed(seed, index), tol=tol)
        survey.sizes.append(len(construct_unconditional(ball, tol).directions))
    logger.info(
        f"{survey.resolved_two_d} of {count} instances in d = {d} "
        f"were lit by the coordinate directions"
    )
    return survey


class UnconditionalConstruction:
    """Coordinate and tilted directions for unconditional cap bodies."""

    name = "unconditional"
    method = IlluminationMethod.UNCONDITIONAL
    description = "At most 4d directions for unconditionally symmetric cap bodies"
    cover_radius: Optional[float] = None

    def can_handle(self, ball: SpikyBall) -> bool:
        return ball.dim >= 3 and ball.symmetry is Symmetry.UNCONDITIONAL

    def construct(
        self,
        ball: SpikyBall,
        cover: Optional[CoveringSpec],
        seed: int,
        tol: Tolerance,
    ) -> ConstructionOutcome:
        return construct_unconditional(ball, tol)
