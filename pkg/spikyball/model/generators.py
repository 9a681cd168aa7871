"""Seeded instance generators.

Every generator is deterministic for a fixed seed, samples by rejection with
an explicit retry budget and re-validates the instance it returns.
"""

import itertools
import logging
import math
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from spikyball.exceptions import GeometryError, RetryBudgetExceeded
from spikyball.geometry import (
    DEFAULT_TOLERANCE,
    EquatorFrame,
    EuclideanBall,
    Tolerance,
    UnitVector,
    ball_preimage_cap,
    pairwise_angular_distances,
)
from spikyball.utils.config import get_settings

from .spikes import (
    base_caps,
    closed_piercing_caps_intersect,
    ensure_valid,
    is_convex,
    is_packing,
    is_two_illuminable,
    validate_instance,
)
from .types import SpikyBall, Symmetry

logger = logging.getLogger(__name__)

# Longest vertex allowed; keeps alpha away from pi/2
MAX_VERTEX_NORM = 50.0
MAX_ALPHA = math.acos(1.0 / MAX_VERTEX_NORM)
# Minimum angular separation between sampled directions and their antipodes
MIN_SEPARATION = 0.03
# Radius factors are drawn from these ranges
TWO_ILLUMINABLE_FACTORS = (0.3, 0.95)
CAP_BODY_FACTORS = (0.4, 0.98)
CONVEXITY_SHRINK = 0.8
CONVEXITY_ATTEMPTS = 20


class InstanceKind(Enum):
    """Instance families produced by ``gen_instance``."""

    TWO_ILLUMINABLE = "two_illuminable"
    SYMMETRIC_CAP_BODY = "symmetric_cap_body"
    UNCONDITIONAL_CAP_BODY = "unconditional_cap_body"
    PLANAR_LIFTED = "planar_lifted"

    @classmethod
    def parse(cls, name: str) -> "InstanceKind":
        """Accept the full value or the short alias (``symmetric`` etc.)."""
        aliases = {
            "two": cls.TWO_ILLUMINABLE,
            "symmetric": cls.SYMMETRIC_CAP_BODY,
            "unconditional": cls.UNCONDITIONAL_CAP_BODY,
            "planar": cls.PLANAR_LIFTED,
        }
        key = name.strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            valid = sorted([k.value for k in cls] + list(aliases))
            raise GeometryError(
                f"Unknown instance kind {name!r}; expected one of {valid}"
            )


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed for batch generation."""
    return int(seed) ^ int(index)


def _budget(retry_budget: Optional[int]) -> int:
    budget = get_settings().retry_budget if retry_budget is None else retry_budget
    if budget < 1:
        raise GeometryError(f"Retry budget must be positive, got {budget}")
    return budget


def _random_direction(rng: np.random.Generator, dim: int) -> np.ndarray:
    while True:
        v = rng.standard_normal(dim)
        norm = float(np.linalg.norm(v))
        if norm > 1e-12:
            return v / norm


def _vertices_from(directions: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    alphas = np.minimum(alphas, MAX_ALPHA)
    return directions / np.cos(alphas)[:, None]


def _separated(candidate: np.ndarray, accepted: List[np.ndarray], gap: float) -> bool:
    if not accepted:
        return True
    dots = np.abs(np.array(accepted) @ candidate)
    return bool(np.all(np.arccos(np.clip(dots, -1.0, 1.0)) >= gap))


def _check_dim(dim: int, minimum: int = 2) -> None:
    if dim < minimum:
        raise GeometryError(f"Dimension must be >= {minimum}, got {dim}")


def _sample_directions(
    rng: np.random.Generator,
    dim: int,
    count: int,
    budget: int,
    accept: Callable[[np.ndarray, List[np.ndarray]], bool],
    constraint: str,
) -> List[np.ndarray]:
    accepted: List[np.ndarray] = []
    attempts = 0
    while len(accepted) < count:
        attempts += 1
        if attempts > budget:
            raise RetryBudgetExceeded(
                f"Gave up after {budget} attempts: {constraint} "
                f"({len(accepted)} of {count} directions placed)"
            )
        candidate = _random_direction(rng, dim)
        if accept(candidate, accepted):
            accepted.append(candidate)
    logger.debug(f"Placed {count} directions in {attempts} attempts")
    return accepted


def two_illuminable(
    dim: int,
    n: int,
    rng_seed: int,
    spread: float = math.pi,
    retry_budget: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Spiky ball whose open piercing caps pairwise intersect.

    Directions are uniform in the cone of half-angle ``spread`` around a
    random axis. Each alpha_i is a random fraction of
    min_j min((pi - d_ij) / 2, d_ij), which keeps every pair of piercing caps
    overlapping and no vertex inside another spike.
    """
    _check_dim(dim)
    if n < 1:
        raise GeometryError(f"Need at least one vertex, got {n}")
    if not (math.pi / 3 <= spread <= math.pi):
        raise GeometryError(f"Cone half-angle must lie in [pi/3, pi], got {spread}")
    rng = np.random.default_rng(rng_seed)
    budget = _budget(retry_budget)
    axis = _random_direction(rng, dim)

    def accept(candidate: np.ndarray, accepted: List[np.ndarray]) -> bool:
        in_cone = math.acos(min(1.0, float(np.dot(candidate, axis)))) <= spread
        return in_cone and _separated(candidate, accepted, MIN_SEPARATION)

    directions = np.array(
        _sample_directions(
            rng, dim, n, budget, accept, "directions must stay separated in the cone"
        )
    )
    if n == 1:
        alphas = np.array([rng.uniform(0.1, 1.2)])
    else:
        distances = pairwise_angular_distances(directions)
        limits = np.minimum((math.pi - distances) / 2.0, distances)
        np.fill_diagonal(limits, np.inf)
        factors = rng.uniform(*TWO_ILLUMINABLE_FACTORS, size=n)
        alphas = factors * limits.min(axis=1)
    ball = SpikyBall(dim, _vertices_from(directions, alphas), Symmetry.NONE)
    if not is_two_illuminable(ball, tol):
        raise GeometryError("Generated instance is not 2-illuminable")
    return ensure_valid(ball, tol)


def _packing_alphas(
    directions: np.ndarray, groups: np.ndarray, factors: np.ndarray
) -> np.ndarray:
    """alpha_i = factor * half the distance to the nearest other direction."""
    distances = pairwise_angular_distances(directions)
    np.fill_diagonal(distances, np.inf)
    nearest = distances.min(axis=1)
    # All members of a symmetry orbit share one radius.
    per_group = np.array([nearest[groups == g].min() for g in range(groups.max() + 1)])
    return factors[groups] * per_group[groups] / 2.0


def _convex_cap_body(
    directions: np.ndarray,
    groups: np.ndarray,
    factors: np.ndarray,
    symmetry: Symmetry,
    tol: Tolerance,
) -> SpikyBall:
    alphas = _packing_alphas(directions, groups, factors)
    for attempt in range(CONVEXITY_ATTEMPTS):
        vertices = _vertices_from(directions, alphas)
        ball = SpikyBall(directions.shape[1], vertices, symmetry)
        if is_packing(base_caps(ball), tol) and is_convex(ball, tol):
            return ensure_valid(ball, tol)
        logger.debug(f"Cap body not convex on attempt {attempt}; shrinking radii")
        alphas = alphas * CONVEXITY_SHRINK
    raise RetryBudgetExceeded(
        f"Cap body stayed non-convex after {CONVEXITY_ATTEMPTS} shrink steps"
    )


def symmetric_cap_body(
    dim: int,
    n: int,
    rng_seed: int,
    retry_budget: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Origin-symmetric cap body with ``n`` antipodal vertex pairs.

    Vertices are stored as x_1, -x_1, x_2, -x_2, ...
    """
    _check_dim(dim)
    if n < 1:
        raise GeometryError(f"Need at least one antipodal pair, got {n}")
    rng = np.random.default_rng(rng_seed)
    budget = _budget(retry_budget)
    seeds = _sample_directions(
        rng,
        dim,
        n,
        budget,
        lambda c, acc: _separated(c, acc, 2 * MIN_SEPARATION),
        "antipodal pairs must stay separated",
    )
    directions = np.array([v for y in seeds for v in (y, -y)])
    groups = np.repeat(np.arange(n), 2)
    factors = rng.uniform(*CAP_BODY_FACTORS, size=n)
    ball = _convex_cap_body(directions, groups, factors, Symmetry.ORIGIN, tol)
    if not closed_piercing_caps_intersect(ball, tol):
        raise GeometryError("Closed piercing caps of a symmetric body fail to meet")
    return ball


def sign_orbit(y: np.ndarray) -> np.ndarray:
    """All distinct images of y under coordinate sign flips (rows)."""
    support = np.flatnonzero(np.abs(y) > 1e-12)
    images = []
    for signs in itertools.product((1.0, -1.0), repeat=support.size):
        image = y.copy()
        image[support] = image[support] * np.array(signs)
        images.append(image)
    return np.array(images)


def unconditional_cap_body(
    dim: int,
    rng_seed: int,
    n: Optional[int] = None,
    max_support: int = 3,
    retry_budget: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Cap body symmetric in every coordinate hyperplane.

    ``n`` orbit seeds (default ``dim``) with 1 to ``max_support`` nonzero
    coordinates are expanded to their full sign-flip orbits.
    """
    _check_dim(dim, 3)
    n = dim if n is None else n
    if n < 1:
        raise GeometryError(f"Need at least one orbit, got {n}")
    rng = np.random.default_rng(rng_seed)
    budget = _budget(retry_budget)
    orbits: List[np.ndarray] = []
    attempts = 0
    while len(orbits) < n:
        attempts += 1
        if attempts > budget:
            raise RetryBudgetExceeded(
                f"Gave up after {budget} attempts: sign-flip orbits must stay "
                f"separated ({len(orbits)} of {n} placed)"
            )
        size = int(rng.integers(1, min(max_support, dim) + 1))
        support = rng.choice(dim, size=size, replace=False)
        y = np.zeros(dim)
        y[support] = rng.uniform(0.3, 1.0, size=size)
        y = y / np.linalg.norm(y)
        existing = [v for orbit in orbits for v in orbit]
        if _separated(y, existing, 2 * MIN_SEPARATION):
            orbits.append(sign_orbit(y))
    directions = np.vstack(orbits)
    groups = np.concatenate([np.full(len(orbit), g) for g, orbit in enumerate(orbits)])
    factors = rng.uniform(*CAP_BODY_FACTORS, size=n)
    return _convex_cap_body(directions, groups, factors, Symmetry.UNCONDITIONAL, tol)


def instance_from_planar_disks(
    s: UnitVector,
    balls: Sequence[EuclideanBall],
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Spiky ball whose piercing caps are the lifts of ``balls``.

    The balls live in the tangent hyperplane at -s. A piercing cap with
    center c and radius rho belongs to the vertex -c / sin(rho).

    Raises:
        GeometryError: if a lifted cap is not below a hemisphere, a vertex
            is too long or a vertex is swallowed by another spike.
    """
    if not balls:
        raise GeometryError("Need at least one ball to lift")
    vertices = []
    for index, ball in enumerate(balls):
        cap = ball_preimage_cap(s, ball, tol)
        if not cap.is_small:
            raise GeometryError(f"Ball {index} lifts to a cap of radius {cap.radius}")
        norm = 1.0 / math.sin(cap.radius)
        if norm > MAX_VERTEX_NORM:
            raise GeometryError(f"Ball {index} lifts to a vertex of norm {norm:.3g}")
        vertices.append(-cap.center.coords * norm)
    return ensure_valid(SpikyBall(s.dim, np.array(vertices), Symmetry.NONE), tol)


def planar_lifted(
    dim: int,
    n: int,
    rng_seed: int,
    retry_budget: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Lift of a random pairwise-intersecting ball family near -s."""
    _check_dim(dim, 3)
    if n < 1:
        raise GeometryError(f"Need at least one ball, got {n}")
    rng = np.random.default_rng(rng_seed)
    budget = _budget(retry_budget)
    s = UnitVector(_random_direction(rng, dim))
    frame = EquatorFrame.from_axis(s.coords)
    balls: List[EuclideanBall] = []
    attempts = 0
    while len(balls) < n:
        attempts += 1
        if attempts > budget:
            raise RetryBudgetExceeded(
                f"Gave up after {budget} attempts: lifted balls must pairwise "
                f"intersect with unswallowed vertices ({len(balls)} of {n} placed)"
            )
        scale = 0.5 * rng.uniform() ** (1 / (dim - 1))
        offset = _random_direction(rng, dim - 1) * scale
        center = -s.coords + frame.to_ambient(offset)[0]
        candidate = EuclideanBall(center, float(rng.uniform(0.25, 0.6)))
        if not all(candidate.intersects(b, slack=-1e-3) for b in balls):
            continue
        try:
            ball = instance_from_planar_disks(s, balls + [candidate], tol)
        except GeometryError:
            continue
        balls.append(candidate)
    if not is_two_illuminable(ball, tol):
        raise GeometryError("Lifted instance is not 2-illuminable")
    return ball


GENERATORS: Dict[InstanceKind, Callable[..., SpikyBall]] = {
    InstanceKind.TWO_ILLUMINABLE: two_illuminable,
    InstanceKind.SYMMETRIC_CAP_BODY: symmetric_cap_body,
    InstanceKind.PLANAR_LIFTED: planar_lifted,
}


def gen_instance(
    kind,
    dim: int,
    n: Optional[int],
    rng_seed: int,
    retry_budget: Optional[int] = None,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> SpikyBall:
    """Generate an instance of the given kind.

    ``n`` counts vertices for two_illuminable and planar_lifted, antipodal
    pairs for symmetric bodies and sign-flip orbits for unconditional ones.
    """
    kind = kind if isinstance(kind, InstanceKind) else InstanceKind.parse(kind)
    logger.info(f"Generating {kind.value} instance (d={dim}, n={n}, seed={rng_seed})")
    if kind is InstanceKind.UNCONDITIONAL_CAP_BODY:
        ball = unconditional_cap_body(
            dim, rng_seed, n=n, retry_budget=retry_budget, tol=tol
        )
    else:
        default_n = {
            InstanceKind.TWO_ILLUMINABLE: 8,
            InstanceKind.SYMMETRIC_CAP_BODY: 4,
            InstanceKind.PLANAR_LIFTED: 6,
        }[kind]
        ball = GENERATORS[kind](
            dim,
            default_n if n is None else n,
            rng_seed,
            retry_budget=retry_budget,
            tol=tol,
        )
    violations = validate_instance(ball, tol)
    if violations:
        raise GeometryError(f"Generated {kind.value} instance is invalid: {violations}")
    metadata = {"kind": kind.value, "seed": int(rng_seed)}
    return SpikyBall(ball.dim, ball.vertices, ball.symmetry, metadata)


def spanning_family_instance(
    d: int, k: int, supports: Sequence[Sequence[int]]
) -> SpikyBall:
    """Unconditional cap body whose piercing caps are k-spanning caps.

    Each support contributes all 2^k sign patterns of the center with
    entries +-1/sqrt(k); the vertices have norm sqrt(k / (k - 1)).
    """
    _check_dim(d, 3)
    if not 2 <= k <= d:
        raise GeometryError(f"k must lie in [2, {d}], got {k}")
    used: set = set()
    vertices = []
    norm = math.sqrt(k / (k - 1))
    for support in supports:
        support = sorted(int(j) for j in support)
        if len(support) != k or len(set(support)) != k:
            raise GeometryError(f"Support {support} does not have {k} distinct indices")
        if any(not 0 <= j < d for j in support):
            raise GeometryError(f"Support {support} is out of range for d={d}")
        if used.intersection(support):
            raise GeometryError("Supports must be pairwise disjoint")
        used.update(support)
        for signs in itertools.product((1.0, -1.0), repeat=k):
            y = np.zeros(d)
            y[support] = np.array(signs) / math.sqrt(k)
            vertices.append(y * norm)
    if not vertices:
        raise GeometryError("Need at least one support")
    return ensure_valid(SpikyBall(d, np.array(vertices), Symmetry.UNCONDITIONAL))
