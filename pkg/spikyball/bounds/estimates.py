"""Covering-number estimates and the illumination bounds built on them."""

import math
from enum import Enum
from typing import Optional, Union

from spikyball.exceptions import GeometryError

from .omega import omega, omega_lower_bound

PI_6 = math.pi / 6
PI_4 = math.pi / 4


class OmegaVariant(Enum):
    """Which cap fraction feeds the covering estimate."""

    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


def dumer_bound(
    m: int, alpha: float, variant: Union[str, OmegaVariant] = OmegaVariant.EXACT
) -> float:
    """Upper estimate of N_{S^m}(alpha).

    (1 / Omega) (1/2 + 2 ln ln m / ln m + 5 / ln m) m ln m, with Omega either
    the exact cap fraction or its closed-form lower bound (which gives a
    larger value).

    Raises:
        GeometryError: if m < 3.
    """
    if m < 3:
        raise GeometryError(f"The covering estimate needs m >= 3, got {m}")
    variant = OmegaVariant(variant)
    if variant is OmegaVariant.EXACT:
        fraction = omega(m, alpha)
    else:
        fraction = omega_lower_bound(m, alpha)
    log_m = math.log(m)
    factor = 0.5 + 2.0 * math.log(log_m) / log_m + 5.0 / log_m
    return factor * m * log_m / fraction


def spiky_bound(d: int) -> float:
    """3 + estimate of N_{S^{d-2}}(pi/6): directions for 2-illuminable spiky balls."""
    return 3.0 + dumer_bound(d - 2, PI_6, OmegaVariant.LOWER_BOUND)


def capbody_bound(d: int) -> float:
    """2 + estimate of N_{S^{d-2}}(pi/4): directions for symmetric cap bodies."""
    return 2.0 + dumer_bound(d - 2, PI_4, OmegaVariant.LOWER_BOUND)


def theorem_bound(method, d: int, cover_size: Optional[int] = None) -> int:
    """Guaranteed direction count of a construction.

    ``cover_size`` is the size N of the covering the construction used; it
    is required for the general and symmetric methods.
    """
    name = getattr(method, "value", method)
    if name == "2d":
        return 3
    if name == "3d":
        return 5
    if name == "unconditional":
        return 4 * d
    if name in ("general", "symmetric"):
        if cover_size is None:
            raise GeometryError(f"The {name} bound needs the covering size")
        return (3 if name == "general" else 2) + int(cover_size)
    raise GeometryError(f"Unknown construction method {name!r}")
