"""Fraction of the sphere S^m covered by a closed cap."""

import math

from scipy.integrate import quad
from scipy.special import beta, betainc

from spikyball.exceptions import GeometryError


def _check(m: int, alpha: float) -> None:
    if m < 1:
        raise GeometryError(f"Sphere dimension must be >= 1, got {m}")
    if not (0.0 < alpha <= math.pi / 2 + 1e-12):
        raise GeometryError(f"Cap radius must lie in (0, pi/2], got {alpha}")


def omega(m: int, alpha: float) -> float:
    """Omega_m(alpha) = int_0^alpha sin^(m-1) / int_0^pi sin^(m-1).

    The denominator is B(1/2, m/2); the numerator is integrated with
    adaptive quadrature to a relative accuracy of 1e-12.
    """
    _check(m, alpha)
    numerator, _ = quad(
        lambda theta: math.sin(theta) ** (m - 1),
        0.0,
        alpha,
        epsabs=0.0,
        epsrel=1e-12,
        limit=200,
    )
    return numerator / beta(0.5, m / 2.0)


def omega_closed_form(m: int, alpha: float) -> float:
    """Omega_m(alpha) through the regularized incomplete beta function."""
    _check(m, alpha)
    return 0.5 * float(betainc(m / 2.0, 0.5, math.sin(alpha) ** 2))


def omega_lower_bound(m: int, alpha: float) -> float:
    """sin^m(alpha) / sqrt(2 pi (m + 1)), a lower bound for Omega_m(alpha)."""
    _check(m, alpha)
    return math.sin(alpha) ** m / math.sqrt(2.0 * math.pi * (m + 1))
