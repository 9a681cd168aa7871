"""Positive hull test.

pos(V) = {sum lambda_k v_k : lambda_k > 0} is all of E^d iff V spans E^d and
admits a strictly positive linear dependency.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from spikyball.exceptions import GeometryError

from .types import DEFAULT_TOLERANCE, Tolerance, VectorLike, as_array

logger = logging.getLogger(__name__)


def _stack(vectors: Sequence[VectorLike]) -> np.ndarray:
    if len(vectors) == 0:
        raise GeometryError("Positive hull of an empty set is undefined")
    if isinstance(vectors, np.ndarray):
        return np.atleast_2d(np.asarray(vectors, dtype=float))
    return np.array([as_array(v) for v in vectors])


def positive_dependency(vectors: Sequence[VectorLike]) -> Optional[np.ndarray]:
    """Coefficients maximizing min lambda_k with sum lambda_k v_k = 0, sum = 1.

    Returns None when the LP is infeasible.
    """
    points = _stack(vectors)
    n, dim = points.shape
    # Variables: lambda_1..lambda_n, t; maximize t.
    cost = np.zeros(n + 1)
    cost[-1] = -1.0
    a_eq = np.zeros((dim + 1, n + 1))
    a_eq[:dim, :n] = points.T
    a_eq[dim, :n] = 1.0
    b_eq = np.zeros(dim + 1)
    b_eq[dim] = 1.0
    a_ub = np.hstack([-np.eye(n), np.ones((n, 1))])
    b_ub = np.zeros(n)
    bounds = [(0, None)] * n + [(None, 1.0)]
    result = linprog(
        c=cost,
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=b_eq,
        bounds=bounds,
        method="highs",
    )
    if not result.success:
        logger.debug(f"Positive dependency LP failed: {result.message}")
        return None
    return result.x[:n]


def positive_hull_full(
    vectors: Sequence[VectorLike], tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Whether the positive hull of ``vectors`` is the whole space.

    True iff rank(V) = d and the max-min coefficient of a normalized positive
    dependency exceeds eps_predicate.
    """
    points = _stack(vectors)
    n, dim = points.shape
    if n < dim + 1:
        return False
    if np.linalg.matrix_rank(points) < dim:
        return False
    coefficients = positive_dependency(points)
    if coefficients is None:
        return False
    return float(coefficients.min()) > tol.eps_predicate
