"""Relative-interior points of equality polyhedra.

For P = {x | Ax = b, x >= 0} the relative interior is exactly the set of
maximal elements, so producing a point of ri(P) reduces to the maximal-element
LP, and membership testing reduces to a support comparison against the
maximal support.
"""

from __future__ import annotations

import numpy as np

from .errors import InfeasibleInputError
from .maximal import maximal_element_lp, maximal_support_iterative
from .model import (
    FEASIBILITY_TOL,
    SUPPORT_TOL,
    EqualityPolyhedron,
    MaximalResult,
    support_of,
)
from .simplex import SimplexConfig


def relative_interior_point(
    p: EqualityPolyhedron,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> MaximalResult:
    """A point of ri(p), or empty=True when p has no feasible point."""
    return maximal_element_lp(p, cfg, supp_tol)


def verify_relative_interior(
    p: EqualityPolyhedron,
    x,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
    feas_tol: float = FEASIBILITY_TOL,
) -> bool:
    """Whether a feasible x lies in ri(p).

    True exactly when the support of x equals the maximal support of p, which
    is computed here by the iterative route so the check stays independent of
    the single-LP construction.  Raises InfeasibleInputError when x is not
    feasible for p within feas_tol.
    """
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.shape[0] != p.cols:
        raise InfeasibleInputError(
            f"point has {x.shape[0]} components, polyhedron has {p.cols}")
    scale = 1.0 + float(np.max(np.abs(p.b_eq)))
    if np.any(x < -feas_tol) or float(np.max(np.abs(p.a_eq @ x - p.b_eq))) > feas_tol * scale:
        raise InfeasibleInputError("point is not feasible for the polyhedron")
    maximal = maximal_support_iterative(p, cfg, supp_tol)
    if maximal.empty:
        raise InfeasibleInputError("polyhedron is empty yet a feasible point was supplied")
    return support_of(x, supp_tol) == maximal.support
