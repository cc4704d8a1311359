"""Maximal elements of equality polyhedra.

A maximal element of P = {x | Ax = b, x >= 0} carries the maximum number of
positive components; its support is the unique maximal support of P.  Two
routes are provided:

* ``maximal_element_lp`` solves one LP over the homogeneous system
  [A | -b](x; w) = 0 with the variables split into an unbounded block and a
  [0, 1]-boxed block whose sum is maximized.  At any optimum every boxed
  component sits at 0 or 1, the boxed scaling variable w2 is 1 exactly when
  P is nonempty, and dividing the recovered ray by its scaling component
  yields a maximal element of P.

* ``maximal_support_iterative`` repeatedly maximizes the sum of the
  not-yet-positive coordinates directly over P, accumulating supports until
  no new index turns positive, and averages the iterates.  It is the
  independent oracle for the single-LP route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InvariantViolationError,
    IterationLimitError,
    NumericalBreakdownError,
    SolverFailureError,
)
from .model import (
    SUPPORT_TOL,
    BoundedLp,
    EqualityPolyhedron,
    MaximalResult,
    Sense,
    SolveStatus,
    Support,
    homogenize,
    support_of,
)
from .simplex import SimplexConfig, solve


@dataclass(frozen=True)
class SplitVariables:
    """Optimal blocks of the homogenized LP: x1/w1 unbounded, x2/w2 in [0, 1]."""

    x1: np.ndarray
    x2: np.ndarray
    w1: float
    w2: float


def _homogeneous_box_lp(p: EqualityPolyhedron) -> BoundedLp:
    """The split-variable LP over the cone of p.

    Variables are ordered (x1, w1, x2, w2); both splits share the cone
    coefficient block [A | -b], the objective counts only the boxed block.
    """
    h = homogenize(p)
    q1 = p.cols + 1
    objective = np.concatenate([np.zeros(q1), np.ones(q1)])
    lower = np.zeros(2 * q1)
    upper = np.concatenate([np.full(q1, np.inf), np.ones(q1)])
    return BoundedLp(np.hstack([h, h]), np.zeros(p.rows), objective,
                     Sense.MAXIMIZE, lower, upper)


def _solve_for_solver_failure(lp: BoundedLp, cfg: SimplexConfig):
    try:
        return solve(lp, cfg)
    except (IterationLimitError, NumericalBreakdownError) as exc:
        raise SolverFailureError(str(exc)) from exc


def maximal_element_lp_detailed(
    p: EqualityPolyhedron,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> tuple[MaximalResult, SplitVariables]:
    """Single-LP maximal element, also returning the optimal variable blocks."""
    cfg = cfg or SimplexConfig()
    lp = _homogeneous_box_lp(p)
    outcome = _solve_for_solver_failure(lp, cfg)
    # The zero vector is feasible and the objective is capped by the box, so
    # the solve can end only at an optimum.
    if outcome.status is not SolveStatus.OPTIMAL:
        raise InvariantViolationError(
            f"homogeneous box LP reported {outcome.status.value}")

    q1 = p.cols + 1
    z = outcome.x
    split = SplitVariables(x1=z[:p.cols], x2=z[q1:q1 + p.cols],
                           w1=float(z[p.cols]), w2=float(z[2 * q1 - 1]))
    if not audit_split_dichotomy(split, supp_tol):
        raise InvariantViolationError(
            "boxed block left the {0, 1} dichotomy; numerical trouble")

    if split.w2 <= supp_tol:
        return MaximalResult(True, None, Support.of(()), split.w1, split.w2), split
    if abs(split.w2 - 1.0) > supp_tol:
        raise InvariantViolationError(
            f"scaling variable w2 = {split.w2} is neither 0 nor 1")

    x_bar = (split.x1 + split.x2) / (split.w1 + 1.0)
    x_bar.setflags(write=False)
    result = MaximalResult(False, x_bar, support_of(x_bar, supp_tol),
                           split.w1, split.w2)
    return result, split


def maximal_element_lp(
    p: EqualityPolyhedron,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> MaximalResult:
    """Maximal element of p by a single homogenized LP.

    Returns empty=True when the scaling component optimizes to 0 (p has no
    feasible point); otherwise x_bar is a maximal element and support is the
    maximal support of p.
    """
    result, _ = maximal_element_lp_detailed(p, cfg, supp_tol)
    return result


def maximal_support_iterative(
    p: EqualityPolyhedron,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> MaximalResult:
    """Maximal element by direct iteration over p.

    Each round maximizes the sum of the min-capped coordinates not yet seen
    positive: a plain sum can be unbounded over p, so every such coordinate
    splits into a rewarded piece in [0, 1] plus a free excess piece, which
    bounds the objective without restricting p (only the support of the
    iterate is consumed, so any feasible point with positive remaining
    coordinates serves).  Terminates when a round turns no new coordinate
    positive; the returned point is the uniform average of the iterates.
    w1_star/w2_star are reported as 0/1 markers for consistency with the
    single-LP route since no homogenization is involved.
    """
    cfg = cfg or SimplexConfig()
    q = p.cols
    remaining = set(range(q))
    found: set[int] = set()
    iterates: list[np.ndarray] = []

    while True:
        probe = sorted(remaining)
        k = len(probe)
        a = np.hstack([p.a_eq, p.a_eq[:, probe]])
        objective = np.concatenate([np.zeros(q), np.ones(k)])
        lower = np.zeros(q + k)
        upper = np.concatenate([np.full(q, np.inf), np.ones(k)])
        lp = BoundedLp(a, p.b_eq, objective, Sense.MAXIMIZE, lower, upper)
        outcome = _solve_for_solver_failure(lp, cfg)
        if outcome.status is SolveStatus.INFEASIBLE:
            return MaximalResult(True, None, Support.of(()), 0.0, 0.0)
        if outcome.status is not SolveStatus.OPTIMAL:
            raise InvariantViolationError(
                f"capped subproblem reported {outcome.status.value}")
        point = np.asarray(outcome.x[:q]).copy()
        point[probe] += outcome.x[q:]
        iterates.append(point)
        positive = {j for j in range(q) if point[j] > supp_tol}
        new = positive & remaining
        found |= positive
        remaining -= positive
        if not new or not remaining:
            break

    x_bar = np.mean(iterates, axis=0)
    x_bar.setflags(write=False)
    support = Support.of(j + 1 for j in found)
    # A coordinate above supp_tol in one of K iterates shows up in the average
    # at >= supp_tol/K, so consistency is checked at the scaled tolerance.
    scaled = supp_tol / (len(iterates) + 1)
    if not (support_of(x_bar, supp_tol).indices <= support.indices
            <= support_of(x_bar, scaled).indices):
        raise InvariantViolationError(
            "averaged iterate disagrees with the accumulated support")
    return MaximalResult(False, x_bar, support, 0.0, 1.0)


def audit_split_dichotomy(result: SplitVariables, tol: float) -> bool:
    """Structural check on an optimal split: every boxed component within tol
    of 0 or of 1, and the unbounded block nonnegative within tol."""
    boxed = np.concatenate([result.x2, [result.w2]])
    dichotomy = (np.abs(boxed) <= tol) | (np.abs(boxed - 1.0) <= tol)
    unbounded = np.concatenate([result.x1, [result.w1]])
    return bool(np.all(dichotomy) and np.all(unbounded >= -tol))
