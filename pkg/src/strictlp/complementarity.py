"""Strictly complementary solutions and optimal partitions of canonical pairs.

Given the canonical pair

    maximize c'x s.t. Ax <= b, x >= 0      /      minimize b'y s.t. A'y >= c, y >= 0

with slacks u and v, a strictly complementary solution is a primal-dual
optimal pair with x + v > 0 and y + u > 0 componentwise.  Such a pair is
exactly a pair of relative-interior points of the two optimal faces, so each
method here reduces to maximal-element solves:

* ``scs_two_phase`` needs the optimal value and runs the maximal-element LP
  on each optimal face separately.
* ``scs_single`` needs nothing: it couples the two systems with the
  zero-duality-gap equation and runs one maximal-element LP on the product
  face.
* ``scs_maxmin_dual_face`` replaces the dual-face solve with a max-min LP
  once a primal relative-interior point is known, useful when the dual face
  carries many rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateCertificateError,
    InvariantViolationError,
    IterationLimitError,
    NoOptimalFaceError,
    NumericalBreakdownError,
    PartitionViolationError,
    SolverFailureError,
)
from .model import (
    SUPPORT_TOL,
    BoundedLp,
    CanonicalLp,
    EqualityPolyhedron,
    OptimalPartition,
    ScsResult,
    Sense,
    SolveStatus,
    Support,
    support_of,
)
from .maximal import maximal_element_lp
from .simplex import SimplexConfig, solve


class ScsMethod(Enum):
    TWO_PHASE = "two-phase"
    SINGLE_LP = "single"
    MAXMIN_DUAL_FACE = "maxmin"


class MaxMinReading(Enum):
    """Index-set convention for the max-min dual-face problem.

    COMPLEMENT constrains the dual variables whose complementary partners are
    zero at the primal point, the only indices that can be positive on the
    dual face.  LITERAL constrains the partners of the positive primal
    components instead; those dual variables are forced to zero over the face,
    so the literal certificate degenerates on any nontrivial instance.
    """

    COMPLEMENT = "complement"
    LITERAL = "literal"


@dataclass(frozen=True)
class OptimalFaces:
    """Optimal faces of a canonical pair at objective value z_star, as
    equality polyhedra over (x, u) and (y, v) respectively."""

    primal_face: EqualityPolyhedron
    dual_face: EqualityPolyhedron
    z_star: float


@dataclass(frozen=True)
class NoOptimalPair:
    """Marker: the coupled system has no primal-dual optimal pair (the primal
    is infeasible or unbounded; the single-LP route cannot tell which)."""

    w2_star: float


@dataclass(frozen=True)
class MaxMinDualResult:
    """Dual-face point from the max-min LP; t_star is the certified minimum
    over the constrained components (inf when the face is unbounded in t)."""

    y_bar: np.ndarray
    v_bar: np.ndarray
    t_star: float


def solve_canonical(lp: CanonicalLp, cfg: SimplexConfig | None = None):
    """Solve the slack-augmented primal of the canonical pair; the returned
    x stacks the n structural variables and the m slacks."""
    cfg = cfg or SimplexConfig()
    m, n = lp.m, lp.n
    bounded = BoundedLp(
        np.hstack([lp.a, np.eye(m)]), lp.b,
        np.concatenate([lp.c, np.zeros(m)]), Sense.MAXIMIZE,
        np.zeros(n + m), np.full(n + m, np.inf))
    return _solve_wrapped(bounded, cfg)


def optimal_value(lp: CanonicalLp, cfg: SimplexConfig | None = None) -> float | SolveStatus:
    """Optimal objective value of the canonical pair.

    Solves the slack-augmented primal; INFEASIBLE/UNBOUNDED come back as
    status values rather than exceptions.
    """
    outcome = solve_canonical(lp, cfg)
    if outcome.status is SolveStatus.OPTIMAL:
        return float(outcome.objective_value)
    return outcome.status


def build_optimal_faces(lp: CanonicalLp, z_star: float) -> OptimalFaces:
    """Both optimal-face polyhedra at the given objective value.

    The construction is total: a wrong z_star simply produces empty faces,
    detected downstream by the maximal-element solve.
    """
    m, n = lp.m, lp.n
    primal_rows = np.vstack([
        np.hstack([lp.a, np.eye(m)]),
        np.concatenate([lp.c, np.zeros(m)]),
    ])
    dual_rows = np.vstack([
        np.hstack([lp.a.T, -np.eye(n)]),
        np.concatenate([lp.b, np.zeros(n)]),
    ])
    primal = EqualityPolyhedron(primal_rows, np.concatenate([lp.b, [z_star]]))
    dual = EqualityPolyhedron(dual_rows, np.concatenate([lp.c, [z_star]]))
    return OptimalFaces(primal, dual, float(z_star))


def scs_two_phase(
    lp: CanonicalLp,
    z_star: float,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> ScsResult:
    """Strictly complementary solution from two independent face solves.

    Runs the maximal-element LP on the primal optimal face and then on the
    dual optimal face; each recovered point is a relative-interior point of
    its face.  Raises NoOptimalFaceError when either face is empty, which
    happens exactly when z_star is not the optimal value or the pair has no
    optimum at all.
    """
    cfg = cfg or SimplexConfig()
    faces = build_optimal_faces(lp, z_star)
    primal = maximal_element_lp(faces.primal_face, cfg, supp_tol)
    if primal.empty:
        raise NoOptimalFaceError("primal optimal face is empty; is z_star optimal?")
    dual = maximal_element_lp(faces.dual_face, cfg, supp_tol)
    if dual.empty:
        raise NoOptimalFaceError("dual optimal face is empty; is z_star optimal?")
    n, m = lp.n, lp.m
    x_bar, u_bar = primal.x_bar[:n], primal.x_bar[n:]
    y_bar, v_bar = dual.x_bar[:m], dual.x_bar[m:]
    return _assemble(lp, x_bar, u_bar, y_bar, v_bar, float(z_star), supp_tol)


def scs_single(
    lp: CanonicalLp,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
) -> ScsResult | NoOptimalPair:
    """Strictly complementary solution from one coupled solve, no z_star needed.

    The coupled polyhedron stacks the primal system, the dual system, and the
    gap equation c'x - b'y = 0 over (x, u, y, v) >= 0; a maximal element of it
    splits into relative-interior points of both faces with one shared scaling
    divisor.  An empty coupled face means the pair has no optimum and is
    reported as NoOptimalPair, not raised.
    """
    cfg = cfg or SimplexConfig()
    m, n = lp.m, lp.n
    rows = np.vstack([
        np.hstack([lp.a, np.eye(m), np.zeros((m, m)), np.zeros((m, n))]),
        np.hstack([np.zeros((n, n)), np.zeros((n, m)), lp.a.T, -np.eye(n)]),
        np.concatenate([lp.c, np.zeros(m), -lp.b, np.zeros(n)])[None, :],
    ])
    rhs = np.concatenate([lp.b, lp.c, [0.0]])
    coupled = EqualityPolyhedron(rows, rhs)
    result = maximal_element_lp(coupled, cfg, supp_tol)
    if result.empty:
        return NoOptimalPair(result.w2_star)
    point = result.x_bar
    x_bar = point[:n]
    u_bar = point[n:n + m]
    y_bar = point[n + m:n + 2 * m]
    v_bar = point[n + 2 * m:]
    z_star = float(lp.c @ x_bar)
    return _assemble(lp, x_bar, u_bar, y_bar, v_bar, z_star, supp_tol)


def scs_maxmin_dual_face(
    lp: CanonicalLp,
    z_star: float,
    primal_ri: tuple[np.ndarray, np.ndarray],
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
    reading: MaxMinReading = MaxMinReading.COMPLEMENT,
) -> MaxMinDualResult:
    """Dual-face completion of a known primal relative-interior point.

    Maximizes t subject to the dual-face equations plus y_i >= t and
    v_j >= t on the index sets picked by ``reading``.  A certified t above
    the support tolerance proves strict positivity there; otherwise
    DegenerateCertificateError is raised (with correct inputs and the
    COMPLEMENT reading this cannot happen for a pair that has an optimum).
    When t is unbounded on the face, the point is recovered with t pinned to
    1 and t_star reported as inf.
    """
    cfg = cfg or SimplexConfig()
    m, n = lp.m, lp.n
    x_bar, u_bar = np.asarray(primal_ri[0], dtype=float), np.asarray(primal_ri[1], dtype=float)
    sigma_x = support_of(x_bar, supp_tol)
    sigma_u = support_of(u_bar, supp_tol)
    if reading is MaxMinReading.LITERAL:
        y_rows = sorted(i - 1 for i in sigma_u)
        v_rows = sorted(j - 1 for j in sigma_x)
    else:
        y_rows = sorted(i for i in range(m) if (i + 1) not in sigma_u)
        v_rows = sorted(j for j in range(n) if (j + 1) not in sigma_x)

    faces = build_optimal_faces(lp, z_star)
    dual_face = faces.dual_face
    k = len(y_rows) + len(v_rows)
    if k == 0:
        # Nothing to certify: every dual component is complementary to a
        # positive primal one, so the face is {0} and any of its points works.
        result = maximal_element_lp(dual_face, cfg, supp_tol)
        if result.empty:
            raise NoOptimalFaceError("dual optimal face is empty; is z_star optimal?")
        return MaxMinDualResult(result.x_bar[:m], result.x_bar[m:], np.inf)

    outcome, t_col = _solve_maxmin(dual_face, m, n, y_rows, v_rows, cfg, t_upper=np.inf)
    if outcome.status is SolveStatus.INFEASIBLE:
        raise NoOptimalFaceError("dual optimal face is empty; is z_star optimal?")
    t_star = np.inf
    if outcome.status is SolveStatus.UNBOUNDED:
        # The face admits arbitrarily large minima; pin t to recover a point.
        outcome, t_col = _solve_maxmin(dual_face, m, n, y_rows, v_rows, cfg,
                                       t_upper=1.0, t_lower=1.0)
        if outcome.status is not SolveStatus.OPTIMAL:
            raise InvariantViolationError("pinned max-min resolve failed")
    else:
        t_star = float(outcome.x[t_col])
        if t_star <= supp_tol:
            raise DegenerateCertificateError(
                f"max-min value {t_star:.3e} is not strictly positive; "
                f"the {reading.value} index sets admit no positive completion")
    y_bar = outcome.x[:m].copy()
    v_bar = outcome.x[m:m + n].copy()
    y_bar.setflags(write=False)
    v_bar.setflags(write=False)
    return MaxMinDualResult(y_bar, v_bar, t_star)


def scs_maxmin(
    lp: CanonicalLp,
    z_star: float,
    cfg: SimplexConfig | None = None,
    supp_tol: float = SUPPORT_TOL,
    reading: MaxMinReading = MaxMinReading.COMPLEMENT,
) -> ScsResult:
    """Strictly complementary solution with the max-min dual-face shortcut.

    Solves the primal optimal face for its relative-interior point, then
    completes the dual side by ``scs_maxmin_dual_face`` reusing that point.
    """
    cfg = cfg or SimplexConfig()
    faces = build_optimal_faces(lp, z_star)
    primal = maximal_element_lp(faces.primal_face, cfg, supp_tol)
    if primal.empty:
        raise NoOptimalFaceError("primal optimal face is empty; is z_star optimal?")
    n = lp.n
    x_bar, u_bar = primal.x_bar[:n], primal.x_bar[n:]
    dual = scs_maxmin_dual_face(lp, z_star, (x_bar, u_bar), cfg, supp_tol, reading)
    return _assemble(lp, x_bar, u_bar, dual.y_bar, dual.v_bar, float(z_star), supp_tol)


def _solve_maxmin(dual_face: EqualityPolyhedron, m: int, n: int,
                  y_rows: list[int], v_rows: list[int], cfg: SimplexConfig,
                  t_upper: float, t_lower: float = 0.0):
    """LP: maximize t over the dual face with y_i - t - s = 0 on y_rows and
    v_j - t - s = 0 on v_rows.  Variables are (y, v, t, s...)."""
    k = len(y_rows) + len(v_rows)
    base_rows, base_cols = dual_face.rows, dual_face.cols
    total = base_cols + 1 + k
    a = np.zeros((base_rows + k, total))
    a[:base_rows, :base_cols] = dual_face.a_eq
    t_col = base_cols
    for pos, i in enumerate(y_rows):
        r = base_rows + pos
        a[r, i] = 1.0
        a[r, t_col] = -1.0
        a[r, t_col + 1 + pos] = -1.0
    for pos, j in enumerate(v_rows):
        r = base_rows + len(y_rows) + pos
        a[r, m + j] = 1.0
        a[r, t_col] = -1.0
        a[r, t_col + 1 + pos + len(y_rows)] = -1.0
    rhs = np.concatenate([dual_face.b_eq, np.zeros(k)])
    objective = np.zeros(total)
    objective[t_col] = 1.0
    lower = np.zeros(total)
    lower[t_col] = t_lower
    upper = np.full(total, np.inf)
    upper[t_col] = t_upper
    lp = BoundedLp(a, rhs, objective, Sense.MAXIMIZE, lower, upper)
    return _solve_wrapped(lp, cfg), t_col


def optimal_partition(x_bar, u_bar, y_bar, v_bar,
                      tol: float = SUPPORT_TOL) -> OptimalPartition:
    """Partition induced by a strictly complementary solution.

    Raises PartitionViolationError when some index lies on both or neither
    side of its pair, i.e. the input is not strictly complementary at tol.
    """
    sigma_x = support_of(x_bar, tol)
    sigma_v = support_of(v_bar, tol)
    sigma_u = support_of(u_bar, tol)
    sigma_y = support_of(y_bar, tol)
    n = np.asarray(x_bar).shape[0]
    m = np.asarray(u_bar).shape[0]
    _check_disjoint_union(sigma_x, sigma_v, n, "x/v")
    _check_disjoint_union(sigma_u, sigma_y, m, "u/y")
    return OptimalPartition(sigma_x, sigma_v, sigma_u, sigma_y)


def _check_disjoint_union(left: Support, right: Support, count: int, label: str):
    both = left.indices & right.indices
    if both:
        raise PartitionViolationError(
            f"indices {sorted(both)} are positive on both sides of the {label} pair")
    missing = set(range(1, count + 1)) - (left.indices | right.indices)
    if missing:
        raise PartitionViolationError(
            f"indices {sorted(missing)} are positive on neither side of the {label} pair")


def verify_scs(lp: CanonicalLp, result: ScsResult, tol: float = SUPPORT_TOL) -> bool:
    """Solver-free audit of a claimed strictly complementary solution.

    Checks primal and dual feasibility of the slack-augmented systems, a zero
    duality gap, componentwise positivity of each complementary pair's sum,
    and vanishing of each pair's minimum.
    """
    x, u = np.asarray(result.x_bar, float), np.asarray(result.u_bar, float)
    y, v = np.asarray(result.y_bar, float), np.asarray(result.v_bar, float)
    if x.shape[0] != lp.n or u.shape[0] != lp.m or y.shape[0] != lp.m or v.shape[0] != lp.n:
        return False
    feas = tol * (1.0 + float(np.max(np.abs(lp.b))) + float(np.max(np.abs(lp.c))))
    if np.any(np.concatenate([x, u, y, v]) < -feas):
        return False
    if float(np.max(np.abs(lp.a @ x + u - lp.b))) > feas:
        return False
    if float(np.max(np.abs(lp.a.T @ y - v - lp.c))) > feas:
        return False
    gap = abs(float(lp.c @ x) - float(lp.b @ y))
    if gap > tol * (1.0 + abs(result.z_star)):
        return False
    if np.any(np.minimum(x, v) > tol) or np.any(np.minimum(y, u) > tol):
        return False  # complementary slackness fails
    if np.any(x + v <= tol) or np.any(y + u <= tol):
        return False  # strictness fails
    return True


def binding_constraints(partition: OptimalPartition, m: int, n: int) -> tuple[list[int], list[int]]:
    """Constraints binding over the optimal faces, 1-based.

    A primal constraint binds over the whole primal face exactly when its
    slack is zero there (its index is missing from sigma_u); dually for the
    dual constraints and sigma_v.
    """
    primal = [i for i in range(1, m + 1) if i not in partition.sigma_u]
    dual = [j for j in range(1, n + 1) if j not in partition.sigma_v]
    return primal, dual


def _assemble(lp, x_bar, u_bar, y_bar, v_bar, z_star, supp_tol) -> ScsResult:
    partition = optimal_partition(x_bar, u_bar, y_bar, v_bar, supp_tol)
    result = ScsResult(x_bar, u_bar, y_bar, v_bar, partition, z_star)
    if not verify_scs(lp, result, supp_tol):
        raise InvariantViolationError(
            "recovered pair failed the strict-complementarity audit")
    return result


def _solve_wrapped(lp: BoundedLp, cfg: SimplexConfig):
    try:
        return solve(lp, cfg)
    except (IterationLimitError, NumericalBreakdownError) as exc:
        raise SolverFailureError(str(exc)) from exc
