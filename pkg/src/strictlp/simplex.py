"""Revised primal simplex with native upper-bound handling.

Upper bounds are treated implicitly: a nonbasic variable may sit at either of
its bounds, and the ratio test admits "bound flips" where the entering
variable crosses to its opposite bound without any basis change.  This keeps
the basis at m rows regardless of how many variables carry finite upper
bounds, which is what makes the homogenized box models cheap to solve.

Feasibility comes from a two-phase scheme with one artificial variable per
row (no big-M constant).  The basis inverse is held densely and updated by
elementary row operations on each pivot; it is rebuilt from a fresh LU
factorization every ``refactor_interval`` pivots or as soon as the equation
residual drifts above ``drift_tolerance``.

Pivoting uses Dantzig's rule (most improving reduced cost) and switches to
Bland's least-index rule after a run of consecutive degenerate steps, which
guarantees termination on the cyclic cases that degenerate inputs produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.linalg

from .errors import IterationLimitError, NumericalBreakdownError, ValidationError
from .model import BoundedLp, Sense, SolveOutcome, SolveStatus

# Columns with a basis-inverse image smaller than this cannot serve as pivots.
_PIVOT_TOL = 1e-9
# Relative singularity threshold on the U diagonal of the basis LU factors.
_SINGULAR_TOL = 1e-12


class PivotRule(Enum):
    DANTZIG_WITH_BLAND_FALLBACK = "dantzig"
    BLAND = "bland"


@dataclass(frozen=True)
class SimplexConfig:
    eps_feas: float = 1e-9
    eps_opt: float = 1e-9
    max_iterations: int = 50_000
    pivot_rule: PivotRule = PivotRule.DANTZIG_WITH_BLAND_FALLBACK
    degenerate_streak_threshold: int = 50
    refactor_interval: int = 64
    drift_tolerance: float = 1e-8

    def __post_init__(self):
        if self.eps_feas <= 0 or self.eps_opt <= 0 or self.drift_tolerance <= 0:
            raise ValidationError("tolerances must be positive")
        if self.max_iterations <= 0 or self.degenerate_streak_threshold <= 0:
            raise ValidationError("iteration limits must be positive")


@dataclass(frozen=True)
class BasisState:
    """Partition of the variable indices (0-based) at a basic solution.

    ``basic`` has one entry per equality row; an entry of -1 marks a redundant
    row whose slot is held by a zero artificial variable rather than by any of
    the problem's own variables.
    """

    basic: tuple[int, ...]
    nonbasic_at_lower: frozenset[int]
    nonbasic_at_upper: frozenset[int]


@dataclass(frozen=True)
class InfeasibleEvidence:
    """Phase-1 certificate: the artificial variables cannot all be driven to zero."""

    artificial_optimum: float


class _Engine:
    """Mutable solver state over the artificial-augmented column set."""

    def __init__(self, a: np.ndarray, b: np.ndarray, lower: np.ndarray,
                 upper: np.ndarray, n_real: int, cfg: SimplexConfig):
        self.a = a
        self.b = b
        self.lower = lower
        self.upper = upper
        self.n_real = n_real
        self.cfg = cfg
        self.m, self.n_total = a.shape
        self.rhs_scale = 1.0 + (np.max(np.abs(b)) if b.size else 0.0)
        self.basic = np.arange(n_real, self.n_total)
        self.is_basic = np.zeros(self.n_total, dtype=bool)
        self.is_basic[self.basic] = True
        self.at_upper = np.zeros(self.n_total, dtype=bool)
        self.x = np.concatenate([lower[:n_real], np.zeros(self.m)])
        self.binv = np.eye(self.m)
        self.iterations = 0
        self.pivots_since_refactor = 0
        self.bland_mode = cfg.pivot_rule is PivotRule.BLAND
        self.degenerate_streak = 0

    # -- factorization ---------------------------------------------------

    def refactor(self) -> None:
        basis_cols = self.a[:, self.basic]
        lu, piv = scipy.linalg.lu_factor(basis_cols, check_finite=False)
        diag = np.abs(np.diag(lu))
        if diag.size and np.min(diag) <= _SINGULAR_TOL * max(1.0, np.max(diag)):
            raise NumericalBreakdownError("basis matrix is numerically singular")
        self.binv = scipy.linalg.lu_solve((lu, piv), np.eye(self.m), check_finite=False)
        self.pivots_since_refactor = 0
        self._recompute_basic_values()

    def _recompute_basic_values(self) -> None:
        nonbasic = ~self.is_basic
        rhs = self.b - self.a[:, nonbasic] @ self.x[nonbasic]
        self.x[self.basic] = self.binv @ rhs

    def residual(self) -> float:
        return float(np.max(np.abs(self.a @ self.x - self.b))) if self.m else 0.0

    # -- pivot selection -------------------------------------------------

    def _choose_entering(self, d: np.ndarray):
        movable = ~self.is_basic & (self.upper - self.lower > 0)
        up = movable & ~self.at_upper & (d > self.cfg.eps_opt)
        down = movable & self.at_upper & (d < -self.cfg.eps_opt)
        if not (up.any() or down.any()):
            return None, 0
        if self.bland_mode:
            j = int(np.nonzero(up | down)[0][0])
        else:
            score = np.where(up, d, np.where(down, -d, -np.inf))
            j = int(np.argmax(score))
        return j, (1 if up[j] else -1)

    def _ratio_test(self, j: int, direction: int, w: np.ndarray):
        """Returns (t, leave_pos, leave_to_upper); leave_pos -1 means bound flip.

        t is the step of the entering variable; basic values move by -dir*w*t.
        """
        delta = -direction * w
        xb = self.x[self.basic]
        lob = self.lower[self.basic]
        upb = self.upper[self.basic]

        limits = np.full(self.m, np.inf)
        dn = delta < -_PIVOT_TOL
        if dn.any():
            limits[dn] = np.maximum(xb[dn] - lob[dn], 0.0) / (-delta[dn])
        upmask = (delta > _PIVOT_TOL) & np.isfinite(upb)
        if upmask.any():
            limits[upmask] = np.maximum(upb[upmask] - xb[upmask], 0.0) / delta[upmask]

        t_basic = float(np.min(limits)) if self.m else np.inf
        t_flip = float(self.upper[j] - self.lower[j])

        if t_flip <= t_basic:
            return t_flip, -1, False
        if not np.isfinite(t_basic):
            return np.inf, -1, False

        tie = limits <= t_basic + 1e-9 * (1.0 + abs(t_basic))
        rows = np.nonzero(tie)[0]
        if self.bland_mode:
            pos = int(rows[np.argmin(self.basic[rows])])
        else:
            pos = int(rows[np.argmax(np.abs(delta[rows]))])
        return t_basic, pos, bool(delta[pos] > 0)

    # -- main loop --------------------------------------------------------

    def optimize(self, c: np.ndarray) -> str:
        """Runs to 'optimal' or 'unbounded' for the maximization objective c."""
        cfg = self.cfg
        while True:
            if self.iterations >= cfg.max_iterations:
                raise IterationLimitError(
                    f"pivot budget of {cfg.max_iterations} exhausted")
            if (self.pivots_since_refactor >= cfg.refactor_interval
                    or self.residual() > cfg.drift_tolerance * self.rhs_scale):
                self.refactor()

            y = c[self.basic] @ self.binv
            d = c - y @ self.a
            j, direction = self._choose_entering(d)
            if j is None:
                return "optimal"

            w = self.binv @ self.a[:, j]
            t, leave_pos, leave_to_upper = self._ratio_test(j, direction, w)
            if not np.isfinite(t):
                return "unbounded"
            self._apply_step(j, direction, w, t, leave_pos, leave_to_upper)

            self.iterations += 1
            if t <= cfg.eps_feas:
                self.degenerate_streak += 1
                if (self.degenerate_streak >= cfg.degenerate_streak_threshold
                        and cfg.pivot_rule is PivotRule.DANTZIG_WITH_BLAND_FALLBACK):
                    self.bland_mode = True
            else:
                self.degenerate_streak = 0
                if cfg.pivot_rule is PivotRule.DANTZIG_WITH_BLAND_FALLBACK:
                    self.bland_mode = False

    def _apply_step(self, j, direction, w, t, leave_pos, leave_to_upper) -> None:
        self.x[self.basic] -= direction * t * w
        if leave_pos < 0:
            # Bound flip: land exactly on the opposite bound, basis unchanged.
            self.x[j] = self.lower[j] if self.at_upper[j] else self.upper[j]
            self.at_upper[j] = ~self.at_upper[j]
            return
        entering_value = self.x[j] + direction * t
        leaving = int(self.basic[leave_pos])
        self.x[leaving] = self.upper[leaving] if leave_to_upper else self.lower[leaving]
        self.is_basic[leaving] = False
        self.at_upper[leaving] = leave_to_upper
        self.basic[leave_pos] = j
        self.is_basic[j] = True
        self.at_upper[j] = False
        self.x[j] = entering_value
        self._eta_update(w, leave_pos)

    def _eta_update(self, w: np.ndarray, r: int) -> None:
        pivot = w[r]
        row = self.binv[r] / pivot
        self.binv -= np.outer(w, row)
        self.binv[r] = row
        self.pivots_since_refactor += 1

    # -- artificial handling ----------------------------------------------

    def pivot_out_artificials(self) -> None:
        """Swap basic artificials for real columns where a usable pivot exists;
        rows where none exists are redundant and keep their zero artificial."""
        self.refactor()
        for r in range(self.m):
            if self.basic[r] < self.n_real:
                continue
            row = self.binv[r] @ self.a[:, :self.n_real]
            row[self.is_basic[:self.n_real]] = 0.0
            jbest = int(np.argmax(np.abs(row)))
            if abs(row[jbest]) <= 1e-7:
                continue
            w = self.binv @ self.a[:, jbest]
            leaving = int(self.basic[r])
            self.x[leaving] = 0.0
            self.is_basic[leaving] = False
            self.at_upper[leaving] = False
            self.basic[r] = jbest
            self.is_basic[jbest] = True
            self.at_upper[jbest] = False
            self._eta_update(w, r)

    def pin_artificials(self) -> None:
        upper = self.upper.copy()
        upper[self.n_real:] = 0.0
        self.upper = upper
        art = np.arange(self.n_real, self.n_total)
        nonbasic_art = art[~self.is_basic[art]]
        self.x[nonbasic_art] = 0.0
        self.at_upper[nonbasic_art] = False

    def basis_state(self) -> BasisState:
        basic = tuple(int(k) if k < self.n_real else -1 for k in self.basic)
        real = np.arange(self.n_real)
        nb = real[~self.is_basic[:self.n_real]]
        at_up = frozenset(int(k) for k in nb[self.at_upper[nb]])
        at_lo = frozenset(int(k) for k in nb[~self.at_upper[nb]])
        return BasisState(basic, at_lo, at_up)


def _build_engine(lp: BoundedLp, cfg: SimplexConfig) -> _Engine:
    m, n = lp.rows, lp.cols
    start = lp.lower.copy()
    resid = lp.b_eq - lp.a_eq @ start
    signs = np.where(resid >= 0, 1.0, -1.0)
    a_aug = np.hstack([lp.a_eq, np.diag(signs)])
    lower = np.concatenate([lp.lower, np.zeros(m)])
    upper = np.concatenate([lp.upper, np.full(m, np.inf)])
    eng = _Engine(a_aug, lp.b_eq, lower, upper, n, cfg)
    eng.binv = np.diag(signs)
    eng.x = np.concatenate([start, np.abs(resid)])
    return eng


def _run_phase1(eng: _Engine, cfg: SimplexConfig) -> float:
    art_sum = float(np.sum(eng.x[eng.n_real:]))
    if art_sum <= cfg.eps_feas * eng.rhs_scale:
        return art_sum  # start point already feasible (e.g. zero right-hand side)
    c1 = np.zeros(eng.n_total)
    c1[eng.n_real:] = -1.0
    status = eng.optimize(c1)
    if status != "optimal":
        raise NumericalBreakdownError("phase 1 reported an unbounded objective")
    return float(np.sum(eng.x[eng.n_real:]))


def phase1(lp: BoundedLp, cfg: SimplexConfig | None = None) -> BasisState | InfeasibleEvidence:
    """Find a feasible basis for lp, or evidence that none exists.

    Feasibility is decided by driving one artificial variable per row to zero;
    a strictly positive artificial optimum is returned as InfeasibleEvidence.
    """
    cfg = cfg or SimplexConfig()
    eng = _build_engine(lp, cfg)
    art_sum = _run_phase1(eng, cfg)
    if art_sum > cfg.eps_feas * eng.rhs_scale:
        return InfeasibleEvidence(art_sum)
    eng.pivot_out_artificials()
    eng.pin_artificials()
    return eng.basis_state()


def solve(lp: BoundedLp, cfg: SimplexConfig | None = None) -> SolveOutcome:
    """Two-phase bounded-variable simplex solve.

    An OPTIMAL outcome satisfies the equalities within eps_feas*(1 + max|b|)
    and the bounds within eps_feas, with no improving reduced cost above
    eps_opt; these are re-verified on the final refactored solution and a
    failure raises NumericalBreakdownError rather than returning silently.
    """
    cfg = cfg or SimplexConfig()
    eng = _build_engine(lp, cfg)
    art_sum = _run_phase1(eng, cfg)
    if art_sum > cfg.eps_feas * eng.rhs_scale:
        return SolveOutcome(SolveStatus.INFEASIBLE, None, None, None, eng.iterations)
    eng.pivot_out_artificials()
    eng.pin_artificials()

    c2 = np.zeros(eng.n_total)
    c2[:eng.n_real] = lp.objective if lp.sense is Sense.MAXIMIZE else -lp.objective
    status = eng.optimize(c2)
    if status == "unbounded":
        return SolveOutcome(SolveStatus.UNBOUNDED, None, None, None, eng.iterations)

    eng.refactor()
    x = eng.x[:eng.n_real].copy()
    # Nonbasic variables sit exactly on their bounds by construction; clean
    # only the numerical dust on basic values.  The snap threshold stays far
    # below eps_feas so it cannot push the residual past the check below.
    snap = 1e-12
    near_lo = np.abs(x - lp.lower) <= snap
    x[near_lo] = lp.lower[near_lo]
    finite_up = np.isfinite(lp.upper)
    near_up = finite_up & (np.abs(x - lp.upper) <= snap)
    x[near_up] = lp.upper[near_up]

    resid = float(np.max(np.abs(lp.a_eq @ x - lp.b_eq)))
    if resid > cfg.eps_feas * eng.rhs_scale:
        raise NumericalBreakdownError(f"final residual {resid:.3e} exceeds tolerance")
    if np.any(x < lp.lower - cfg.eps_feas) or np.any(x > lp.upper + cfg.eps_feas):
        raise NumericalBreakdownError("final solution violates its bounds")

    x.setflags(write=False)
    value = float(lp.objective @ x)
    return SolveOutcome(SolveStatus.OPTIMAL, x, value, eng.basis_state(), eng.iterations)


def audit_optimal(lp: BoundedLp, outcome: SolveOutcome,
                  cfg: SimplexConfig | None = None, tol: float = 1e-7) -> list[str]:
    """Independent optimality audit: recompute residuals and reduced costs from
    the reported solution and basis alone.  Returns a list of violations."""
    cfg = cfg or SimplexConfig()
    if outcome.status is not SolveStatus.OPTIMAL:
        return ["outcome is not OPTIMAL"]
    x, state = outcome.x, outcome.basis
    problems = []
    scale = 1.0 + float(np.max(np.abs(lp.b_eq)))
    if float(np.max(np.abs(lp.a_eq @ x - lp.b_eq))) > cfg.eps_feas * scale:
        problems.append("equality residual above tolerance")
    if np.any(x < lp.lower - cfg.eps_feas) or np.any(x > lp.upper + cfg.eps_feas):
        problems.append("bound violation")

    m = lp.rows
    cols = np.zeros((m, m))
    c_int = lp.objective if lp.sense is Sense.MAXIMIZE else -lp.objective
    cb = np.zeros(m)
    for r, k in enumerate(state.basic):
        if k < 0:
            cols[r, r] = 1.0  # redundant row held by a zero artificial
        else:
            cols[:, r] = lp.a_eq[:, k]
            cb[r] = c_int[k]
    try:
        y = np.linalg.solve(cols.T, cb)
    except np.linalg.LinAlgError:
        return problems + ["reported basis is singular"]
    d = c_int - y @ lp.a_eq
    for j in state.nonbasic_at_lower:
        if lp.upper[j] > lp.lower[j] and d[j] > tol:
            problems.append(f"improving reduced cost {d[j]:.3e} at lower-bound variable {j}")
    for j in state.nonbasic_at_upper:
        if d[j] < -tol:
            problems.append(f"improving reduced cost {d[j]:.3e} at upper-bound variable {j}")
    return problems
