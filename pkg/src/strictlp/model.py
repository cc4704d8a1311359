"""Domain types for LPs, polyhedra and solutions, plus the structural transforms
(standard form, homogenization, supports) every other module builds on.

Matrices and vectors are numpy float64 arrays, made read-only at construction so
instances are safe to share across threads.  Indices inside arrays are 0-based;
every reported index set (``Support``, partitions) is 1-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ValidationError

#: Threshold above which a component counts as strictly positive.
SUPPORT_TOL = 1e-6

#: Equation-residual tolerance, scaled by (1 + max|rhs|) where it is applied.
FEASIBILITY_TOL = 1e-9


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite, read-only float64 2-D array."""
    arr = np.array(a, dtype=float, order="C")
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValidationError(f"{name} must be a 2-D array with at least one row and column")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


def as_vector(v, name: str = "vector", allow_posinf: bool = False) -> np.ndarray:
    """Coerce to a read-only float64 1-D array, finite except optionally +inf."""
    arr = np.array(v, dtype=float).reshape(-1)
    if allow_posinf:
        bad = np.isnan(arr) | (arr == -np.inf)
    else:
        bad = ~np.isfinite(arr)
    if np.any(bad):
        raise ValidationError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


class Sense(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class SolveStatus(Enum):
    OPTIMAL = "OPTIMAL"
    INFEASIBLE = "INFEASIBLE"
    UNBOUNDED = "UNBOUNDED"


@dataclass(frozen=True)
class CanonicalLp:
    """The primal-dual data (A, b, c) of a canonical pair:

    maximize c'x subject to Ax <= b, x >= 0, and its dual
    minimize b'y subject to A'y >= c, y >= 0.
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.a, "a")
        b = as_vector(self.b, "b")
        c = as_vector(self.c, "c")
        if b.shape[0] != a.shape[0]:
            raise ValidationError(f"b length {b.shape[0]} does not match row count {a.shape[0]}")
        if c.shape[0] != a.shape[1]:
            raise ValidationError(f"c length {c.shape[0]} does not match column count {a.shape[1]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def m(self) -> int:
        return self.a.shape[0]

    @property
    def n(self) -> int:
        return self.a.shape[1]


@dataclass(frozen=True)
class EqualityPolyhedron:
    """P = {x | a_eq . x = b_eq, x >= 0}."""

    a_eq: np.ndarray
    b_eq: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.a_eq, "a_eq")
        b = as_vector(self.b_eq, "b_eq")
        if b.shape[0] != a.shape[0]:
            raise ValidationError(f"b_eq length {b.shape[0]} does not match row count {a.shape[0]}")
        object.__setattr__(self, "a_eq", a)
        object.__setattr__(self, "b_eq", b)

    @property
    def rows(self) -> int:
        return self.a_eq.shape[0]

    @property
    def cols(self) -> int:
        return self.a_eq.shape[1]


@dataclass(frozen=True)
class BoundedLp:
    """An LP in the solver's native form:

    optimize objective'x subject to a_eq . x = b_eq, lower <= x <= upper,

    where every lower bound is finite and upper bounds may be +inf.
    """

    a_eq: np.ndarray
    b_eq: np.ndarray
    objective: np.ndarray
    sense: Sense
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        a = as_matrix(self.a_eq, "a_eq")
        b = as_vector(self.b_eq, "b_eq")
        c = as_vector(self.objective, "objective")
        lo = as_vector(self.lower, "lower")
        hi = as_vector(self.upper, "upper", allow_posinf=True)
        n = a.shape[1]
        if b.shape[0] != a.shape[0]:
            raise ValidationError("b_eq length does not match row count")
        if c.shape[0] != n or lo.shape[0] != n or hi.shape[0] != n:
            raise ValidationError("objective/lower/upper length does not match column count")
        if np.any(lo > hi):
            raise ValidationError("lower bound exceeds upper bound")
        object.__setattr__(self, "a_eq", a)
        object.__setattr__(self, "b_eq", b)
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def rows(self) -> int:
        return self.a_eq.shape[0]

    @property
    def cols(self) -> int:
        return self.a_eq.shape[1]


@dataclass(frozen=True)
class Support:
    """Sorted set of 1-based indices of strictly positive components."""

    indices: frozenset[int]

    def __post_init__(self):
        idx = frozenset(int(j) for j in self.indices)
        if any(j < 1 for j in idx):
            raise ValidationError("support indices are 1-based and must be >= 1")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, values: Iterable[int]) -> "Support":
        return cls(frozenset(values))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def union(self, other: "Support") -> "Support":
        return Support(self.indices | other.indices)

    __or__ = union

    def __contains__(self, j: int) -> bool:
        return j in self.indices

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.indices)

    def __bool__(self) -> bool:
        return bool(self.indices)


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a bounded-simplex solve.  x, objective_value and basis are
    present exactly when status is OPTIMAL."""

    status: SolveStatus
    x: np.ndarray | None
    objective_value: float | None
    basis: "object | None"  # BasisState; typed loosely to avoid a circular import
    iterations: int


@dataclass(frozen=True)
class MaximalResult:
    """Outcome of a maximal-element computation on an EqualityPolyhedron.

    ``empty`` is true exactly when the homogenized LP certifies the polyhedron
    is empty (its bounded scaling variable optimizes to 0, not 1).  When not
    empty, ``x_bar`` is a maximal element and ``support`` its positive index
    set, which equals the maximal support of the polyhedron.
    """

    empty: bool
    x_bar: np.ndarray | None
    support: Support
    w1_star: float
    w2_star: float


@dataclass(frozen=True)
class OptimalPartition:
    """The four index sets induced by a strictly complementary solution:
    sigma_x/sigma_v partition the variable indices, sigma_u/sigma_y the
    constraint indices."""

    sigma_x: Support
    sigma_v: Support
    sigma_u: Support
    sigma_y: Support


@dataclass(frozen=True)
class ScsResult:
    """A strictly complementary primal-dual pair and its partition.

    (x_bar, u_bar) is primal-feasible and (y_bar, v_bar) dual-feasible for the
    slack-augmented pair, both objective values equal z_star, and componentwise
    x_bar + v_bar > 0 and y_bar + u_bar > 0 above the support tolerance.
    """

    x_bar: np.ndarray
    u_bar: np.ndarray
    y_bar: np.ndarray
    v_bar: np.ndarray
    partition: OptimalPartition
    z_star: float


def canonical_to_standard(lp: CanonicalLp) -> tuple[EqualityPolyhedron, EqualityPolyhedron]:
    """Slack-augmented equality forms of a canonical pair.

    Returns (primal, dual) where the primal system is [A, I](x; u) = b over
    n + m nonnegative variables and the dual system is [A', -I](y; v) = c over
    m + n nonnegative variables.
    """
    m, n = lp.m, lp.n
    primal = EqualityPolyhedron(np.hstack([lp.a, np.eye(m)]), lp.b)
    dual = EqualityPolyhedron(np.hstack([lp.a.T, -np.eye(n)]), lp.c)
    return primal, dual


def homogenize(p: EqualityPolyhedron) -> np.ndarray:
    """[a_eq | -b_eq]: coefficient block of the homogeneous cone system.

    The system [a_eq | -b_eq](x; w) = 0 with x, w >= 0 describes the closed
    cone whose slice at w = 1 is p; points of p correspond to rays with w > 0.
    """
    out = np.hstack([p.a_eq, -p.b_eq.reshape(-1, 1)])
    out.setflags(write=False)
    return out


def support_of(x, tol: float = SUPPORT_TOL) -> Support:
    """1-based indices of components strictly above tol."""
    if tol <= 0:
        raise ValidationError("support tolerance must be positive")
    arr = np.asarray(x, dtype=float).reshape(-1)
    return Support.of(int(j) + 1 for j in np.nonzero(arr > tol)[0])
