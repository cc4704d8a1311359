"""Maximal elements, relative-interior points, and strictly complementary
solutions of linear programs via homogeneous cone LPs."""

from .complementarity import (
    MaxMinDualResult,
    MaxMinReading,
    NoOptimalPair,
    OptimalFaces,
    ScsMethod,
    build_optimal_faces,
    optimal_partition,
    optimal_value,
    binding_constraints,
    scs_maxmin,
    scs_maxmin_dual_face,
    scs_single,
    scs_two_phase,
    solve_canonical,
    verify_scs,
)
from .errors import (
    DegenerateCertificateError,
    InfeasibleInputError,
    InvariantViolationError,
    IterationLimitError,
    NoOptimalFaceError,
    NumericalBreakdownError,
    ParseError,
    PartitionViolationError,
    SolverFailureError,
    StrictLpError,
    ValidationError,
)
from .interior import relative_interior_point, verify_relative_interior
from .maximal import (
    SplitVariables,
    audit_split_dichotomy,
    maximal_element_lp,
    maximal_element_lp_detailed,
    maximal_support_iterative,
)
from .model import (
    FEASIBILITY_TOL,
    SUPPORT_TOL,
    BoundedLp,
    CanonicalLp,
    EqualityPolyhedron,
    MaximalResult,
    OptimalPartition,
    ScsResult,
    Sense,
    SolveOutcome,
    SolveStatus,
    Support,
    canonical_to_standard,
    homogenize,
    support_of,
)
from .simplex import (
    BasisState,
    InfeasibleEvidence,
    PivotRule,
    SimplexConfig,
    audit_optimal,
    phase1,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BasisState",
    "BoundedLp",
    "CanonicalLp",
    "DegenerateCertificateError",
    "EqualityPolyhedron",
    "FEASIBILITY_TOL",
    "InfeasibleEvidence",
    "InfeasibleInputError",
    "InvariantViolationError",
    "IterationLimitError",
    "MaxMinDualResult",
    "MaxMinReading",
    "MaximalResult",
    "NoOptimalFaceError",
    "NoOptimalPair",
    "NumericalBreakdownError",
    "OptimalFaces",
    "OptimalPartition",
    "ParseError",
    "PartitionViolationError",
    "PivotRule",
    "ScsMethod",
    "ScsResult",
    "Sense",
    "SimplexConfig",
    "SolveOutcome",
    "SolveStatus",
    "SolverFailureError",
    "SplitVariables",
    "StrictLpError",
    "Support",
    "SUPPORT_TOL",
    "ValidationError",
    "audit_optimal",
    "audit_split_dichotomy",
    "binding_constraints",
    "build_optimal_faces",
    "canonical_to_standard",
    "homogenize",
    "maximal_element_lp",
    "maximal_element_lp_detailed",
    "maximal_support_iterative",
    "optimal_partition",
    "optimal_value",
    "phase1",
    "relative_interior_point",
    "scs_maxmin",
    "scs_maxmin_dual_face",
    "scs_single",
    "scs_two_phase",
    "solve",
    "solve_canonical",
    "support_of",
    "verify_relative_interior",
    "verify_scs",
]
