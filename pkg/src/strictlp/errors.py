"""Exception types shared across the toolkit."""


class StrictLpError(Exception):
    """Base class for every error raised by this package."""


class IterationLimitError(StrictLpError):
    """The configured pivot budget was exhausted before termination."""


class NumericalBreakdownError(StrictLpError):
    """Basis refactorization failed or a verified postcondition was lost."""


class SolverFailureError(StrictLpError):
    """A high-level operation could not complete because the simplex engine failed."""


class InvariantViolationError(StrictLpError):
    """A solve finished but violated a structural property the construction guarantees."""


class NoOptimalFaceError(StrictLpError):
    """An optimal-face polyhedron turned out empty (wrong optimal value or infeasible pair)."""


class DegenerateCertificateError(StrictLpError):
    """The max-min certificate value is not strictly positive on the requested indices."""


class PartitionViolationError(StrictLpError):
    """Some index lies on both or neither side of a complementary partition."""


class InfeasibleInputError(StrictLpError):
    """A point supplied by the caller does not satisfy its stated feasibility precondition."""


class ParseError(StrictLpError):
    """Problem or solution text is syntactically malformed."""


class ValidationError(StrictLpError):
    """Parsed data violates a structural invariant (dimensions, finiteness, bounds)."""
