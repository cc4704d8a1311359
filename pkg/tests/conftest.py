from importlib.resources import files
from pathlib import Path

import numpy as np
import pytest

from strictlp import CanonicalLp, EqualityPolyhedron, optimal_value


DATA_DIR = Path(str(files("strictlp").joinpath("data")))

# Worked example of Tijssen and Sierksma (degenerate: rows 1 and 4 coincide).
TIJSSEN_A = np.array([
    [-1, 1, -2, 1],
    [4, -4, 1, -2],
    [0, 0, -3, 1],
    [-1, 1, -2, 1],
    [-2, 5, -9, 3],
], dtype=float)
TIJSSEN_B = np.array([1, 0, 2, 1, 7], dtype=float)
TIJSSEN_C = np.array([-4, 4, -8, 4], dtype=float)
TIJSSEN_Z = 4.0


@pytest.fixture
def tijssen() -> CanonicalLp:
    return CanonicalLp(TIJSSEN_A, TIJSSEN_B, TIJSSEN_C)


@pytest.fixture
def segment() -> EqualityPolyhedron:
    return EqualityPolyhedron(np.array([[1.0, 1.0]]), np.array([1.0]))


def random_polyhedron(rng: np.random.Generator) -> EqualityPolyhedron:
    """Random small equality polyhedron with integer data in [-5, 5]."""
    rows = int(rng.integers(1, 7))
    cols = int(rng.integers(rows, 9))
    a = rng.integers(-5, 6, size=(rows, cols)).astype(float)
    b = rng.integers(-5, 6, size=rows).astype(float)
    return EqualityPolyhedron(a, b)


def random_feasible_polyhedron(rng: np.random.Generator) -> EqualityPolyhedron:
    """Random polyhedron guaranteed nonempty: b is taken as A x0 for a random
    nonnegative integer x0, so x0 itself is a feasible point."""
    rows = int(rng.integers(1, 7))
    cols = int(rng.integers(rows, 9))
    a = rng.integers(-5, 6, size=(rows, cols)).astype(float)
    x0 = rng.integers(0, 4, size=cols).astype(float)
    return EqualityPolyhedron(a, a @ x0)


def random_canonical_lp(rng: np.random.Generator, max_m: int = 6, max_n: int = 6) -> CanonicalLp:
    m = int(rng.integers(1, max_m + 1))
    n = int(rng.integers(1, max_n + 1))
    a = rng.integers(-5, 6, size=(m, n)).astype(float)
    b = rng.integers(-5, 6, size=m).astype(float)
    c = rng.integers(-5, 6, size=n).astype(float)
    return CanonicalLp(a, b, c)


def sample_solvable_lps(seed: int, count: int, max_m: int = 6, max_n: int = 6):
    """Rejection-sample canonical LPs with a finite optimum."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        lp = random_canonical_lp(rng, max_m, max_n)
        if isinstance(optimal_value(lp), float):
            out.append(lp)
    return out
