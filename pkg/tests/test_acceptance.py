"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines alongside the pytest verdicts.
"""

import json
import subprocess
import sys
import time

import numpy as np
import pytest

from strictlp import (
    EqualityPolyhedron,
    NoOptimalPair,
    ScsResult,
    SolveStatus,
    Support,
    audit_split_dichotomy,
    binding_constraints,
    maximal_element_lp,
    maximal_element_lp_detailed,
    maximal_support_iterative,
    optimal_value,
    scs_single,
    scs_two_phase,
    solve,
    verify_scs,
)

from _oracle import enumerate_bounded
from conftest import DATA_DIR, random_feasible_polyhedron, sample_solvable_lps
from test_simplex import random_box_lp

FIXTURE = DATA_DIR / "tijssen_sierksma.lp.json"
SOLUTION = DATA_DIR / "tijssen_sierksma.solution.json"
INFEASIBLE = DATA_DIR / "infeasible.lp.json"
UNBOUNDED = DATA_DIR / "unbounded.lp.json"

EXPECTED_PARTITION = (Support.of({1, 2, 3, 4}), Support.of(()),
                      Support.of({2, 3, 5}), Support.of({1, 4}))


def run_cli(*args: str):
    return subprocess.run([sys.executable, "-m", "strictlp", *args],
                          capture_output=True, text=True)


def record(criterion: int, message: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS  ({message})")


@pytest.fixture(scope="module")
def corpus_lps():
    return sample_solvable_lps(seed=2024, count=100)


@pytest.fixture(scope="module")
def corpus_polyhedra():
    rng = np.random.default_rng(4096)
    return [random_feasible_polyhedron(rng) for _ in range(100)]


@pytest.fixture(scope="module")
def worked_lp():
    from strictlp.io import parse_problem
    return parse_problem(FIXTURE.read_bytes()).to_canonical()


def partition_tuple(result: ScsResult):
    p = result.partition
    return (p.sigma_x, p.sigma_v, p.sigma_u, p.sigma_y)


def test_criterion_1_worked_example_reproduction(worked_lp):
    start = time.perf_counter()
    z = optimal_value(worked_lp)
    assert isinstance(z, float) and abs(z - 4.0) <= 1e-6

    two = scs_two_phase(worked_lp, z)
    one = scs_single(worked_lp)
    assert partition_tuple(two) == EXPECTED_PARTITION
    assert partition_tuple(one) == EXPECTED_PARTITION

    binding_primal, binding_dual = binding_constraints(two.partition, 5, 4)
    assert binding_primal == [1, 4]
    assert binding_dual == [1, 2, 3, 4]
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0

    for method in ("two-phase", "single"):
        proc = run_cli("scs", "--method", method, str(FIXTURE))
        assert proc.returncode == 0
        lines = proc.stdout.splitlines()
        for expected in ("sigma_x: 1 2 3 4", "sigma_v:", "sigma_u: 2 3 5",
                         "sigma_y: 1 4", "binding_primal: 1 4",
                         "binding_dual: 1 2 3 4"):
            assert expected in lines
    record(1, f"z*=4, exact partitions and binding sets, {elapsed:.3f}s")


def test_criterion_2_point_level_checks(worked_lp):
    z = optimal_value(worked_lp)
    for result in (scs_two_phase(worked_lp, z), scs_single(worked_lp)):
        assert verify_scs(worked_lp, result, tol=1e-6)

    proc = run_cli("verify", str(FIXTURE), str(SOLUTION))
    assert proc.returncode == 0
    assert proc.stdout == "verify: PASS\n"
    bundled = json.loads(SOLUTION.read_text())
    assert bundled["x"][0] == pytest.approx(2.667, abs=5e-4)  # the 8/3 point
    record(2, "returned pairs and the bundled published point all verify at 1e-6")


def test_criterion_3_method_agreement(corpus_lps):
    start = time.perf_counter()
    for lp in corpus_lps:
        z = optimal_value(lp)
        assert isinstance(z, float)
        two = scs_two_phase(lp, z)
        one = scs_single(lp)
        assert isinstance(one, ScsResult)
        assert partition_tuple(two) == partition_tuple(one)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    record(3, f"{len(corpus_lps)} LPs, identical partitions, {elapsed:.2f}s")


def test_criterion_4_oracle_equivalence(corpus_polyhedra):
    for p in corpus_polyhedra:
        lp_route = maximal_element_lp(p)
        iter_route = maximal_support_iterative(p)
        assert not lp_route.empty and not iter_route.empty
        assert lp_route.support == iter_route.support
    record(4, f"{len(corpus_polyhedra)} polyhedra, exact support agreement")


def test_criterion_5_solver_ground_truth():
    rng = np.random.default_rng(1337)
    instances = [random_box_lp(rng) for _ in range(25)]
    for lp in instances:
        status, value, _ = enumerate_bounded(lp)
        outcome = solve(lp)
        if status == "infeasible":
            assert outcome.status is SolveStatus.INFEASIBLE
        else:
            assert outcome.status is SolveStatus.OPTIMAL
            assert abs(outcome.objective_value - value) <= 1e-6
    record(5, f"{len(instances)} instances match basis enumeration within 1e-6")


def test_criterion_6_structural_dichotomy(worked_lp, corpus_lps, corpus_polyhedra):
    """Re-runs every homogenized solve of criteria 1-4 through the detailed
    API and audits the boxed-block structure at 1e-6."""
    from strictlp.complementarity import build_optimal_faces

    def audited(polyhedron) -> bool:
        result, split = maximal_element_lp_detailed(polyhedron)
        assert audit_split_dichotomy(split, 1e-6)
        assert min(abs(result.w2_star), abs(result.w2_star - 1.0)) <= 1e-6
        return not result.empty

    count = 0
    for lp in [worked_lp] + corpus_lps:
        z = optimal_value(lp)
        faces = build_optimal_faces(lp, z)
        m, n = lp.m, lp.n
        coupled = EqualityPolyhedron(
            np.vstack([
                np.hstack([lp.a, np.eye(m), np.zeros((m, m)), np.zeros((m, n))]),
                np.hstack([np.zeros((n, n)), np.zeros((n, m)), lp.a.T, -np.eye(n)]),
                np.concatenate([lp.c, np.zeros(m), -lp.b, np.zeros(n)])[None, :],
            ]),
            np.concatenate([lp.b, lp.c, [0.0]]))
        for polyhedron in (faces.primal_face, faces.dual_face, coupled):
            assert audited(polyhedron)
            count += 1
    for p in corpus_polyhedra:
        audited(p)
        count += 1
    record(6, f"{count} homogenized solves, boxed blocks within 1e-6 of {{0,1}}")


def test_criterion_7_degenerate_cases(worked_lp):
    for path in (INFEASIBLE, UNBOUNDED):
        from strictlp.io import parse_problem
        lp = parse_problem(path.read_bytes()).to_canonical()
        assert isinstance(scs_single(lp), NoOptimalPair)
        proc = run_cli("scs", "--method", "single", str(path))
        assert proc.returncode == 1

    empty = EqualityPolyhedron(np.array([[1.0]]), np.array([-1.0]))
    result = maximal_element_lp(empty)
    assert result.empty and result.w2_star <= 1e-6
    record(7, "NoOptimalPair with exit 1 on both fixtures; empty via w2*<=1e-6")


def test_criterion_8_determinism():
    first = run_cli("scs", "--method", "single", str(FIXTURE))
    second = run_cli("scs", "--method", "single", str(FIXTURE))
    assert first.returncode == second.returncode == 0
    assert first.stdout.encode() == second.stdout.encode()
    assert first.stdout  # nonempty report
    record(8, "byte-identical consecutive reports")
