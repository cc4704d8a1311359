import numpy as np
import pytest
from numpy.testing import assert_array_equal

from strictlp import (
    CanonicalLp,
    DegenerateCertificateError,
    MaxMinReading,
    NoOptimalFaceError,
    NoOptimalPair,
    OptimalPartition,
    PartitionViolationError,
    ScsResult,
    SolveStatus,
    Support,
    binding_constraints,
    build_optimal_faces,
    maximal_element_lp,
    optimal_partition,
    optimal_value,
    scs_maxmin,
    scs_maxmin_dual_face,
    scs_single,
    scs_two_phase,
    support_of,
    verify_scs,
)

from _oracle import canonical_optima
from conftest import (
    TIJSSEN_B,
    TIJSSEN_C,
    TIJSSEN_Z,
    sample_solvable_lps,
)
from test_interior import EXACT_U, EXACT_V, EXACT_X, EXACT_Y

WORKED_PARTITION = (
    Support.of({1, 2, 3, 4}),  # sigma_x
    Support.of(()),            # sigma_v
    Support.of({2, 3, 5}),     # sigma_u
    Support.of({1, 4}),        # sigma_y
)


def tiny_lp() -> CanonicalLp:
    # maximize x1 s.t. x1 <= 1: unique nondegenerate optimum on both sides.
    return CanonicalLp(np.array([[1.0]]), np.array([1.0]), np.array([1.0]))


def assert_worked_partition(partition: OptimalPartition):
    assert (partition.sigma_x, partition.sigma_v,
            partition.sigma_u, partition.sigma_y) == WORKED_PARTITION


class TestOptimalValue:
    def test_worked_example(self, tijssen):
        assert optimal_value(tijssen) == pytest.approx(TIJSSEN_Z, abs=1e-6)

    def test_zero_objective(self):
        lp = CanonicalLp(np.array([[1.0]]), np.array([1.0]), np.array([0.0]))
        assert optimal_value(lp) == pytest.approx(0.0)

    def test_unbounded_returned_not_raised(self):
        lp = CanonicalLp(np.array([[-1.0]]), np.array([1.0]), np.array([1.0]))
        assert optimal_value(lp) is SolveStatus.UNBOUNDED

    def test_infeasible_returned_not_raised(self):
        lp = CanonicalLp(np.array([[1.0]]), np.array([-1.0]), np.array([1.0]))
        assert optimal_value(lp) is SolveStatus.INFEASIBLE


class TestBuildOptimalFaces:
    def test_worked_example_shapes_and_last_rows(self, tijssen):
        faces = build_optimal_faces(tijssen, TIJSSEN_Z)
        assert faces.primal_face.a_eq.shape == (6, 9)
        assert_array_equal(faces.primal_face.a_eq[5],
                           [-4, 4, -8, 4, 0, 0, 0, 0, 0])
        assert faces.primal_face.b_eq[5] == TIJSSEN_Z
        assert_array_equal(faces.primal_face.b_eq[:5], TIJSSEN_B)
        assert faces.dual_face.a_eq.shape == (5, 9)
        assert_array_equal(faces.dual_face.a_eq[4], [1, 0, 2, 1, 7, 0, 0, 0, 0])
        assert_array_equal(faces.dual_face.b_eq[:4], TIJSSEN_C)
        assert faces.dual_face.b_eq[4] == TIJSSEN_Z

    def test_wrong_value_yields_empty_face(self, tijssen):
        faces = build_optimal_faces(tijssen, 5.0)
        assert maximal_element_lp(faces.primal_face).empty

    def test_forced_point_face(self):
        faces = build_optimal_faces(tiny_lp(), 1.0)
        result = maximal_element_lp(faces.primal_face)
        assert result.x_bar == pytest.approx([1.0, 0.0])


class TestScsTwoPhase:
    def test_worked_example_partition(self, tijssen):
        result = scs_two_phase(tijssen, TIJSSEN_Z)
        assert_worked_partition(result.partition)
        assert verify_scs(tijssen, result)

    def test_wrong_value_raises(self, tijssen):
        with pytest.raises(NoOptimalFaceError):
            scs_two_phase(tijssen, 5.0)

    def test_tiny_nondegenerate(self):
        result = scs_two_phase(tiny_lp(), 1.0)
        assert result.x_bar == pytest.approx([1.0])
        assert result.u_bar == pytest.approx([0.0])
        assert result.y_bar == pytest.approx([1.0])
        assert result.v_bar == pytest.approx([0.0])
        assert result.partition == OptimalPartition(
            Support.of({1}), Support.of(()), Support.of(()), Support.of({1}))

    def test_nondegenerate_partition_matches_unique_vertex_pair(self):
        """When enumeration finds a unique nondegenerate optimal vertex on
        each side, the partition is forced and must match it."""
        lps = sample_solvable_lps(seed=500, count=40, max_m=4, max_n=4)
        checked = 0
        for lp in lps:
            z, primal_vertices, dual_vertices = canonical_optima(lp)
            if len(primal_vertices) != 1 or len(dual_vertices) != 1:
                continue
            xu, yv = primal_vertices[0], dual_vertices[0]
            if np.sum(xu > 1e-7) != lp.m or np.sum(yv > 1e-7) != lp.n:
                continue  # degenerate vertex: partition not readable from it
            result = scs_two_phase(lp, z)
            assert result.partition.sigma_x == support_of(xu[:lp.n])
            assert result.partition.sigma_u == support_of(xu[lp.n:])
            assert result.partition.sigma_y == support_of(yv[:lp.m])
            assert result.partition.sigma_v == support_of(yv[lp.m:])
            checked += 1
        assert checked >= 5


class TestScsSingle:
    def test_worked_example_matches_two_phase(self, tijssen):
        result = scs_single(tijssen)
        assert isinstance(result, ScsResult)
        assert_worked_partition(result.partition)
        assert result.z_star == pytest.approx(TIJSSEN_Z, abs=1e-6)

    def test_infeasible_gives_no_optimal_pair(self):
        lp = CanonicalLp(np.array([[1.0]]), np.array([-1.0]), np.array([1.0]))
        assert isinstance(scs_single(lp), NoOptimalPair)

    def test_unbounded_gives_no_optimal_pair(self):
        lp = CanonicalLp(np.array([[-1.0]]), np.array([1.0]), np.array([1.0]))
        assert isinstance(scs_single(lp), NoOptimalPair)

    def test_partition_agreement_across_corpus(self):
        for lp in sample_solvable_lps(seed=600, count=25):
            z = optimal_value(lp)
            two = scs_two_phase(lp, z)
            one = scs_single(lp)
            assert isinstance(one, ScsResult)
            assert one.partition == two.partition


class TestMaxMinDualFace:
    def test_worked_example_complement_reading(self, tijssen):
        primal = scs_two_phase(tijssen, TIJSSEN_Z)
        result = scs_maxmin_dual_face(tijssen, TIJSSEN_Z,
                                      (primal.x_bar, primal.u_bar))
        assert result.t_star > 1e-6
        assert support_of(result.y_bar) == Support.of({1, 4})
        assert support_of(result.v_bar) == Support.of(())

    def test_worked_example_literal_reading_degenerates(self, tijssen):
        """The literal index sets constrain dual variables that are zero over
        the whole dual face, so the certificate value collapses to zero."""
        primal = scs_two_phase(tijssen, TIJSSEN_Z)
        with pytest.raises(DegenerateCertificateError):
            scs_maxmin_dual_face(tijssen, TIJSSEN_Z,
                                 (primal.x_bar, primal.u_bar),
                                 reading=MaxMinReading.LITERAL)

    def test_tiny_lp_certificate_value(self):
        result = scs_maxmin_dual_face(tiny_lp(), 1.0,
                                      (np.array([1.0]), np.array([0.0])))
        assert result.t_star == pytest.approx(1.0)
        assert result.y_bar == pytest.approx([1.0])

    def test_single_point_dual_face_min_entry(self):
        # maximize 2x1 + x2 s.t. x1 <= 1, x2 <= 1: dual face is {y = (2, 1)},
        # both dual constraints carry y >= t, so t* = min(2, 1) = 1.
        lp = CanonicalLp(np.eye(2), np.ones(2), np.array([2.0, 1.0]))
        result = scs_maxmin_dual_face(lp, 3.0, (np.ones(2), np.zeros(2)))
        assert result.t_star == pytest.approx(1.0)
        assert result.y_bar == pytest.approx([2.0, 1.0])

    def test_composite_method_agrees_with_two_phase(self, tijssen):
        result = scs_maxmin(tijssen, TIJSSEN_Z)
        assert_worked_partition(result.partition)
        assert verify_scs(tijssen, result)


class TestOptimalPartition:
    def test_published_values(self):
        partition = optimal_partition(EXACT_X, EXACT_U, EXACT_Y, EXACT_V)
        assert (partition.sigma_x, partition.sigma_v,
                partition.sigma_u, partition.sigma_y) == WORKED_PARTITION

    def test_trivial(self):
        partition = optimal_partition([1.0], [0.0], [1.0], [0.0])
        assert partition == OptimalPartition(
            Support.of({1}), Support.of(()), Support.of(()), Support.of({1}))

    def test_index_on_neither_side_raises(self):
        with pytest.raises(PartitionViolationError):
            optimal_partition([0.0], [1.0], [1.0], [0.0])  # x/v pair fine, u/y broken

    def test_index_on_both_sides_raises(self):
        with pytest.raises(PartitionViolationError):
            optimal_partition([1.0], [0.0], [1.0], [1.0])


class TestVerifyScs:
    def test_published_point_passes(self, tijssen):
        partition = optimal_partition(EXACT_X, EXACT_U, EXACT_Y, EXACT_V)
        result = ScsResult(np.array(EXACT_X), np.array(EXACT_U),
                           np.array(EXACT_Y), np.array(EXACT_V),
                           partition, TIJSSEN_Z)
        assert verify_scs(tijssen, result)

    def test_degenerate_basic_pair_fails_strictness(self, tijssen):
        """The optimal vertex x = (2,1,0,2) has u = 0 everywhere, and the dual
        vertex has v = 0, so pairs like (x3, v3) are zero on both sides."""
        x = np.array([2.0, 1.0, 0.0, 2.0])
        u = TIJSSEN_B - np.asarray(tijssen.a) @ x
        partition = optimal_partition(EXACT_X, EXACT_U, EXACT_Y, EXACT_V)
        result = ScsResult(x, u, np.array(EXACT_Y), np.array(EXACT_V),
                           partition, TIJSSEN_Z)
        assert not verify_scs(tijssen, result)

    def test_infeasible_point_fails(self, tijssen):
        result = ScsResult(np.zeros(4), np.zeros(5), np.array(EXACT_Y),
                           np.array(EXACT_V),
                           optimal_partition(EXACT_X, EXACT_U, EXACT_Y, EXACT_V),
                           TIJSSEN_Z)
        assert not verify_scs(tijssen, result)

    def test_every_method_output_verifies_on_corpus(self):
        for lp in sample_solvable_lps(seed=700, count=15):
            z = optimal_value(lp)
            for result in (scs_two_phase(lp, z), scs_single(lp), scs_maxmin(lp, z)):
                assert isinstance(result, ScsResult)
                assert verify_scs(lp, result)
                gap = abs(float(lp.c @ result.x_bar) - float(lp.b @ result.y_bar))
                assert gap <= 1e-6 * (1.0 + abs(result.z_star))


class TestReportedStructure:
    def test_binding_constraints_worked_example(self, tijssen):
        result = scs_single(tijssen)
        primal, dual = binding_constraints(result.partition, tijssen.m, tijssen.n)
        assert primal == [1, 4]
        assert dual == [1, 2, 3, 4]

    @pytest.mark.parametrize("scale", [0.5, 3.0])
    def test_partitions_are_scale_invariant(self, tijssen, scale):
        scaled = CanonicalLp(tijssen.a, scale * tijssen.b, scale * tijssen.c)
        result = scs_single(scaled)
        assert_worked_partition(result.partition)
