"""
Tests for the direct-operator engine.

Verifies:
- OracleSpec normalization and rejection rules
- phase flip and inversion about the mean on worked examples
- agreement with the dense diffusion matrix
"""

import numpy as np
import pytest

from src.core.fast_engine import (
    OracleSpec,
    dense_diffusion_reference,
    invert_about_mean,
    phase_flip_oracle,
    reduced_diffusion,
)
from src.core.qstate import StateVector, random_state, uniform_state
from src.errors import CapacityError, OracleSpecError, QubitIndexError


class TestOracleSpec:

    def test_sorted_on_construction(self):
        assert OracleSpec.of([7, 2, 5]).solutions == (2, 5, 7)

    def test_duplicates_rejected(self):
        with pytest.raises(OracleSpecError):
            OracleSpec.of([3, 3])

    def test_unsorted_direct_construction_rejected(self):
        with pytest.raises(OracleSpecError):
            OracleSpec((5, 2))

    def test_negative_rejected(self):
        with pytest.raises(QubitIndexError):
            OracleSpec.of([-1])

    def test_every_state_marked_rejected(self):
        with pytest.raises(OracleSpecError):
            OracleSpec.of([0, 1]).check_dimension(1)

    def test_index_out_of_range(self):
        with pytest.raises(QubitIndexError, match="out of range"):
            OracleSpec.of([8]).check_dimension(3)


class TestPhaseFlipOracle:

    def test_single_solution(self, uniform3):
        phase_flip_oracle(uniform3, OracleSpec.of([5]))
        expected = np.full(8, 1 / np.sqrt(8))
        expected[5] = -expected[5]
        np.testing.assert_array_equal(uniform3.amps, expected)

    def test_involution_is_exact(self, rng):
        state = random_state(5, rng)
        original = state.amps.copy()
        oracle = OracleSpec.of([0, 17, 31])
        phase_flip_oracle(phase_flip_oracle(state, oracle), oracle)
        np.testing.assert_array_equal(state.amps, original)

    def test_two_solutions(self, uniform2):
        phase_flip_oracle(uniform2, OracleSpec.of([1, 3]))
        np.testing.assert_array_equal(uniform2.amps, [0.5, -0.5, 0.5, -0.5])

    def test_out_of_range(self, uniform2):
        with pytest.raises(QubitIndexError):
            phase_flip_oracle(uniform2, OracleSpec.of([4]))


class TestInvertAboutMean:

    @pytest.mark.parametrize("num_qubits", [1, 3, 8])
    def test_uniform_is_fixed_point(self, num_qubits):
        state = uniform_state(num_qubits)
        original = state.amps.copy()
        invert_about_mean(state)
        np.testing.assert_allclose(state.amps, original, atol=1e-15, rtol=0)

    def test_first_iteration_worked_example(self, uniform3, worked_states):
        case = worked_states["three_qubit_first_iteration"]
        phase_flip_oracle(uniform3, OracleSpec.of([case["solution"]]))
        invert_about_mean(uniform3)

        root8 = np.sqrt(8)
        expected = np.full(8, case["other_amplitude_times_sqrt8"] / root8)
        expected[case["solution"]] = case["solution_amplitude_times_sqrt8"] / root8
        np.testing.assert_allclose(uniform3.amps, expected, atol=1e-15)
        assert abs(uniform3.amps[5]) ** 2 == pytest.approx(case["solution_probability"], abs=1e-12)

    def test_matches_dense_matrix(self, rng):
        for n in range(1, 7):
            delta = dense_diffusion_reference(n)
            for _ in range(50):
                state = random_state(n, rng)
                expected = delta @ state.amps
                invert_about_mean(state)
                np.testing.assert_allclose(state.amps, expected, atol=1e-12, rtol=0)

    def test_twice_restores_state(self, rng):
        state = random_state(9, rng)
        original = state.amps.copy()
        invert_about_mean(invert_about_mean(state))
        np.testing.assert_allclose(state.amps, original, atol=1e-12, rtol=0)

    def test_uniform_component_kept_orthogonal_negated(self, rng):
        state = random_state(6, rng)
        u = uniform_state(6).amps
        along = np.vdot(u, state.amps) * u
        orthogonal = state.amps - along

        invert_about_mean(state)

        np.testing.assert_allclose(np.vdot(u, state.amps) * u, along, atol=1e-12)
        np.testing.assert_allclose(state.amps - along, -orthogonal, atol=1e-12)

    def test_real_and_imaginary_parts_independent(self):
        state = StateVector(1, np.array([0.6, 0.8j]))
        invert_about_mean(state)
        # N=2 diffusion swaps the two amplitudes
        np.testing.assert_allclose(state.amps, [0.8j, 0.6], atol=1e-15)


class TestDenseDiffusionReference:

    def test_one_qubit(self):
        np.testing.assert_allclose(dense_diffusion_reference(1), [[0, 1], [1, 0]], atol=1e-15)

    def test_two_qubits(self):
        delta = dense_diffusion_reference(2)
        np.testing.assert_allclose(np.diag(delta), np.full(4, -0.5))
        off = delta[~np.eye(4, dtype=bool)]
        np.testing.assert_allclose(off, np.full(12, 0.5))

    @pytest.mark.parametrize("num_qubits", [1, 2, 4, 6])
    def test_rows_sum_to_one(self, num_qubits):
        np.testing.assert_allclose(dense_diffusion_reference(num_qubits).sum(axis=1), 1.0, atol=1e-12)

    @pytest.mark.parametrize("num_qubits", range(1, 7))
    def test_symmetric_and_involutive(self, num_qubits):
        delta = dense_diffusion_reference(num_qubits)
        np.testing.assert_array_equal(delta, delta.T)
        np.testing.assert_allclose(delta @ delta, np.eye(1 << num_qubits), atol=1e-12)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            dense_diffusion_reference(13)

    def test_reduced_block_entries(self):
        block = reduced_diffusion(3)
        delta = dense_diffusion_reference(3)
        assert block[0, 0] == delta[0, 0]
        assert block[0, 1] == delta[0, 1]
        np.testing.assert_array_equal(block, block.T)
