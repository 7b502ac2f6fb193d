"""
Property tests: the gate and fast engines compute the same search.

Verifies:
- per-iteration agreement up to global phase on random oracles
- gate-built oracle equals the direct phase flip exactly
- H (2|0><0| - I) H matches inversion about the mean on random states
- the packaged verification suites pass
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core import fast_engine, gate_engine
from src.core.fast_engine import OracleSpec
from src.core.grover import grover_step, optimal_iterations
from src.core.qstate import AMPLITUDE_ATOL, phase_aligned_distance, random_state, uniform_state
from src.core.verify import run_verification
from src.errors import CapacityError, OracleSpecError
from src.models.requests import EngineKind


@st.composite
def oracles(draw, min_qubits: int = 2, max_qubits: int = 10):
    num_qubits = draw(st.integers(min_qubits, max_qubits))
    dim = 1 << num_qubits
    solutions = draw(st.sets(st.integers(0, dim - 1), min_size=1, max_size=min(3, dim - 1)))
    return num_qubits, OracleSpec.of(solutions)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(case=oracles())
def test_engines_agree_every_iteration(case):
    num_qubits, oracle = case
    gate_state = uniform_state(num_qubits)
    fast_state = uniform_state(num_qubits)
    for _ in range(optimal_iterations(num_qubits, len(oracle))):
        grover_step(gate_state, oracle, EngineKind.GATE)
        grover_step(fast_state, oracle, EngineKind.FAST)
        assert phase_aligned_distance(gate_state, fast_state) < 1e-9


@settings(max_examples=60, deadline=None)
@given(case=oracles(max_qubits=8), seed=seeds)
def test_engines_agree_from_random_state(case, seed):
    num_qubits, oracle = case
    state = random_state(num_qubits, np.random.Generator(np.random.PCG64(seed)))
    gate_state = grover_step(state.copy(), oracle, EngineKind.GATE)
    fast_state = grover_step(state.copy(), oracle, EngineKind.FAST)
    assert phase_aligned_distance(gate_state, fast_state) < 1e-9


@settings(max_examples=60, deadline=None)
@given(case=oracles(min_qubits=1), seed=seeds)
def test_gate_oracle_is_exact_phase_flip(case, seed):
    num_qubits, oracle = case
    state = random_state(num_qubits, np.random.Generator(np.random.PCG64(seed)))
    via_gates = gate_engine.gate_oracle(state.copy(), oracle)
    direct = fast_engine.phase_flip_oracle(state.copy(), oracle)
    np.testing.assert_allclose(via_gates.amps, direct.amps, atol=1e-12, rtol=0)


@settings(max_examples=40, deadline=None)
@given(num_qubits=st.integers(1, 10), seed=seeds)
def test_diffusion_circuit_matches_inversion(num_qubits, seed):
    state = random_state(num_qubits, np.random.Generator(np.random.PCG64(seed)))
    circuit = state.copy()
    gate_engine.hadamard_all(circuit)
    gate_engine.conditional_phase_shift(circuit)
    gate_engine.hadamard_all(circuit)
    direct = fast_engine.invert_about_mean(state.copy())
    assert phase_aligned_distance(circuit, direct) < 1e-10


@pytest.mark.parametrize("num_qubits", [1, 2, 6, 11])
def test_verification_suites_pass(num_qubits):
    report = run_verification(num_qubits, trials=5, seed=num_qubits)
    assert report.passed, [c for c in report.checks if not c.passed]
    names = {c.name for c in report.checks}
    assert "engine_equivalence" in names
    assert ("dense_diffusion" in names) == (num_qubits <= 10)


def test_verification_is_reproducible():
    first = run_verification(5, trials=4, seed=99)
    second = run_verification(5, trials=4, seed=99)
    assert first == second


@pytest.mark.parametrize(
    "num_qubits, trials, seed, error",
    [
        (0, 5, 0, CapacityError),
        (-1, 5, 0, CapacityError),
        (31, 5, 0, CapacityError),
        (3, 0, 0, OracleSpecError),
        (3, 5, -1, OracleSpecError),
        (3, 5, 2**64, OracleSpecError),
    ],
)
def test_verification_rejects_bad_arguments(num_qubits, trials, seed, error):
    with pytest.raises(error):
        run_verification(num_qubits, trials=trials, seed=seed)


def test_state_checks_use_amplitude_tolerance():
    report = run_verification(4, trials=2, seed=1)
    tolerances = {c.name: c.tolerance for c in report.checks}
    for name in ("engine_equivalence", "closed_form_success", "conservation"):
        assert tolerances[name] == AMPLITUDE_ATOL
