"""
Self-check suites run by ``grover-sim verify`` and ``POST /verify``.

Each check records the worst error it saw against its tolerance. The
random oracles and states come from one PCG64 stream seeded by the caller,
so a failing run can be replayed exactly.
"""

import numpy as np

from src.core import fast_engine, gate_engine
from src.core.fast_engine import OracleSpec
from src.core.grover import evolve, grover_step, optimal_iterations, success_probability
from src.core.measure import distribution
from src.core.qstate import (
    AMPLITUDE_ATOL,
    StateVector,
    check_qubit_count,
    norm_squared,
    phase_aligned_distance,
    random_state,
    uniform_state,
)
from src.errors import OracleSpecError
from src.logging import get_sim_logger
from src.models.requests import EngineKind, RunConfig
from src.models.responses import CheckResult, VerificationReport

EQUIVALENCE_ATOL = AMPLITUDE_ATOL
ORACLE_ATOL = 1e-12
DENSE_ATOL = 1e-12
DIFFUSION_PHASE_ATOL = 1e-10
CLOSED_FORM_ATOL = AMPLITUDE_ATOL
CONSERVATION_ATOL = AMPLITUDE_ATOL

# Dense checks allocate N x N; above this they are skipped.
DENSE_CHECK_MAX_QUBITS = 10
INVOLUTION_CHECK_MAX_QUBITS = 6


class _Check:
    def __init__(self, name: str, tolerance: float) -> None:
        self.name = name
        self.tolerance = tolerance
        self.cases = 0
        self.worst = 0.0

    def observe(self, error: float) -> None:
        self.cases += 1
        self.worst = max(self.worst, float(error))

    def result(self) -> CheckResult:
        return CheckResult(
            name=self.name,
            passed=self.worst < self.tolerance,
            cases=self.cases,
            worst_error=self.worst,
            tolerance=self.tolerance,
        )


def random_oracle(num_qubits: int, rng: np.random.Generator, max_solutions: int = 2) -> OracleSpec:
    """One or two distinct solutions, never all N states."""
    dim = 1 << num_qubits
    count = int(rng.integers(1, min(max_solutions, dim - 1) + 1))
    return OracleSpec.of(int(s) for s in rng.choice(dim, size=count, replace=False))


def check_engine_equivalence(num_qubits: int, trials: int, rng: np.random.Generator) -> CheckResult:
    """Gate and fast engines agree up to global phase after every iteration."""
    check = _Check("engine_equivalence", EQUIVALENCE_ATOL)
    for _ in range(trials):
        oracle = random_oracle(num_qubits, rng)
        gate_state = uniform_state(num_qubits)
        fast_state = uniform_state(num_qubits)
        for _ in range(optimal_iterations(num_qubits, len(oracle))):
            grover_step(gate_state, oracle, EngineKind.GATE)
            grover_step(fast_state, oracle, EngineKind.FAST)
            check.observe(phase_aligned_distance(gate_state, fast_state))
    return check.result()


def check_oracle_agreement(num_qubits: int, trials: int, rng: np.random.Generator) -> CheckResult:
    """Gate-built oracle equals the direct phase flip elementwise, no phase freedom."""
    check = _Check("oracle_agreement", ORACLE_ATOL)
    for _ in range(trials):
        oracle = random_oracle(num_qubits, rng)
        state = random_state(num_qubits, rng)
        via_gates = gate_engine.gate_oracle(state.copy(), oracle)
        direct = fast_engine.phase_flip_oracle(state.copy(), oracle)
        check.observe(np.max(np.abs(via_gates.amps - direct.amps)))
    return check.result()


def check_diffusion_circuit(num_qubits: int, trials: int, rng: np.random.Generator) -> CheckResult:
    """H^n (2|0><0| - I) H^n equals inversion about the mean up to global phase."""
    check = _Check("diffusion_circuit", DIFFUSION_PHASE_ATOL)
    for _ in range(trials):
        state = random_state(num_qubits, rng)
        circuit = state.copy()
        gate_engine.hadamard_all(circuit)
        gate_engine.conditional_phase_shift(circuit)
        gate_engine.hadamard_all(circuit)
        direct = fast_engine.invert_about_mean(state.copy())
        check.observe(phase_aligned_distance(circuit, direct))
    return check.result()


def check_dense_diffusion(num_qubits: int, trials: int, rng: np.random.Generator) -> CheckResult:
    """Two-pass inversion matches the dense matrix-vector product."""
    check = _Check("dense_diffusion", DENSE_ATOL)
    delta = fast_engine.dense_diffusion_reference(num_qubits)
    for _ in range(trials):
        state = random_state(num_qubits, rng)
        expected = delta @ state.amps
        fast_engine.invert_about_mean(state)
        check.observe(np.max(np.abs(state.amps - expected)))
    return check.result()


def check_diffusion_involution(num_qubits: int) -> CheckResult:
    check = _Check("diffusion_involution", DENSE_ATOL)
    delta = fast_engine.dense_diffusion_reference(num_qubits)
    check.observe(np.max(np.abs(delta @ delta - np.eye(delta.shape[0]))))
    return check.result()


def check_closed_form(num_qubits: int, rng: np.random.Generator) -> CheckResult:
    """Single-solution success probability follows sin^2((2k+1) theta) at every k."""
    check = _Check("closed_form_success", CLOSED_FORM_ATOL)
    solution = int(rng.integers(0, 1 << num_qubits))
    config = RunConfig(num_qubits=num_qubits, solutions=[solution], engine=EngineKind.FAST)

    def observe(k: int, state: StateVector) -> None:
        simulated = float(distribution(state)[solution])
        check.observe(abs(simulated - success_probability(num_qubits, 1, k)))

    evolve(config, on_iteration=observe)
    return check.result()


def check_conservation(num_qubits: int, rng: np.random.Generator) -> CheckResult:
    """Norm stays at 1 and amplitudes stay real over a full fast run."""
    check = _Check("conservation", CONSERVATION_ATOL)
    solution = int(rng.integers(0, 1 << num_qubits))
    config = RunConfig(num_qubits=num_qubits, solutions=[solution], engine=EngineKind.FAST)

    def observe(_: int, state: StateVector) -> None:
        check.observe(max(abs(norm_squared(state) - 1.0), float(np.max(np.abs(state.amps.imag)))))

    evolve(config, on_iteration=observe)
    return check.result()


def run_verification(num_qubits: int, trials: int = 20, seed: int = 0) -> VerificationReport:
    """Run every suite that fits ``num_qubits`` and log each outcome."""
    check_qubit_count(num_qubits)
    if trials < 1:
        raise OracleSpecError(f"trials must be >= 1, got {trials}")
    if not 0 <= seed < 2**64:
        raise OracleSpecError(f"seed must be an unsigned 64-bit integer, got {seed}")
    logger = get_sim_logger()
    rng = np.random.Generator(np.random.PCG64(seed))

    checks = [
        check_engine_equivalence(num_qubits, trials, rng),
        check_oracle_agreement(num_qubits, trials, rng),
        check_diffusion_circuit(num_qubits, trials, rng),
    ]
    if num_qubits <= DENSE_CHECK_MAX_QUBITS:
        checks.append(check_dense_diffusion(num_qubits, trials, rng))
    if num_qubits <= INVOLUTION_CHECK_MAX_QUBITS:
        checks.append(check_diffusion_involution(num_qubits))
    checks.append(check_closed_form(num_qubits, rng))
    checks.append(check_conservation(num_qubits, rng))

    for result in checks:
        logger.log_verification_check(
            check=result.name,
            passed=result.passed,
            worst_error=result.worst_error,
            tolerance=result.tolerance,
        )
    report = VerificationReport(num_qubits=num_qubits, trials=trials, seed=seed, checks=checks)
    logger.log_verification_complete(
        num_qubits=num_qubits,
        checks=len(checks),
        failures=sum(not c.passed for c in checks),
    )
    return report
