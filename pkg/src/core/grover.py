"""
Grover search driver for both engines.

gate engine iteration:  oracle circuit -> H^n -> 2|0><0| - I -> H^n
fast engine iteration:  phase flip -> inversion about the mean

Both start from H^n |0...0>, prepared with the gate-engine Hadamard sweep.
"""

import math
import time
from collections import defaultdict
from contextlib import contextmanager
from typing import Callable, Iterator, Optional

import numpy as np

from src.core import fast_engine, gate_engine
from src.core.fast_engine import OracleSpec
from src.core.measure import distribution, sample
from src.core.qstate import StateVector, bitstring, new_zero_state
from src.errors import OracleSpecError
from src.logging import get_sim_logger
from src.models.requests import EngineKind, RunConfig
from src.models.responses import GateCounts, RunReport, TopState

IterationHook = Callable[[int, StateVector], None]


class StageTimer:
    """Accumulates monotonic wall time per stage name."""

    def __init__(self) -> None:
        self._nanos: dict[str, int] = defaultdict(int)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter_ns()
        try:
            yield
        finally:
            self._nanos[name] += time.perf_counter_ns() - start

    @property
    def nanos(self) -> dict[str, int]:
        return dict(self._nanos)

    @property
    def total_nanos(self) -> int:
        return sum(self._nanos.values())


def optimal_iterations(num_qubits: int, num_solutions: int) -> int:
    """floor(pi/4 * sqrt(N / M))."""
    dim = 1 << num_qubits
    if not 1 <= num_solutions < dim:
        raise OracleSpecError(
            f"number of solutions must be in 1..{dim - 1}, got {num_solutions}"
        )
    return math.floor(math.pi / 4.0 * math.sqrt(dim / num_solutions))


def scheduled_iterations(config: RunConfig) -> int:
    """Explicit iteration count, or the optimal schedule when absent."""
    if config.iterations is not None:
        return config.iterations
    return optimal_iterations(config.num_qubits, len(config.solutions))


def success_probability(num_qubits: int, num_solutions: int, iterations: int) -> float:
    """sin^2((2k+1) theta) with sin(theta) = sqrt(M/N)."""
    dim = 1 << num_qubits
    theta = math.asin(math.sqrt(num_solutions / dim))
    return math.sin((2 * iterations + 1) * theta) ** 2


def grover_step(
    state: StateVector,
    oracle: OracleSpec,
    engine: EngineKind,
    timer: Optional[StageTimer] = None,
) -> StateVector:
    """One application of G = (2|psi><psi| - I) O."""
    timer = timer or StageTimer()
    if engine is EngineKind.FAST:
        with timer.stage("oracle"):
            fast_engine.phase_flip_oracle(state, oracle)
        with timer.stage("diffusion"):
            fast_engine.invert_about_mean(state)
        return state

    with timer.stage("oracle"):
        gate_engine.gate_oracle(state, oracle)
    with timer.stage("hadamard"):
        gate_engine.hadamard_all(state)
    with timer.stage("phase_shift"):
        gate_engine.conditional_phase_shift(state)
    with timer.stage("hadamard"):
        gate_engine.hadamard_all(state)
    return state


def evolve(
    config: RunConfig,
    timer: Optional[StageTimer] = None,
    on_iteration: Optional[IterationHook] = None,
) -> tuple[StateVector, int]:
    """
    Prepare the superposition and apply the Grover iterator.

    ``on_iteration(k, state)`` is called after preparation (k = 0) and
    after each iteration k = 1..iterations. Returns the final state and the
    iteration count used.
    """
    timer = timer or StageTimer()
    oracle = config.oracle
    iterations = scheduled_iterations(config)

    with timer.stage("prepare"):
        state = gate_engine.hadamard_all(new_zero_state(config.num_qubits))
    if on_iteration is not None:
        on_iteration(0, state)

    for k in range(1, iterations + 1):
        grover_step(state, oracle, config.engine, timer)
        if on_iteration is not None:
            on_iteration(k, state)
    return state, iterations


def run(config: RunConfig) -> RunReport:
    """Execute one search and summarize it."""
    logger = get_sim_logger()
    timer = StageTimer()
    oracle = config.oracle
    marked = np.asarray(oracle.solutions, dtype=np.int64)

    trace: Optional[list[float]] = [] if config.trace else None

    def record(_: int, state: StateVector) -> None:
        trace.append(float(distribution(state)[marked].sum()))

    iterations = scheduled_iterations(config)
    logger.log_run_start(
        engine=config.engine.value,
        num_qubits=config.num_qubits,
        num_solutions=len(oracle),
        iterations=iterations,
    )

    state, iterations = evolve(config, timer, record if trace is not None else None)

    with timer.stage("measure"):
        probabilities = distribution(state)
        histogram = (
            sample(state, config.shots, config.seed) if config.shots is not None else None
        )
    top_index = int(np.argmax(probabilities))

    counts = None
    if config.engine is EngineKind.GATE:
        oracle_gates, phase_gates, hadamard_gates = gate_engine.gate_counts(
            config.num_qubits, oracle
        )
        counts = GateCounts(
            oracle_gates=oracle_gates,
            phase_shift_gates=phase_gates,
            hadamard_gates=hadamard_gates,
        )

    report = RunReport(
        config=config,
        iterations_used=iterations,
        distribution=probabilities.tolist(),
        top=TopState(
            index=top_index,
            state_bits=bitstring(top_index, config.num_qubits),
            probability=float(probabilities[top_index]),
        ),
        success_probability=float(probabilities[marked].sum()),
        expected_success_probability=success_probability(
            config.num_qubits, len(oracle), iterations
        ),
        per_stage_nanos=timer.nanos,
        gate_counts=counts,
        histogram=histogram,
        trace=trace,
    )
    logger.log_run_complete(
        engine=config.engine.value,
        num_qubits=config.num_qubits,
        iterations=iterations,
        top_state=report.top.state_bits,
        top_probability=report.top.probability,
        total_ms=timer.total_nanos / 1e6,
    )
    return report
