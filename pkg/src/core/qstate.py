"""
Dense state-vector representation.

A state of n qubits is one contiguous complex128 array of N = 2^n
amplitudes, indexed by basis state. Qubit i is bit i of the index, so
``|101>`` (big-endian label) is index 5.

All engines mutate ``StateVector.amps`` in place and return the same
object; a StateVector is never shared between concurrent mutators.
"""

from dataclasses import dataclass

import numpy as np

from src.errors import CapacityError, DimensionError, QubitIndexError

MAX_QUBITS = 30

# Absolute tolerance for amplitude comparisons.
AMPLITUDE_ATOL = 1e-9

@dataclass(eq=False)
class StateVector:
    """n-qubit state: ``amps[i]`` is the amplitude of basis state i."""

    num_qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        check_qubit_count(self.num_qubits)
        if self.amps.dtype != np.complex128:
            self.amps = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if self.amps.shape != (1 << self.num_qubits,):
            raise DimensionError(
                f"expected {1 << self.num_qubits} amplitudes for "
                f"{self.num_qubits} qubits, got shape {self.amps.shape}"
            )

    @property
    def dimension(self) -> int:
        return self.amps.shape[0]

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amps.copy())


def check_qubit_count(num_qubits: int) -> None:
    if not 1 <= num_qubits <= MAX_QUBITS:
        raise CapacityError(
            f"qubit count {num_qubits} outside supported range 1..{MAX_QUBITS}"
        )


def new_zero_state(num_qubits: int) -> StateVector:
    """|0...0>: amplitude 1 at index 0, zero elsewhere."""
    check_qubit_count(num_qubits)
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def uniform_state(num_qubits: int) -> StateVector:
    """Equal superposition, every amplitude 1/sqrt(N)."""
    check_qubit_count(num_qubits)
    dim = 1 << num_qubits
    return StateVector(num_qubits, np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


def random_state(num_qubits: int, rng: np.random.Generator) -> StateVector:
    """Normalized state with Gaussian real and imaginary parts."""
    check_qubit_count(num_qubits)
    dim = 1 << num_qubits
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    amps /= np.linalg.norm(amps)
    return StateVector(num_qubits, amps)


def norm_squared(state: StateVector) -> float:
    """Sum of |amps[i]|^2."""
    return float(np.vdot(state.amps, state.amps).real)


def phase_aligned_distance(a: StateVector, b: StateVector) -> float:
    """
    Max-norm distance between ``a`` and ``b`` after removing a global phase.

    The phase is taken from the largest-magnitude amplitude of ``a``:
    phi = a[k] / b[k] normalized to unit modulus. Zero means the states are
    equal up to a unit scalar.
    """
    if a.num_qubits != b.num_qubits:
        raise DimensionError(
            f"cannot compare {a.num_qubits}-qubit and {b.num_qubits}-qubit states"
        )
    k = int(np.argmax(np.abs(a.amps)))
    ratio = a.amps[k] * np.conj(b.amps[k])
    magnitude = abs(ratio)
    phase = ratio / magnitude if magnitude > 0.0 else 1.0
    return float(np.max(np.abs(a.amps - phase * b.amps)))


def pair_view(amps: np.ndarray, target: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Views of the amplitudes whose ``target`` bit is 0 and 1.

    ``lo[j, k]`` and ``hi[j, k]`` are the pair (i0, i1 = i0 | 1 << target);
    every index appears exactly once across the two views.
    """
    blocks = amps.reshape(-1, 2, 1 << target)
    return blocks[:, 0, :], blocks[:, 1, :]


def check_target(num_qubits: int, target: int) -> None:
    if not 0 <= target < num_qubits:
        raise QubitIndexError(
            f"target qubit {target} out of range for {num_qubits} qubits"
        )


def bitstring(index: int, num_qubits: int) -> str:
    """Big-endian label: bitstring(5, 3) == '101'."""
    return format(index, f"0{num_qubits}b")
