"""
Direct-operator engine.

Replaces the gate-built oracle and diffusion with the operators they
compute:
- oracle: negate the solution amplitudes, Θ(|solutions|) writes
- diffusion: c_x <- 2<c> - c_x with <c> the mean over all N amplitudes,
  exactly two passes over the vector

The mean is reduced with numpy's pairwise summation, a fixed tree over
ascending indices, so results are bit-reproducible run to run.
"""

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from src.core.qstate import StateVector
from src.errors import CapacityError, OracleSpecError, QubitIndexError

DENSE_REFERENCE_MAX_QUBITS = 12


@dataclass(frozen=True)
class OracleSpec:
    """Sorted, duplicate-free solution basis-state indices."""

    solutions: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.solutions:
            raise OracleSpecError("oracle needs at least one solution")
        if any(s < 0 for s in self.solutions):
            raise QubitIndexError("solution index must be non-negative")
        if any(b <= a for a, b in zip(self.solutions, self.solutions[1:])):
            raise OracleSpecError("solutions must be strictly increasing")

    @classmethod
    def of(cls, solutions: Iterable[int]) -> "OracleSpec":
        """Build from any iterable; duplicates are rejected, order is not."""
        items = [int(s) for s in solutions]
        if len(set(items)) != len(items):
            raise OracleSpecError("duplicate solution index")
        return cls(tuple(sorted(items)))

    def check_dimension(self, num_qubits: int) -> None:
        dim = 1 << num_qubits
        if self.solutions[-1] >= dim:
            raise QubitIndexError(
                f"solution index out of range: {self.solutions[-1]} >= {dim}"
            )
        if len(self.solutions) >= dim:
            raise OracleSpecError(
                f"{len(self.solutions)} solutions leave no unmarked state among {dim}"
            )

    def __len__(self) -> int:
        return len(self.solutions)


def phase_flip_oracle(state: StateVector, oracle: OracleSpec) -> StateVector:
    """amps[s] <- -amps[s] for every solution s."""
    oracle.check_dimension(state.num_qubits)
    marked = np.asarray(oracle.solutions, dtype=np.int64)
    state.amps[marked] = -state.amps[marked]
    return state


def invert_about_mean(state: StateVector) -> StateVector:
    """Reflect every amplitude about the mean: c_x <- 2<c> - c_x."""
    amps = state.amps
    mean = amps.sum() / amps.shape[0]
    np.subtract(2.0 * mean, amps, out=amps)
    return state


def dense_diffusion_reference(num_qubits: int) -> np.ndarray:
    """Full N x N diffusion matrix: 2/N - 1 on the diagonal, 2/N elsewhere."""
    if not 1 <= num_qubits <= DENSE_REFERENCE_MAX_QUBITS:
        raise CapacityError(
            f"dense diffusion matrix limited to 1..{DENSE_REFERENCE_MAX_QUBITS} "
            f"qubits, got {num_qubits}"
        )
    dim = 1 << num_qubits
    delta = np.full((dim, dim), 2.0 / dim)
    np.fill_diagonal(delta, 2.0 / dim - 1.0)
    return delta


def reduced_diffusion(num_qubits: int) -> np.ndarray:
    """The 2x2 block [[2/N - 1, 2/N], [2/N, 2/N - 1]] whose entries make up the full matrix."""
    dim = 1 << num_qubits
    off = 2.0 / dim
    return np.array([[off - 1.0, off], [off, off - 1.0]])
