"""
Gate-level baseline engine.

Simulates the Grover iterator the way a circuit simulator does: every gate
is one full sweep over the N amplitudes. The oracle and the conditional
phase shift are built as explicit gate lists so their cost is real work
and can be counted.

Design principles:
- Single-qubit gates are a one-pass butterfly over (i0, i1) pairs; both new
  values are computed from both old values before either is written
- Multi-controlled Z sweeps all N indices against the control mask
- Multi-solution oracles are the composition of single-solution oracles
"""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from src.core.fast_engine import OracleSpec
from src.core.qstate import StateVector, check_target, pair_view
from src.errors import UnitarityError

UNITARITY_ATOL = 1e-12


@dataclass(frozen=True)
class Unitary2x2:
    """2x2 matrix [[a11, a12], [a21, a22]]; unitarity checked on construction."""

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    def __post_init__(self) -> None:
        m = self.matrix
        if not np.all(np.isfinite(m)):
            raise UnitarityError("matrix entries must be finite")
        deviation = np.max(np.abs(m @ m.conj().T - np.eye(2)))
        if deviation > UNITARITY_ATOL:
            raise UnitarityError(f"U U^dagger deviates from I by {deviation:.3e}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=np.complex128)


_INV_SQRT2 = 1.0 / np.sqrt(2.0)

HADAMARD = Unitary2x2(_INV_SQRT2, _INV_SQRT2, _INV_SQRT2, -_INV_SQRT2)
PAULI_X = Unitary2x2(0.0, 1.0, 1.0, 0.0)
NEG_PAULI_X = Unitary2x2(0.0, -1.0, -1.0, 0.0)


# ─── Gate Descriptions ───────────────────────────────────────────────────

@dataclass(frozen=True)
class SingleQubitGate:
    u: Unitary2x2
    target: int


@dataclass(frozen=True)
class MultiControlledZ:
    """Z on the all-ones pattern of every qubit; other patterns via X conjugation."""


GateOp = Union[SingleQubitGate, MultiControlledZ]


def hadamard_circuit(num_qubits: int) -> list[GateOp]:
    """H on each qubit, ascending."""
    return [SingleQubitGate(HADAMARD, q) for q in range(num_qubits)]


def phase_shift_circuit(num_qubits: int) -> list[GateOp]:
    """
    X on all qubits, MCZ, X on all qubits: 2|0><0| - I.

    X MCZ X alone is I - 2|0><0|; the closing flip on qubit 0 is -X so the
    sequence carries the extra global phase -1 without an extra gate.
    """
    flips = [SingleQubitGate(PAULI_X, q) for q in range(num_qubits)]
    closing = [SingleQubitGate(NEG_PAULI_X, 0), *flips[1:]]
    return [*flips, MultiControlledZ(), *closing]


def oracle_circuit(num_qubits: int, oracle: OracleSpec) -> list[GateOp]:
    """Per solution: X on its zero bits, MCZ, the same X gates again."""
    oracle.check_dimension(num_qubits)
    gates: list[GateOp] = []
    for solution in oracle.solutions:
        flips = [
            SingleQubitGate(PAULI_X, q)
            for q in range(num_qubits)
            if not (solution >> q) & 1
        ]
        gates.extend([*flips, MultiControlledZ(), *flips])
    return gates


# ─── Kernels ─────────────────────────────────────────────────────────────

def apply_single_qubit_unitary(state: StateVector, u: Unitary2x2, target: int) -> StateVector:
    """
    Apply ``u`` to qubit ``target``.

    For each pair (i0, i1 = i0 | 1 << target):
        c(i0) <- a11 c(i0) + a12 c(i1)
        c(i1) <- a21 c(i0) + a22 c(i1)
    """
    check_target(state.num_qubits, target)
    lo, hi = pair_view(state.amps, target)
    new_lo = u.a11 * lo + u.a12 * hi
    new_hi = u.a21 * lo + u.a22 * hi
    lo[...] = new_lo
    hi[...] = new_hi
    return state


def hadamard_all(state: StateVector) -> StateVector:
    """H^{(x)n}, one butterfly sweep per qubit."""
    return apply_circuit(state, hadamard_circuit(state.num_qubits))


def multi_controlled_z(state: StateVector) -> StateVector:
    """Negate the amplitude of basis state N-1 (all qubits 1)."""
    controls = (1 << state.num_qubits) - 1
    indices = np.arange(state.dimension, dtype=np.int64)
    selected = (indices & controls) == controls
    np.negative(state.amps, out=state.amps, where=selected)
    return state


def apply_circuit(state: StateVector, gates: Sequence[GateOp]) -> StateVector:
    for gate in gates:
        if isinstance(gate, SingleQubitGate):
            apply_single_qubit_unitary(state, gate.u, gate.target)
        else:
            multi_controlled_z(state)
    return state


def gate_oracle(state: StateVector, oracle: OracleSpec) -> StateVector:
    """Mark each solution with an X-conjugated multi-controlled Z."""
    return apply_circuit(state, oracle_circuit(state.num_qubits, oracle))


def conditional_phase_shift(state: StateVector) -> StateVector:
    """2|0><0| - I: keep index 0, negate everything else."""
    return apply_circuit(state, phase_shift_circuit(state.num_qubits))


def gate_counts(num_qubits: int, oracle: OracleSpec) -> tuple[int, int, int]:
    """(oracle, phase shift, hadamard) O(N) gate applications per iteration."""
    return (
        len(oracle_circuit(num_qubits, oracle)),
        len(phase_shift_circuit(num_qubits)),
        2 * len(hadamard_circuit(num_qubits)),
    )
