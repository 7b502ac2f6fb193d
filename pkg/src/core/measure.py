"""
Measurement: exact distributions and seeded shot histograms.

Sampling uses numpy's PCG64 bit generator (PCG-XSL-RR 128/64, published
reference streams, identical on every platform) seeded with the caller's
64-bit seed. Each shot consumes one uniform double and is mapped through
the cumulative distribution with a binary search.
"""

import numpy as np

from src.core.qstate import StateVector
from src.errors import OracleSpecError
from src.models.responses import Histogram


def distribution(state: StateVector) -> np.ndarray:
    """|amps[i]|^2 for every basis state."""
    amps = state.amps
    return amps.real * amps.real + amps.imag * amps.imag


def sample(state: StateVector, shots: int, seed: int = 0) -> Histogram:
    """Draw ``shots`` basis states from ``distribution(state)``."""
    if shots < 1:
        raise OracleSpecError(f"shots must be >= 1, got {shots}")
    cumulative = np.cumsum(distribution(state))
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(shots) * cumulative[-1]
    outcomes = np.searchsorted(cumulative, draws, side="right")
    # scaled draw can round onto the total
    np.minimum(outcomes, cumulative.shape[0] - 1, out=outcomes)
    indices, counts = np.unique(outcomes, return_counts=True)
    return Histogram(
        shots=shots,
        counts={int(i): int(c) for i, c in zip(indices, counts)},
    )
