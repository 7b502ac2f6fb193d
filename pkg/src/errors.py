"""
Exception hierarchy for the simulator.

Every error raised by the kernels derives from SimulationError so the CLI
and HTTP surfaces can map them to exit codes / status codes in one place.
The secondary bases (ValueError, IndexError) keep the builtin meaning for
callers that only care about the category.
"""


class SimulationError(Exception):
    """Base class for all simulator errors."""


class CapacityError(SimulationError, ValueError):
    """Qubit count outside the supported range."""


class DimensionError(SimulationError, ValueError):
    """Operands built for different qubit counts."""


class QubitIndexError(SimulationError, IndexError):
    """Target qubit or basis-state index out of range."""


class OracleSpecError(SimulationError, ValueError):
    """Invalid solution set or run configuration."""


class UnitarityError(SimulationError, ValueError):
    """A 2x2 matrix that is not unitary."""
