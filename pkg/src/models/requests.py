"""
Strict input models.

Design principles:
- strict=True: no implicit type coercion (no "3" for 3)
- extra="forbid": unknown fields are rejected
- Enum constraints for categorical fields
- A RunConfig that exists is a RunConfig the kernels can execute
"""

from enum import Enum
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.core.fast_engine import OracleSpec
from src.core.qstate import MAX_QUBITS


# ─── Enums ───────────────────────────────────────────────────────────────

class EngineKind(str, Enum):
    """Simulation backend."""
    GATE = "gate"
    FAST = "fast"


class OracleRule(str, Enum):
    """How a bench sweep picks the solution for each qubit count."""
    FIXED = "fixed"
    MID_RANGE = "mid_range"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


# ─── Constrained Types ───────────────────────────────────────────────────

Seed = Annotated[int, Field(ge=0, lt=2**64, description="Unsigned 64-bit sampling seed")]


# ─── Run Configuration ───────────────────────────────────────────────────

class RunConfig(BaseModel):
    """
    One Grover search.

    - iterations: None selects the optimal schedule
    - shots: None skips sampling
    """

    model_config = ConfigDict(strict=True, extra="forbid", frozen=True)

    num_qubits: int = Field(..., ge=1, le=MAX_QUBITS)
    solutions: list[int] = Field(..., min_length=1)
    engine: EngineKind = EngineKind.FAST
    iterations: Optional[int] = Field(None, ge=0)
    shots: Optional[int] = Field(None, ge=1)
    seed: Seed = 0
    trace: bool = False

    @model_validator(mode="after")
    def validate_oracle(self) -> "RunConfig":
        """Solutions must form a valid oracle for this register size."""
        self.oracle.check_dimension(self.num_qubits)
        return self

    @property
    def oracle(self) -> OracleSpec:
        return OracleSpec.of(self.solutions)


# ─── HTTP Request Bodies ─────────────────────────────────────────────────

class SearchRequest(BaseModel):
    """Body of POST /search."""

    model_config = ConfigDict(strict=True, extra="forbid")

    num_qubits: int = Field(..., ge=1, le=MAX_QUBITS)
    solutions: list[int] = Field(..., min_length=1, max_length=64)
    engine: EngineKind = EngineKind.FAST
    iterations: Optional[int] = Field(None, ge=0, le=1_000_000)
    shots: Optional[int] = Field(None, ge=1, le=10_000_000)
    seed: Seed = 0
    trace: bool = False
    include_timings: bool = False

    @field_validator("engine", mode="before")
    @classmethod
    def coerce_engine(cls, v):
        """Allow string values for the enum from JSON."""
        if isinstance(v, str):
            try:
                return EngineKind(v)
            except ValueError:
                raise ValueError(f"invalid engine: {v}")
        return v

    def to_config(self) -> RunConfig:
        return RunConfig(
            num_qubits=self.num_qubits,
            solutions=list(self.solutions),
            engine=self.engine,
            iterations=self.iterations,
            shots=self.shots,
            seed=self.seed,
            trace=self.trace,
        )


class VerifyRequest(BaseModel):
    """Body of POST /verify."""

    model_config = ConfigDict(strict=True, extra="forbid")

    num_qubits: int = Field(..., ge=1, le=MAX_QUBITS)
    trials: int = Field(20, ge=1, le=1000)
    seed: Seed = 0
