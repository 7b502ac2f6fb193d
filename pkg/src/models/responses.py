"""
Report models and their canonical serialization.

Design principles:
- Reports are immutable once built
- JSON output is canonical: sorted keys, floats with 17 significant
  digits, so parsing and re-serializing reproduces the same bytes
- Error responses carry a category and a sanitized message only
"""

import json
import math
from datetime import datetime, timezone
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.qstate import bitstring
from src.models.requests import EngineKind, RunConfig

PROBABILITY_SUM_ATOL = 1e-9


# ─── Canonical JSON ──────────────────────────────────────────────────────

def _encode(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return {True: "true", False: "false", None: "null"}[value]
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError("non-finite float in report")
        return format(value, ".17g")
    if isinstance(value, str):
        return _encode_str(value)
    if isinstance(value, dict):
        items = sorted((str(k), v) for k, v in value.items())
        return "{" + ",".join(f"{_encode_str(k)}:{_encode(v)}" for k, v in items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_encode(v) for v in value) + "]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def _encode_str(value: str) -> str:
    return json.dumps(value, ensure_ascii=True)


def canonical_json(document: dict[str, Any]) -> str:
    """Serialize with sorted keys and 17-significant-digit floats."""
    return _encode(document)


# ─── Measurement ─────────────────────────────────────────────────────────

class Histogram(BaseModel):
    """Shot counts per basis index."""

    model_config = ConfigDict(frozen=True)

    shots: int = Field(..., ge=1)
    counts: dict[int, int]

    @model_validator(mode="after")
    def counts_match_shots(self) -> "Histogram":
        if any(c < 0 for c in self.counts.values()):
            raise ValueError("counts must be non-negative")
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts must sum to shots")
        return self

    def by_bits(self, num_qubits: int) -> dict[str, int]:
        return {bitstring(i, num_qubits): c for i, c in sorted(self.counts.items())}


# ─── Search Report ───────────────────────────────────────────────────────

class TopState(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    state_bits: str
    probability: float


class GateCounts(BaseModel):
    """O(N) gate applications per Grover iteration in the gate engine."""

    model_config = ConfigDict(frozen=True)

    oracle_gates: int
    phase_shift_gates: int
    hadamard_gates: int

    @property
    def factor(self) -> int:
        return self.oracle_gates + self.phase_shift_gates + self.hadamard_gates


class RunReport(BaseModel):
    """Result of one Grover run."""

    model_config = ConfigDict(frozen=True)

    config: RunConfig
    iterations_used: int
    distribution: list[float]
    top: TopState
    success_probability: float
    expected_success_probability: float
    per_stage_nanos: dict[str, int] = Field(default_factory=dict)
    gate_counts: Optional[GateCounts] = None
    histogram: Optional[Histogram] = None
    trace: Optional[list[float]] = None

    @model_validator(mode="after")
    def distribution_normalized(self) -> "RunReport":
        total = math.fsum(self.distribution)
        if abs(total - 1.0) > PROBABILITY_SUM_ATOL:
            raise ValueError(f"distribution sums to {total!r}, not 1")
        return self

    @property
    def top_state(self) -> int:
        return self.top.index

    @property
    def top_probability(self) -> float:
        return self.top.probability

    def to_document(self, include_timings: bool = False) -> dict[str, Any]:
        """JSON document: config, iterations_used, distribution, top, timings_ns, histogram?."""
        config = self.config.model_dump(mode="json")
        doc: dict[str, Any] = {
            "config": config,
            "iterations_used": self.iterations_used,
            "distribution": list(self.distribution),
            "top": {
                "state_bits": self.top.state_bits,
                "probability": self.top.probability,
            },
            "success_probability": self.success_probability,
            "expected_success_probability": self.expected_success_probability,
            "timings_ns": dict(self.per_stage_nanos) if include_timings else {},
        }
        if self.gate_counts is not None:
            doc["gate_counts"] = self.gate_counts.model_dump()
        if self.histogram is not None:
            doc["histogram"] = self.histogram.by_bits(self.config.num_qubits)
        if self.trace is not None:
            doc["trace"] = list(self.trace)
        return doc


# ─── Bench ───────────────────────────────────────────────────────────────

class BenchRecord(BaseModel):
    """Timed repeats of one (num_qubits, engine) run."""

    model_config = ConfigDict(frozen=True)

    num_qubits: int
    engine: EngineKind
    iterations: int
    wall_nanos_median: int
    wall_nanos_min: int
    repeats: int = Field(..., ge=1)
    gate_factor: int = Field(..., ge=1)

    @model_validator(mode="after")
    def median_not_below_min(self) -> "BenchRecord":
        if self.wall_nanos_median < self.wall_nanos_min:
            raise ValueError("median below min")
        return self


# ─── Verification ────────────────────────────────────────────────────────

class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    cases: int
    worst_error: float
    tolerance: float


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_qubits: int
    trials: int
    seed: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


# ─── Errors ──────────────────────────────────────────────────────────────

class ErrorResponse(BaseModel):
    """
    Standard error response.

    Note: 'detail' never carries stack traces or internal paths.
    """

    model_config = ConfigDict(strict=True)

    success: bool = False
    error: str = Field(..., description="Error category")
    detail: str = Field(..., description="Human-readable message")
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
