"""
Structured event logging for simulation runs.

Design principles:
- Logs are events, not debug prints: one dotted event name per occurrence
- Never log amplitude vectors or full distributions, only their summaries
- Inputs that may come from HTTP callers are sanitized before logging
- JSON lines on stderr, so stdout stays reserved for reports
"""

import functools
import logging
import sys
from enum import Enum
from typing import Any, Optional

import structlog

from src.config import get_settings


class RunOutcome(str, Enum):
    """Outcome classification attached to every event."""
    OK = "OK"
    REJECTED = "REJECTED"
    FAILED = "FAILED"


def _sanitize_for_log(value: Any, max_length: int = 100) -> str:
    """
    Sanitize value for safe logging.
    Prevents log injection and limits size.
    """
    if value is None:
        return "<none>"

    s = str(value)
    s = "".join(c if c.isprintable() and c not in "\n\r\t" else "?" for c in s)

    if len(s) > max_length:
        return s[:max_length] + "...<truncated>"
    return s


class SimulationLogger:
    """
    Structured logger for the simulator, the bench harness and the service.

    Every method emits exactly one event with a fixed set of keys so the
    output can be filtered with ordinary JSON tooling.
    """

    def __init__(self) -> None:
        settings = get_settings()
        renderer = (
            structlog.dev.ConsoleRenderer(colors=False)
            if settings.log_format == "console"
            else structlog.processors.JSONRenderer(sort_keys=True)
        )
        structlog.configure(
            processors=[
                structlog.processors.add_log_level,
                structlog.processors.TimeStamper(fmt="iso"),
                renderer,
            ],
            wrapper_class=structlog.make_filtering_bound_logger(
                logging.getLevelName(settings.log_level.upper())
            ),
            context_class=dict,
            logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
            cache_logger_on_first_use=True,
        )
        self._logger = structlog.get_logger("grover")

    def _log(
        self,
        level: str,
        event: str,
        outcome: RunOutcome = RunOutcome.OK,
        **kwargs: Any,
    ) -> None:
        """Internal logging with outcome classification."""
        sanitized = {
            k: _sanitize_for_log(v) if isinstance(v, str) else v
            for k, v in kwargs.items()
        }
        log_method = getattr(self._logger, level)
        log_method(event, outcome=outcome.value, **sanitized)

    # ─── Run Events ──────────────────────────────────────────────────────

    def log_run_start(
        self,
        engine: str,
        num_qubits: int,
        num_solutions: int,
        iterations: int,
    ) -> None:
        """Log a Grover run about to iterate."""
        self._log(
            "info",
            "run.start",
            engine=engine,
            num_qubits=num_qubits,
            num_solutions=num_solutions,
            iterations=iterations,
        )

    def log_run_complete(
        self,
        engine: str,
        num_qubits: int,
        iterations: int,
        top_state: str,
        top_probability: float,
        total_ms: float,
    ) -> None:
        """Log a finished run with its headline numbers."""
        self._log(
            "info",
            "run.complete",
            engine=engine,
            num_qubits=num_qubits,
            iterations=iterations,
            top_state=top_state,
            top_probability=top_probability,
            total_ms=round(total_ms, 3),
        )

    def log_run_rejected(self, reason: str, error_type: str) -> None:
        """Log a configuration that never reached the kernels."""
        self._log(
            "warning",
            "run.rejected",
            outcome=RunOutcome.REJECTED,
            reason=reason,
            error_type=error_type,
        )

    # ─── Bench Events ────────────────────────────────────────────────────

    def log_bench_record(
        self,
        engine: str,
        num_qubits: int,
        repeats: int,
        median_ns: int,
        min_ns: int,
    ) -> None:
        self._log(
            "info",
            "bench.record",
            engine=engine,
            num_qubits=num_qubits,
            repeats=repeats,
            median_ns=median_ns,
            min_ns=min_ns,
        )

    def log_bench_sweep(self, qubit_counts: list[int], engines: list[str], records: int) -> None:
        self._log(
            "info",
            "bench.sweep",
            qubit_counts=qubit_counts,
            engines=engines,
            records=records,
        )

    # ─── Verification Events ─────────────────────────────────────────────

    def log_verification_check(
        self,
        check: str,
        passed: bool,
        worst_error: float,
        tolerance: float,
    ) -> None:
        """Log one verification check; failures are warnings."""
        self._log(
            "info" if passed else "warning",
            "verify.check",
            outcome=RunOutcome.OK if passed else RunOutcome.FAILED,
            check=check,
            worst_error=worst_error,
            tolerance=tolerance,
        )

    def log_verification_complete(self, num_qubits: int, checks: int, failures: int) -> None:
        self._log(
            "info" if failures == 0 else "warning",
            "verify.complete",
            outcome=RunOutcome.OK if failures == 0 else RunOutcome.FAILED,
            num_qubits=num_qubits,
            checks=checks,
            failures=failures,
        )

    # ─── Request Events ──────────────────────────────────────────────────

    def log_request(
        self,
        method: str,
        route: str,
        status_code: int,
        duration_ms: float,
    ) -> None:
        """Log completed HTTP request."""
        self._log(
            "info",
            "request.complete",
            method=method,
            route=route,
            status_code=status_code,
            duration_ms=round(duration_ms, 2),
        )

    def log_request_rejected(
        self,
        route: str,
        error: str,
        error_count: int,
        error_fields: Optional[list[str]] = None,
    ) -> None:
        """Log a request refused before simulation (field names only, no values)."""
        self._log(
            "warning",
            "request.rejected",
            outcome=RunOutcome.REJECTED,
            route=route,
            error=error,
            error_count=error_count,
            error_fields=error_fields or [],
        )


# Singleton instance
@functools.lru_cache(maxsize=1)
def get_sim_logger() -> SimulationLogger:
    """Get singleton simulation logger instance."""
    return SimulationLogger()
