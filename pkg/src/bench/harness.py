"""
Runtime comparison harness.

Design principles:
- One untimed warmup run, then ``repeats`` timed runs of the full search
- Median of the repeats is the headline number, min is reported beside it
- Engines run sequentially on one thread so timings stay comparable
- Only grover.run is timed; rendering happens afterwards
"""

import csv
import io
import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from src.core import gate_engine
from src.core.grover import run
from src.errors import OracleSpecError
from src.logging import get_sim_logger
from src.models.requests import EngineKind, OracleRule, RunConfig
from src.models.responses import BenchRecord, RunReport

CSV_COLUMNS = ["engine", "num_qubits", "iterations", "median_ns", "min_ns", "repeats"]

ENGINE_LABELS = {
    EngineKind.GATE: "gate engine",
    EngineKind.FAST: "fast engine",
}


def mid_range_solution(num_qubits: int) -> int:
    """N/2 + 1: a solution with mixed bits, clamped into range for n = 1."""
    dim = 1 << num_qubits
    return min(dim // 2 + 1, dim - 1)


def solution_for(num_qubits: int, rule: OracleRule, fixed_index: Optional[int] = None) -> int:
    if rule is OracleRule.MID_RANGE:
        return mid_range_solution(num_qubits)
    if fixed_index is None:
        raise OracleSpecError("fixed oracle rule needs a solution index")
    return fixed_index


def measure_run(config: RunConfig, repeats: int) -> tuple[BenchRecord, RunReport]:
    """Warm up once, then time ``repeats`` executions of run(config).

    The report of the last timed run is returned beside the record.
    """
    if repeats < 1:
        raise OracleSpecError(f"repeats must be >= 1, got {repeats}")

    report = run(config)
    samples: list[int] = []
    for _ in range(repeats):
        start = time.perf_counter_ns()
        report = run(config)
        samples.append(time.perf_counter_ns() - start)

    if config.engine is EngineKind.GATE:
        gate_factor = sum(gate_engine.gate_counts(config.num_qubits, config.oracle))
    else:
        gate_factor = 1

    record = BenchRecord(
        num_qubits=config.num_qubits,
        engine=config.engine,
        iterations=report.iterations_used,
        wall_nanos_median=int(statistics.median(samples)),
        wall_nanos_min=min(samples),
        repeats=repeats,
        gate_factor=gate_factor,
    )
    get_sim_logger().log_bench_record(
        engine=config.engine.value,
        num_qubits=config.num_qubits,
        repeats=repeats,
        median_ns=record.wall_nanos_median,
        min_ns=record.wall_nanos_min,
    )
    return record, report


def time_run(config: RunConfig, repeats: int) -> BenchRecord:
    return measure_run(config, repeats)[0]


@dataclass
class BenchSweep:
    """Records of one sweep, in (engine, num_qubits) order, with the last report of each."""

    records: list[BenchRecord] = field(default_factory=list)
    reports: dict[tuple[EngineKind, int], RunReport] = field(default_factory=dict)

    def render_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            writer.writerow([
                r.engine.value,
                r.num_qubits,
                r.iterations,
                r.wall_nanos_median,
                r.wall_nanos_min,
                r.repeats,
            ])
        return buffer.getvalue()

    def render_table(self) -> str:
        """Aligned text table; the engine label appears once per block."""
        header = ["Grover Search", "# qubits", "iterations", "median m:ss.mmm", "min m:ss.mmm", "gate factor"]
        rows: list[list[str]] = []
        previous: Optional[EngineKind] = None
        for r in self.records:
            rows.append([
                ENGINE_LABELS[r.engine] if r.engine is not previous else "",
                str(r.num_qubits),
                str(r.iterations),
                format_duration(r.wall_nanos_median),
                format_duration(r.wall_nanos_min),
                str(r.gate_factor),
            ])
            previous = r.engine

        widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(header)]

        def line(cells: list[str]) -> str:
            first = cells[0].ljust(widths[0])
            rest = (c.rjust(w) for c, w in zip(cells[1:], widths[1:]))
            return " | ".join([first, *rest])

        rule = "-+-".join("-" * w for w in widths)
        return "\n".join([line(header), rule, *(line(row) for row in rows)]) + "\n"

    def ratio(self, num_qubits: int) -> Optional[float]:
        """Median gate time over median fast time at ``num_qubits``, if both ran."""
        by_engine = {r.engine: r for r in self.records if r.num_qubits == num_qubits}
        if EngineKind.GATE not in by_engine or EngineKind.FAST not in by_engine:
            return None
        return by_engine[EngineKind.GATE].wall_nanos_median / by_engine[EngineKind.FAST].wall_nanos_median

    def distribution_gap(self, num_qubits: int) -> Optional[float]:
        """Max |p_gate - p_fast| over basis states at ``num_qubits``, if both ran."""
        gate = self.reports.get((EngineKind.GATE, num_qubits))
        fast = self.reports.get((EngineKind.FAST, num_qubits))
        if gate is None or fast is None:
            return None
        return max(abs(g - f) for g, f in zip(gate.distribution, fast.distribution))


def format_duration(nanos: int) -> str:
    """m:ss.mmm"""
    total_ms = round(nanos / 1e6)
    minutes, rest_ms = divmod(total_ms, 60_000)
    seconds, millis = divmod(rest_ms, 1000)
    return f"{minutes}:{seconds:02d}.{millis:03d}"


def sweep(
    qubit_range: Iterable[int],
    oracle_rule: OracleRule = OracleRule.MID_RANGE,
    engines: Iterable[EngineKind] = (EngineKind.GATE, EngineKind.FAST),
    repeats: int = 3,
    fixed_index: Optional[int] = None,
) -> BenchSweep:
    """One BenchRecord per (engine, n); gate engine block first."""
    qubit_counts = list(qubit_range)
    selected = [e for e in (EngineKind.GATE, EngineKind.FAST) if e in set(engines)]
    result = BenchSweep()
    for engine in selected:
        for n in qubit_counts:
            config = RunConfig(
                num_qubits=n,
                solutions=[solution_for(n, oracle_rule, fixed_index)],
                engine=engine,
            )
            record, report = measure_run(config, repeats)
            result.records.append(record)
            result.reports[(engine, n)] = report
    get_sim_logger().log_bench_sweep(
        qubit_counts=qubit_counts,
        engines=[e.value for e in selected],
        records=len(result.records),
    )
    return result
