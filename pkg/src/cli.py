"""
Command-line entry point.

    grover-sim search --qubits 3 --solution 5 --engine fast
    grover-sim verify --qubits 6
    grover-sim bench --qubits 10,16,18,20 --engines gate,fast
    grover-sim serve --port 8000

Exit codes: 0 success, 1 verification failure, 2 usage error.
Reports go to stdout; diagnostics and structured logs go to stderr.
"""

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from src.bench.harness import BenchSweep, sweep
from src.config import get_settings
from src.core.grover import run
from src.core.verify import run_verification
from src.errors import SimulationError
from src.logging import get_sim_logger
from src.models.requests import EngineKind, OracleRule, OutputFormat, RunConfig
from src.models.responses import RunReport, VerificationReport, canonical_json

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FULL_LISTING_MAX_STATES = 64
TOP_LISTING = 16
BAR_WIDTH = 50


# ─── Argument Parsing ────────────────────────────────────────────────────

def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _engine_list(text: str) -> list[EngineKind]:
    try:
        return [EngineKind(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"engines must be gate and/or fast, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="grover-sim",
        description="State-vector Grover search with gate-level and direct-operator engines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    search = sub.add_parser("search", help="run one search and print its report")
    search.add_argument("--qubits", type=int, required=True)
    search.add_argument("--solution", type=int, action="append", required=True,
                        help="solution basis index; repeat for several")
    search.add_argument("--engine", choices=[e.value for e in EngineKind], default=EngineKind.FAST.value)
    search.add_argument("--iterations", type=int, default=None,
                        help="Grover iterations (default: optimal schedule)")
    search.add_argument("--shots", type=int, default=None)
    search.add_argument("--seed", type=int, default=settings.default_seed)
    search.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    search.add_argument("--trace", action="store_true",
                        help="record success probability after every iteration")
    search.add_argument("--timings", action="store_true",
                        help="include per-stage wall times (output is then not reproducible)")

    verify = sub.add_parser("verify", help="run the engine equivalence and diffusion suites")
    verify.add_argument("--qubits", type=int, required=True)
    verify.add_argument("--trials", type=int, default=20)
    verify.add_argument("--seed", type=int, default=settings.default_seed)
    verify.add_argument("--format", choices=[OutputFormat.TEXT.value, OutputFormat.JSON.value],
                        default=OutputFormat.TEXT.value)

    bench = sub.add_parser("bench", help="time both engines over a range of qubit counts")
    bench.add_argument("--qubits", type=_int_list, default=[10, 16, 18, 20])
    bench.add_argument("--engines", type=_engine_list, default=[EngineKind.GATE, EngineKind.FAST])
    bench.add_argument("--repeats", type=int, default=settings.bench_repeats)
    bench.add_argument("--oracle", choices=[r.value for r in OracleRule], default=OracleRule.MID_RANGE.value)
    bench.add_argument("--solution", type=int, default=None, help="solution index for --oracle fixed")
    bench.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)

    serve = sub.add_parser("serve", help="serve /search and /verify over HTTP")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


# ─── Rendering ───────────────────────────────────────────────────────────

def render_text_report(report: RunReport, include_timings: bool = False) -> str:
    cfg = report.config
    dim = len(report.distribution)
    lines = [
        f"engine: {cfg.engine.value}  qubits: {cfg.num_qubits}  "
        f"solutions: {','.join(str(s) for s in cfg.solutions)}  iterations: {report.iterations_used}",
        f"top state: |{report.top.state_bits}>  {report.top.probability * 100:.3f}%",
        f"success probability: {report.success_probability * 100:.3f}% "
        f"(closed form {report.expected_success_probability * 100:.3f}%)",
        "",
    ]

    if dim <= FULL_LISTING_MAX_STATES:
        shown = list(range(dim))
    else:
        shown = sorted(range(dim), key=lambda i: (-report.distribution[i], i))[:TOP_LISTING]
        shown.sort()
    for index in shown:
        p = report.distribution[index]
        bits = format(index, f"0{cfg.num_qubits}b")
        bar = "#" * round(p * BAR_WIDTH)
        lines.append(f"{bits}  {p * 100:8.3f}%  {bar}")
    if len(shown) < dim:
        rest = 1.0 - sum(report.distribution[i] for i in shown)
        lines.append(f"... {dim - len(shown)} more states  {rest * 100:8.3f}%")

    if report.histogram is not None:
        lines.append("")
        lines.append(f"shots: {report.histogram.shots}  seed: {cfg.seed}")
        for bits, count in report.histogram.by_bits(cfg.num_qubits).items():
            lines.append(f"{bits}  {count}")

    if report.trace is not None:
        lines.append("")
        lines.append("iteration  success%")
        for k, p in enumerate(report.trace):
            lines.append(f"{k:9d}  {p * 100:8.3f}")

    if include_timings:
        lines.append("")
        for stage, nanos in sorted(report.per_stage_nanos.items()):
            lines.append(f"{stage:<12} {nanos / 1e6:12.3f} ms")
    return "\n".join(lines) + "\n"


def render_csv_report(report: RunReport) -> str:
    counts = report.histogram.counts if report.histogram is not None else None
    header = "state,index,probability" + (",count" if counts is not None else "")
    rows = [header]
    for index, p in enumerate(report.distribution):
        row = f"{format(index, f'0{report.config.num_qubits}b')},{index},{format(p, '.17g')}"
        if counts is not None:
            row += f",{counts.get(index, 0)}"
        rows.append(row)
    return "\n".join(rows) + "\n"


def render_verification(report: VerificationReport) -> str:
    lines = [f"verify: {report.num_qubits} qubits, {report.trials} trials, seed {report.seed}"]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(
            f"{status}  {c.name:<22} worst={c.worst_error:.3e}  tol={c.tolerance:.0e}  cases={c.cases}"
        )
    lines.append("all checks passed" if report.passed else "verification FAILED")
    return "\n".join(lines) + "\n"


def render_bench(result: BenchSweep, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.CSV:
        return result.render_csv()
    if fmt is OutputFormat.JSON:
        return canonical_json({"records": [r.model_dump(mode="json") for r in result.records]}) + "\n"
    return result.render_table()


# ─── Commands ────────────────────────────────────────────────────────────

def _search(args: argparse.Namespace) -> int:
    config = RunConfig(
        num_qubits=args.qubits,
        solutions=list(args.solution),
        engine=EngineKind(args.engine),
        iterations=args.iterations,
        shots=args.shots,
        seed=args.seed,
        trace=args.trace,
    )
    report = run(config)
    fmt = OutputFormat(args.format)
    if fmt is OutputFormat.JSON:
        sys.stdout.write(canonical_json(report.to_document(include_timings=args.timings)) + "\n")
    elif fmt is OutputFormat.CSV:
        sys.stdout.write(render_csv_report(report))
    else:
        sys.stdout.write(render_text_report(report, include_timings=args.timings))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    report = run_verification(args.qubits, trials=args.trials, seed=args.seed)
    if OutputFormat(args.format) is OutputFormat.JSON:
        doc = report.model_dump(mode="json")
        doc["passed"] = report.passed
        sys.stdout.write(canonical_json(doc) + "\n")
    else:
        sys.stdout.write(render_verification(report))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _bench(args: argparse.Namespace) -> int:
    if not args.qubits:
        raise SimulationError("no qubit counts given")
    result = sweep(
        args.qubits,
        oracle_rule=OracleRule(args.oracle),
        engines=args.engines,
        repeats=args.repeats,
        fixed_index=args.solution,
    )
    sys.stdout.write(render_bench(result, OutputFormat(args.format)))
    return EXIT_OK


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("src.main:app", host=args.host, port=args.port)
    return EXIT_OK


COMMANDS = {
    "search": _search,
    "verify": _verify,
    "bench": _bench,
    "serve": _serve,
}


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}"
            for err in exc.errors()
        )
    return str(exc)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (SimulationError, ValidationError) as exc:
        message = _describe(exc)
        get_sim_logger().log_run_rejected(reason=message, error_type=type(exc).__name__)
        sys.stderr.write(f"grover-sim: error: {message}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
