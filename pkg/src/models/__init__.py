from .requests import (
    EngineKind,
    OracleRule,
    OutputFormat,
    RunConfig,
    SearchRequest,
    VerifyRequest,
)
from .responses import (
    BenchRecord,
    CheckResult,
    ErrorResponse,
    GateCounts,
    Histogram,
    RunReport,
    TopState,
    VerificationReport,
    canonical_json,
)

__all__ = [
    "EngineKind",
    "OracleRule",
    "OutputFormat",
    "RunConfig",
    "SearchRequest",
    "VerifyRequest",
    "BenchRecord",
    "CheckResult",
    "ErrorResponse",
    "GateCounts",
    "Histogram",
    "RunReport",
    "TopState",
    "VerificationReport",
    "canonical_json",
]
