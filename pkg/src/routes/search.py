"""
Search and verification routes.

Requests are capped at ``GROVER_SERVICE_MAX_QUBITS`` qubits; larger
registers are refused before any amplitudes are allocated. Kernels are
CPU-bound, so handlers are plain ``def`` and run in the threadpool.
"""

from fastapi import APIRouter
from fastapi.responses import Response

from src.config import get_settings
from src.core.grover import run
from src.core.verify import run_verification
from src.errors import CapacityError
from src.models import SearchRequest, VerifyRequest, canonical_json


router = APIRouter(tags=["search"])


def _enforce_service_cap(num_qubits: int) -> None:
    cap = get_settings().service_max_qubits
    if num_qubits > cap:
        raise CapacityError(f"service accepts at most {cap} qubits, got {num_qubits}")


def _canonical_response(document: dict) -> Response:
    return Response(content=canonical_json(document), media_type="application/json")


@router.post("/search")
def search(body: SearchRequest) -> Response:
    """
    Run one Grover search.

    Response body is the canonical JSON report, identical to
    ``grover-sim search --format json``.
    """
    _enforce_service_cap(body.num_qubits)
    report = run(body.to_config())
    return _canonical_response(report.to_document(include_timings=body.include_timings))


@router.post("/verify")
def verify(body: VerifyRequest) -> Response:
    """Run the self-check suites; ``passed`` is false if any check failed."""
    _enforce_service_cap(body.num_qubits)
    report = run_verification(body.num_qubits, trials=body.trials, seed=body.seed)
    document = report.model_dump(mode="json")
    document["passed"] = report.passed
    return _canonical_response(document)
