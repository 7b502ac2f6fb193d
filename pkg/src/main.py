"""
Grover Simulator HTTP service

Main application with:
- Validation error handling
- Simulation errors mapped to sanitized error responses
- Request logging
"""

import time
from contextlib import asynccontextmanager
from typing import AsyncIterator

from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from src.errors import CapacityError, SimulationError
from src.logging import get_sim_logger
from src.models import ErrorResponse
from src.routes import search_router


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncIterator[None]:
    """Application lifespan manager."""
    # Configure logging before the first request
    get_sim_logger()
    yield


app = FastAPI(
    title="Grover Simulator",
    description="State-vector Grover search with gate-level and direct-operator engines",
    version="0.1.0",
    lifespan=lifespan,
)


# ─── Exception Handlers ──────────────────────────────────────────────────

@app.exception_handler(RequestValidationError)
async def validation_exception_handler(
    request: Request,
    exc: RequestValidationError,
) -> JSONResponse:
    """
    Handle request body validation errors.

    Logs field names only (never values) and returns a sanitized error.
    """
    error_fields = [
        ".".join(str(loc) for loc in err.get("loc", []))
        for err in exc.errors()
    ]
    get_sim_logger().log_request_rejected(
        route=request.url.path,
        error="validation_error",
        error_count=len(exc.errors()),
        error_fields=error_fields,
    )
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content=ErrorResponse(
            error="validation_error",
            detail=f"Request validation failed: {len(exc.errors())} error(s)",
        ).model_dump(mode="json"),
    )


@app.exception_handler(ValidationError)
async def config_validation_handler(
    request: Request,
    exc: ValidationError,
) -> JSONResponse:
    """A well-formed body that still yields an invalid RunConfig."""
    get_sim_logger().log_request_rejected(
        route=request.url.path,
        error="invalid_config",
        error_count=exc.error_count(),
    )
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content=ErrorResponse(
            error="invalid_config",
            detail="; ".join(err["msg"] for err in exc.errors()),
        ).model_dump(mode="json"),
    )


@app.exception_handler(SimulationError)
async def simulation_exception_handler(
    request: Request,
    exc: SimulationError,
) -> JSONResponse:
    """Capacity problems are 413; every other simulation error is 400."""
    too_large = isinstance(exc, CapacityError)
    category = "capacity_exceeded" if too_large else "invalid_simulation"
    get_sim_logger().log_request_rejected(
        route=request.url.path,
        error=category,
        error_count=1,
    )
    return JSONResponse(
        status_code=(
            status.HTTP_413_REQUEST_ENTITY_TOO_LARGE if too_large else status.HTTP_400_BAD_REQUEST
        ),
        content=ErrorResponse(error=category, detail=str(exc)).model_dump(mode="json"),
    )


# ─── Middleware ──────────────────────────────────────────────────────────

@app.middleware("http")
async def request_logging_middleware(request: Request, call_next):
    """Log all requests with timing."""
    start_ns = time.perf_counter_ns()

    response = await call_next(request)

    get_sim_logger().log_request(
        method=request.method,
        route=request.url.path,
        status_code=response.status_code,
        duration_ms=(time.perf_counter_ns() - start_ns) / 1e6,
    )
    return response


# ─── Routes ──────────────────────────────────────────────────────────────

app.include_router(search_router)


@app.get("/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}
