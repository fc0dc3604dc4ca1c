"""Stateless HTTP facade over the evaluation pipeline.

Endpoints (all under ``/api/v1``, JSON in/out):

- ``POST /evaluate``        {problem | case, alpha, entropy_model, aggregator,
                             standard_marcos, include_intermediate}
- ``POST /sweep``           evaluate body plus ``alpha_grid`` (list or "a:b:step")
- ``POST /perturb``         evaluate body plus ``delta``
- ``POST /compare-entropy`` evaluate body (alpha, aggregator honoured)
- ``GET  /cases``           names of built-in cases
- ``GET  /scales/default``  the default linguistic scale

Responses are rendered through the same canonical JSON writer as the CLI's
structured output, so identical inputs give byte-identical bodies across
requests and restarts.  Wall-clock timing is reported in the
``X-Engine-Millis`` header, never in the body.  Validation problems map to
400 with the offending field named, degenerate computations to 422, and
oversized problems (over 64 alternatives x 64 criteria x 32 experts) to 413.
"""

from __future__ import annotations

import os
import time
from typing import Any, Sequence

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import reporting, robustness
from .documents import document_to_problem, problem_to_document
from .errors import (
    DegenerateComputationError,
    DomainError,
    SchemaError,
    ValidationError,
    ValidationFailure,
)
from .ffn import DEFAULT_SCALE
from .pipeline import AGGREGATORS, evaluate
from .entropy import ENTROPY_MODELS
from .problem import DecisionProblem, builtin_case, case_names

MAX_ALTERNATIVES = 64
MAX_CRITERIA = 64
MAX_EXPERTS = 32

DEFAULT_PORT = 8645
DEFAULT_BIND = "127.0.0.1"


class _FieldError(Exception):
    """Request rejected; carries the offending field path."""

    def __init__(self, field: str, message: str, status: int = 400):
        self.field = field
        self.status = status
        super().__init__(message)


def _json_response(doc: dict[str, Any], status: int = 200, millis: float | None = None) -> Response:
    headers = {}
    if millis is not None:
        headers["X-Engine-Millis"] = f"{millis:.3f}"
    return Response(
        content=reporting.render_structured(doc),
        status_code=status,
        media_type="application/json",
        headers=headers,
    )


def _error_response(field: str, message: str, status: int) -> Response:
    return _json_response({"error": {"field": field, "message": message}}, status=status)


def _get_number(body: dict, key: str, default: float, lo: float, hi: float) -> float:
    value = body.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _FieldError(key, f"{key} must be a number")
    if not lo <= float(value) <= hi:
        raise _FieldError(key, f"{key} must lie in [{lo:g}, {hi:g}], got {value}")
    return float(value)


def _get_choice(body: dict, key: str, default: str, choices: Sequence[str]) -> str:
    value = body.get(key, default)
    if value not in choices:
        raise _FieldError(key, f"{key} must be one of {list(choices)}, got {value!r}")
    return value


def _get_flag(body: dict, key: str, default: bool = False) -> bool:
    value = body.get(key, default)
    if not isinstance(value, bool):
        raise _FieldError(key, f"{key} must be a boolean")
    return value


def _resolve_problem(body: dict) -> DecisionProblem:
    has_inline = "problem" in body
    has_case = "case" in body
    if has_inline == has_case:
        raise _FieldError("problem", "exactly one of 'problem' or 'case' is required")
    if has_case:
        if not isinstance(body["case"], str):
            raise _FieldError("case", "case must be a string")
        try:
            problem = builtin_case(body["case"])
        except ValidationFailure as exc:
            raise _FieldError("case", str(exc)) from exc
    else:
        if not isinstance(body["problem"], dict):
            raise _FieldError("problem", "problem must be a document object")
        try:
            problem = document_to_problem(body["problem"])
        except (SchemaError, ValidationError) as exc:
            path = getattr(exc, "path", "") or ""
            field = f"problem.{path}" if path else "problem"
            raise _FieldError(field, str(exc)) from exc
    if (
        len(problem.alternatives) > MAX_ALTERNATIVES
        or len(problem.criteria) > MAX_CRITERIA
        or len(problem.experts) > MAX_EXPERTS
    ):
        raise _FieldError(
            "problem",
            f"problem exceeds the service limit of {MAX_ALTERNATIVES} alternatives x "
            f"{MAX_CRITERIA} criteria x {MAX_EXPERTS} experts",
            status=413,
        )
    return problem


def _pipeline_options(body: dict) -> dict[str, Any]:
    return {
        "alpha": _get_number(body, "alpha", 0.5, 0.0, 1.0),
        "entropy": _get_choice(body, "entropy_model", "cosine", ENTROPY_MODELS),
        "aggregator": _get_choice(body, "aggregator", "ffwa", AGGREGATORS),
        "standard_marcos": _get_flag(body, "standard_marcos"),
    }


def _parse_alpha_grid(body: dict) -> list[float]:
    raw = body.get("alpha_grid", list(robustness.DEFAULT_ALPHA_GRID))
    if isinstance(raw, str):
        from .cli import _parse_grid

        try:
            return _parse_grid(raw)
        except DomainError as exc:
            raise _FieldError("alpha_grid", str(exc)) from exc
    if not isinstance(raw, list) or not raw:
        raise _FieldError("alpha_grid", "alpha_grid must be a non-empty list or 'start:stop:step'")
    grid = []
    for i, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not 0.0 <= v <= 1.0:
            raise _FieldError(f"alpha_grid[{i}]", f"grid values must be numbers in [0, 1], got {v!r}")
        grid.append(float(v))
    return grid


def create_app(allowed_origins: Sequence[str] = ()) -> FastAPI:
    app = FastAPI(title="ffdecide", docs_url=None, redoc_url=None, openapi_url=None)
    if allowed_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(allowed_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["Content-Type"],
        )

    @app.exception_handler(_FieldError)
    async def field_error_handler(request: Request, exc: _FieldError):
        return _error_response(exc.field, str(exc), exc.status)

    @app.exception_handler(ValidationFailure)
    async def validation_handler(request: Request, exc: ValidationFailure):
        return _error_response(getattr(exc, "path", "") or "", str(exc), 400)

    @app.exception_handler(DegenerateComputationError)
    async def degenerate_handler(request: Request, exc: DegenerateComputationError):
        return _error_response("", str(exc), 422)

    async def _body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise _FieldError("", "request body must be a JSON object")
        if not isinstance(body, dict):
            raise _FieldError("", "request body must be a JSON object")
        return body

    @app.post("/api/v1/evaluate")
    async def evaluate_endpoint(request: Request) -> Response:
        body = await _body(request)
        problem = _resolve_problem(body)
        options = _pipeline_options(body)
        include_intermediate = _get_flag(body, "include_intermediate")
        started = time.perf_counter()
        outcome = evaluate(problem, **options)
        millis = (time.perf_counter() - started) * 1e3
        return _json_response(
            reporting.outcome_to_document(outcome, include_intermediate), millis=millis
        )

    @app.post("/api/v1/sweep")
    async def sweep_endpoint(request: Request) -> Response:
        body = await _body(request)
        problem = _resolve_problem(body)
        options = _pipeline_options(body)
        grid = _parse_alpha_grid(body)
        started = time.perf_counter()
        rows = robustness.alpha_sweep(
            problem, grid, entropy=options["entropy"],
            aggregator=options["aggregator"], standard_marcos=options["standard_marcos"],
        )
        millis = (time.perf_counter() - started) * 1e3
        return _json_response(
            reporting.sweep_to_document(rows, problem.alternative_ids), millis=millis
        )

    @app.post("/api/v1/perturb")
    async def perturb_endpoint(request: Request) -> Response:
        body = await _body(request)
        problem = _resolve_problem(body)
        options = _pipeline_options(body)
        delta = _get_number(body, "delta", 0.10, 0.0, 1.0)
        if not 0.0 < delta < 1.0:
            raise _FieldError("delta", f"delta must lie strictly inside (0, 1), got {delta}")
        started = time.perf_counter()
        base = evaluate(problem, **options)
        rows = robustness.perturb_weights(problem, delta=delta, **options)
        millis = (time.perf_counter() - started) * 1e3
        return _json_response(
            reporting.perturbation_to_document(rows, base.result.order, delta), millis=millis
        )

    @app.post("/api/v1/compare-entropy")
    async def compare_endpoint(request: Request) -> Response:
        body = await _body(request)
        problem = _resolve_problem(body)
        options = _pipeline_options(body)
        started = time.perf_counter()
        comparison = robustness.compare_entropies(
            problem, alpha=options["alpha"], aggregator=options["aggregator"],
            standard_marcos=options["standard_marcos"],
        )
        millis = (time.perf_counter() - started) * 1e3
        return _json_response(reporting.comparison_to_document(comparison), millis=millis)

    @app.get("/api/v1/cases")
    async def cases_endpoint() -> Response:
        return _json_response({"cases": list(case_names())})

    @app.get("/api/v1/cases/{name}")
    async def case_endpoint(name: str) -> Response:
        return _json_response(problem_to_document(builtin_case(name)))

    @app.get("/api/v1/scales/default")
    async def default_scale_endpoint() -> Response:
        return _json_response(
            {"terms": {term: [f.mu, f.nu] for term, f in DEFAULT_SCALE.items()}}
        )

    return app


def serve(
    port: int = DEFAULT_PORT,
    bind: str = DEFAULT_BIND,
    allowed_origins: Sequence[str] = (),
) -> None:
    """Run the service; FFDECIDE_PORT / FFDECIDE_BIND env vars override."""
    import uvicorn

    port = int(os.environ.get("FFDECIDE_PORT", port))
    bind = os.environ.get("FFDECIDE_BIND", bind)
    uvicorn.run(create_app(allowed_origins), host=bind, port=port, log_level="info")
