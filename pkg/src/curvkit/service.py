"""Stateless HTTP service exposing curvature, classification and spectra.

Every request carries the full graph, so identical requests always produce
identical bodies and the workers share no state; compute time is reported
in a response header to keep bodies byte-stable.  Values computed exactly
are returned both as a fraction string and as a 3-decimal float.
"""

from __future__ import annotations

import json
import os
import time
from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import __version__
from .bakry_emery import INFINITE_DIMENSION, CurvatureQuery, be_curvature
from .classification import NotCubicError, classify_cubic
from .graphs import AdjacencyParseError, Graph, parse_adjacency
from .ollivier import kappa, kappa_lly
from .spectral import laplacian_spectrum

DEFAULT_SIZE_CAP = 64
MAX_PARAM_DENOMINATOR = 10**6

EDGE_NOTIONS = ("ollivier", "ollivier_idleness", "lly")
VERTEX_NOTIONS = ("bakry_emery", "bakry_emery_dimension", "bakry_emery_sign")


class RequestProblem(Exception):
    def __init__(self, status: int, code: str, message: str, location=None):
        self.status = status
        self.code = code
        self.message = message
        self.location = location


def _problem_response(exc: RequestProblem) -> JSONResponse:
    body = {"error": exc.code, "message": exc.message}
    if exc.location is not None:
        body["location"] = list(exc.location)
    return JSONResponse(status_code=exc.status, content=body)


async def _read_json_object(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        raise RequestProblem(400, "empty_body", "request body is empty")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise RequestProblem(400, "invalid_json", f"body is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise RequestProblem(400, "invalid_body", "body must be a JSON object")
    return data


def _parse_graph(data: dict, size_cap: int) -> Graph:
    if "adjacency" not in data:
        raise RequestProblem(400, "missing_field", "field 'adjacency' is required")
    adjacency = data["adjacency"]
    if isinstance(adjacency, list):
        adjacency = json.dumps(adjacency)
    if not isinstance(adjacency, str):
        raise RequestProblem(
            400, "invalid_adjacency", "'adjacency' must be the matrix text form"
        )
    try:
        g = parse_adjacency(adjacency)
    except AdjacencyParseError as exc:
        raise RequestProblem(400, "parse_error", str(exc), exc.location)
    if g.n > size_cap:
        raise RequestProblem(
            413,
            "too_large",
            f"graph has {g.n} vertices; the configured cap is {size_cap}",
        )
    return g


def _parse_exact_number(value, name: str) -> Fraction:
    """Exact rational from a string like '1/4' or '0.25' (or an int).

    Binary floats are accepted via their shortest decimal repr; anything
    whose reduced denominator exceeds 10**6 is rejected, so float noise
    never sneaks in.
    """
    if isinstance(value, bool):
        raise RequestProblem(422, "invalid_param", f"'{name}' must be a number string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if not isinstance(value, str):
        raise RequestProblem(422, "invalid_param", f"'{name}' must be a number string")
    try:
        frac = Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise RequestProblem(
            422, "invalid_param", f"'{name}' is not a fraction or decimal: {value!r}"
        )
    if frac.denominator > MAX_PARAM_DENOMINATOR:
        raise RequestProblem(
            422,
            "invalid_param",
            f"'{name}' needs a denominator of at most {MAX_PARAM_DENOMINATOR}",
        )
    return frac


def _fraction_value(value: Fraction) -> dict:
    return {"fraction": str(value), "decimal": round(float(value), 3)}


def _edge_key(x: int, y: int) -> str:
    a, b = (x, y) if x < y else (y, x)
    return f"{a}-{b}"


def create_app(size_cap: int | None = None, static_dir: str | None = None) -> FastAPI:
    cap = size_cap if size_cap is not None else int(
        os.environ.get("CURVKIT_SIZE_CAP", DEFAULT_SIZE_CAP)
    )
    app = FastAPI(title="curvkit", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(RequestProblem)
    async def _handle_problem(_request, exc: RequestProblem):
        return _problem_response(exc)

    def _timed(content: dict, started: float) -> Response:
        response = JSONResponse(content=content)
        response.headers["X-Compute-Ms"] = str(int((time.monotonic() - started) * 1000))
        return response

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__, "size_cap": cap}

    @app.post("/api/curvature")
    async def curvature(request: Request):
        started = time.monotonic()
        data = await _read_json_object(request)
        g = _parse_graph(data, cap)
        notion = data.get("notion")
        if notion not in EDGE_NOTIONS + VERTEX_NOTIONS:
            raise RequestProblem(
                422,
                "unknown_notion",
                f"'notion' must be one of {EDGE_NOTIONS + VERTEX_NOTIONS}",
            )
        params = data.get("params") or {}
        if not isinstance(params, dict):
            raise RequestProblem(422, "invalid_param", "'params' must be an object")
        allowed = {"ollivier_idleness": {"idleness"}, "bakry_emery_dimension": {"dimension"}}
        extra = set(params) - allowed.get(notion, set())
        if extra:
            raise RequestProblem(
                422,
                "incompatible_params",
                f"params {sorted(extra)} are not accepted by notion '{notion}'",
            )

        if notion in EDGE_NOTIONS:
            if notion == "ollivier_idleness":
                if "idleness" not in params:
                    raise RequestProblem(
                        422, "missing_param", "notion 'ollivier_idleness' needs 'idleness'"
                    )
                idleness = _parse_exact_number(params["idleness"], "idleness")
                if not 0 <= idleness <= 1:
                    raise RequestProblem(
                        422, "invalid_param", "'idleness' must lie in [0, 1]"
                    )
            else:
                idleness = Fraction(0)
            values = {}
            for x, y in g.edges:
                if notion == "lly":
                    val = kappa_lly(g, x, y)
                else:
                    val = kappa(g, x, y, idleness).kappa
                values[_edge_key(x, y)] = _fraction_value(val)
            content = {"notion": notion, "kind": "edge", "values": values}
            return _timed(content, started)

        if notion == "bakry_emery_dimension":
            if "dimension" not in params:
                raise RequestProblem(
                    422, "missing_param", "notion 'bakry_emery_dimension' needs 'dimension'"
                )
            raw = params["dimension"]
            if isinstance(raw, str) and raw.strip().lower() in ("inf", "infinity"):
                dimension = INFINITE_DIMENSION
            else:
                dimension = _parse_exact_number(raw, "dimension")
                if dimension <= 0:
                    raise RequestProblem(
                        422, "invalid_param", "'dimension' must be positive"
                    )
        else:
            dimension = INFINITE_DIMENSION
        values = {}
        for v in range(g.n):
            res = be_curvature(g, CurvatureQuery(v, dimension))
            if notion == "bakry_emery_sign":
                values[str(v)] = {"sign": res.sign}
            else:
                values[str(v)] = {"decimal": round(res.curvature, 3), "sign": res.sign}
        content = {"notion": notion, "kind": "vertex", "values": values}
        return _timed(content, started)

    @app.post("/api/classify")
    async def classify(request: Request):
        started = time.monotonic()
        data = await _read_json_object(request)
        g = _parse_graph(data, cap)
        try:
            verdict = classify_cubic(g)
        except NotCubicError as exc:
            raise RequestProblem(422, "not_cubic", str(exc))
        content: dict = {"verdict": verdict.kind}
        if verdict.n is not None:
            content["n"] = verdict.n
            content["name"] = verdict.family_name()
        if verdict.kind == "not_nonnegatively_curved":
            content["witness"] = {
                "edge": list(verdict.witness_edge),
                "edge_kappa0": str(verdict.witness_edge_kappa),
                "vertex": verdict.witness_vertex,
                "vertex_curvature": round(verdict.witness_vertex_curvature, 6),
            }
        return _timed(content, started)

    @app.post("/api/spectrum")
    async def spectrum(request: Request):
        started = time.monotonic()
        data = await _read_json_object(request)
        g = _parse_graph(data, cap)
        res = laplacian_spectrum(g)
        content = {
            "eigenvalues": [round(v, 9) for v in res.eigenvalues],
            "lambda1": round(res.lambda1, 9) if res.lambda1 is not None else None,
            "zero_multiplicity": res.zero_multiplicity,
        }
        return _timed(content, started)

    directory = static_dir or os.environ.get("CURVKIT_STATIC_DIR")
    if directory and os.path.isdir(directory):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=directory, html=True), name="ui")

    return app


app = create_app()
