"""Stateless JSON-over-HTTP render service.

POST /api/render accepts the dataset inline (no uploads, no sessions), renders
the requested chart and returns the SVG plus the areas computed from the same
inputs, so any number of workers can serve interleaved requests identically.
A built frontend bundle, when present, is served at ``/``.
"""

from __future__ import annotations

import json
import math
import os
from pathlib import Path
from typing import NoReturn

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .data import embedded_example
from .errors import OrigamiError
from .geometry import (
    Dataset,
    apply_weights,
    area_calculation,
    normalized_area,
    polygon_area_closed_form,
    resolve_aux,
    standardize_weights,
    validate_dataset,
)
from .render import RenderOptions, render_pairwise, render_single, render_weighted

MAX_BODY_BYTES = 5 * 1024 * 1024
FRONTEND_ENV_VAR = "ORIGAMI_WEBAPP_DIR"


def _reject(code: str, message: str) -> NoReturn:
    err = OrigamiError(message)
    err.code = code
    raise err


def _require_number(value, where: str) -> float:
    # JSON numbers only; strings-as-numbers and booleans are rejected.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _reject("MISSING_VALUE", f"{where} must be a JSON number, got {value!r}")
    if not math.isfinite(value):
        _reject("MISSING_VALUE", f"{where} must be finite, got {value!r}")
    return float(value)


def _parse_body(body: bytes) -> dict:
    def no_constants(token: str) -> NoReturn:
        raise ValueError(f"JSON token {token} not allowed")

    try:
        payload = json.loads(body, parse_constant=no_constants)
    except (ValueError, UnicodeDecodeError) as exc:
        _reject("INVALID_JSON", f"request body is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        _reject("INVALID_JSON", "request body must be a JSON object")
    return payload


def _parse_dataset(payload: dict) -> Dataset:
    data = payload.get("data")
    if not isinstance(data, dict):
        _reject("INVALID_JSON", "'data' must be an object")
    for key in ("object_names", "attribute_names", "values"):
        if not isinstance(data.get(key), list):
            _reject("INVALID_JSON", f"'data.{key}' must be a list")
    scale_max = data.get("scale_max", 1.0)
    values = []
    for i, row in enumerate(data["values"]):
        if not isinstance(row, list):
            _reject("INVALID_JSON", f"'data.values[{i}]' must be a list")
        values.append(
            [_require_number(cell, f"data.values[{i}][{j}]") for j, cell in enumerate(row)]
        )
    return validate_dataset(
        [str(n) for n in data["object_names"]],
        [str(n) for n in data["attribute_names"]],
        values,
        _require_number(scale_max, "data.scale_max"),
    )


def _area_entry(values, aux_value: float, scale_max: float) -> dict:
    return {
        "raw": polygon_area_closed_form(values, aux_value),
        "normalized": normalized_area(values, scale_max),
    }


def _handle_render(payload: dict) -> dict:
    mode = payload.get("mode")
    if mode not in ("single", "pairwise", "weighted"):
        _reject("UNKNOWN_MODE", f"mode must be single, pairwise or weighted, got {mode!r}")

    objects = payload.get("objects")
    if not (isinstance(objects, list) and all(isinstance(o, str) for o in objects)):
        _reject("ARITY", "'objects' must be a list of object names")
    expected = 2 if mode == "pairwise" else 1
    if len(objects) != expected:
        _reject("ARITY", f"mode {mode} takes exactly {expected} object(s), got {len(objects)}")

    weights = payload.get("weights")
    if mode == "weighted":
        if not isinstance(weights, list):
            _reject("WEIGHTS_REQUIRED", "mode weighted requires a 'weights' list")
    elif weights is not None:
        _reject("WEIGHTS_FORBIDDEN", f"mode {mode} does not take weights")

    ds = _parse_dataset(payload)
    aux_raw = payload.get("aux")
    aux = resolve_aux(
        ds, None if aux_raw is None else _require_number(aux_raw, "aux")
    )
    options = payload.get("options") or {}
    if not isinstance(options, dict):
        _reject("INVALID_JSON", "'options' must be an object")
    opts = RenderOptions.from_mapping(options)

    if mode == "single":
        svg = render_single(ds, objects[0], aux, opts)
        name = ds.object_names[ds.object_index(objects[0])]
        areas = {name: _area_entry(ds.row(name), aux.aux_value, ds.scale_max)}
    elif mode == "pairwise":
        svg = render_pairwise(ds, objects[0], objects[1], aux, opts)
        areas = {}
        for requested in objects:
            name = ds.object_names[ds.object_index(requested)]
            areas[name] = _area_entry(ds.row(name), aux.aux_value, ds.scale_max)
    else:
        wv = standardize_weights(
            [_require_number(w, "weights[]") for w in weights], ds.n_attributes
        )
        svg = render_weighted(ds, objects[0], wv, aux, opts)
        name = ds.object_names[ds.object_index(objects[0])]
        row = ds.row(name)
        weighted_row = apply_weights(row, wv)
        entry = _area_entry(row, aux.aux_value, ds.scale_max)
        weighted_entry = _area_entry(weighted_row, aux.aux_value, ds.scale_max)
        entry["weighted_raw"] = weighted_entry["raw"]
        entry["weighted_normalized"] = weighted_entry["normalized"]
        areas = {name: entry}

    return {"svg": svg, "areas": areas}


def _frontend_dir() -> Path | None:
    override = os.environ.get(FRONTEND_ENV_VAR)
    candidates = [Path(override)] if override else []
    candidates.append(Path(__file__).resolve().parents[2] / "frontend" / "dist")
    for candidate in candidates:
        if candidate.is_dir() and (candidate / "index.html").is_file():
            return candidate
    return None


def create_app() -> FastAPI:
    app = FastAPI(title="origami-plot render service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST", "OPTIONS"],
        allow_headers=["*"],
    )

    @app.exception_handler(OrigamiError)
    async def origami_error_handler(_request: Request, exc: OrigamiError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={
                "code": exc.code,
                "message": str(exc),
                "detail": type(exc).__name__,
            },
        )

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/api/example")
    async def example() -> dict:
        ds = embedded_example()
        return {
            "object_names": list(ds.object_names),
            "attribute_names": list(ds.attribute_names),
            "values": [list(row) for row in ds.values],
            "scale_max": ds.scale_max,
        }

    @app.post("/api/render")
    async def render(request: Request) -> Response:
        body = await request.body()
        if len(body) > MAX_BODY_BYTES:
            return JSONResponse(
                status_code=413,
                content={
                    "code": "BODY_TOO_LARGE",
                    "message": f"request body exceeds {MAX_BODY_BYTES} bytes",
                    "detail": "PayloadTooLarge",
                },
            )
        return JSONResponse(_handle_render(_parse_body(body)))

    # The static mount at "/" would otherwise swallow wrong-method requests
    # before the router's usual 405 kicks in.
    @app.api_route("/api/render", methods=["GET", "PUT", "DELETE", "PATCH", "HEAD"])
    async def render_wrong_method() -> Response:
        return JSONResponse(
            status_code=405,
            headers={"allow": "POST"},
            content={
                "code": "METHOD_NOT_ALLOWED",
                "message": "/api/render only accepts POST",
                "detail": "MethodNotAllowed",
            },
        )

    static_dir = _frontend_dir()
    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="webapp")

    return app


app = create_app()
