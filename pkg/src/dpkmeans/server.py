"""HTTP interface for the decision-graph explorer.

Four endpoints over one immutable loaded profile: the per-point profile, the
descending gamma ranking, rectangle-driven clustering, and a 2-D projection
for plotting. Selection requests are computed fresh per request; the only
shared mutation is a lock-protected "last result" slot that feeds the
projection endpoint.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .centers import select_by_jump, select_by_rectangle, select_top_k
from .clustering import improved_kmeans
from .dataset import Dataset, accuracy
from .density import DensityProfile
from .distance import KernelSpec
from .errors import AlgorithmError

JUMP_DISPLAY_RATIO = 1.5  # below this the gamma decay is too smooth to suggest a k


@dataclass
class ServerState:
    """Loaded dataset/profile plus defaults and the last clustering result."""

    dataset: Dataset | None = None
    profile: DensityProfile | None = None
    default_q: float = 1.5
    default_mode: str = "iterate"
    _last: dict | None = None
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def remember(self, result: dict) -> None:
        with self._lock:
            self._last = result

    def last(self) -> dict | None:
        with self._lock:
            return self._last


def default_static_dir() -> Path | None:
    """Bundled UI assets if present: package webui/, else a frontend/dist nearby."""
    bundled = Path(__file__).resolve().parent / "webui"
    if (bundled / "index.html").exists():
        return bundled
    for base in (Path.cwd(), *Path.cwd().parents):
        candidate = base / "frontend" / "dist"
        if (candidate / "index.html").exists():
            return candidate
    return None


def _no_profile() -> JSONResponse:
    return JSONResponse(status_code=409, content={"error": "no profile loaded"})


def _bad_request(message: str) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message})


def create_app(state: ServerState, static_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="dpkmeans decision-graph explorer")

    @app.get("/api/profile")
    def get_profile():
        if state.profile is None:
            return _no_profile()
        return {
            "points": state.profile.to_points(),
            "dc": state.profile.dc,
            "kernel": state.profile.kernel,
        }

    @app.get("/api/gamma")
    def get_gamma():
        if state.profile is None:
            return _no_profile()
        profile = state.profile
        order = sorted(range(profile.n), key=lambda i: (-profile.gamma[i], i))
        suggested = None
        ratio = None
        try:
            jump = select_by_jump(profile)
            ratio = jump.params["ratio"]
            if ratio >= JUMP_DISPLAY_RATIO:
                suggested = jump.params["k"]
        except AlgorithmError:
            pass
        return {
            "points": [{"i": i, "gamma": float(profile.gamma[i])} for i in order],
            "suggestedK": suggested,
            "jumpRatio": ratio,
        }

    async def _parse_select_body(request: Request):
        """Shared body handling for the two selection endpoints."""
        try:
            body = await request.json()
        except Exception:
            return None, _bad_request("request body is not valid JSON")
        if not isinstance(body, dict):
            return None, _bad_request("request body must be a JSON object")
        try:
            kernel = KernelSpec(float(body.get("q", state.default_q)))
        except (TypeError, ValueError) as exc:
            return None, _bad_request(str(exc))
        mode = body.get("mode", state.default_mode)
        if mode not in ("iterate", "single_pass"):
            return None, _bad_request(f"unknown mode {mode!r}")
        return (body, kernel, mode), None

    def _cluster_response(selection, kernel: KernelSpec, mode: str):
        result = improved_kmeans(state.dataset, selection, kernel=kernel, mode=mode)
        acc = None
        if state.dataset.labels is not None:
            acc = accuracy(result.assignment, state.dataset.labels).accuracy
        payload = {
            "centers": [int(i) for i in selection.center_indices],
            "assignment": [int(a) for a in result.assignment],
            "e": result.criterion_e,
            "accuracy": acc,
        }
        state.remember(payload)
        return payload

    @app.post("/api/select")
    async def post_select(request: Request):
        if state.profile is None or state.dataset is None:
            return _no_profile()
        parsed, failure = await _parse_select_body(request)
        if failure is not None:
            return failure
        body, kernel, mode = parsed
        try:
            rho_min = float(body["rhoMin"])
            delta_min = float(body["deltaMin"])
        except KeyError as exc:
            return _bad_request(f"missing field {exc.args[0]!r}")
        except (TypeError, ValueError):
            return _bad_request("rhoMin and deltaMin must be numbers")
        try:
            selection = select_by_rectangle(state.profile, rho_min, delta_min)
        except AlgorithmError as exc:
            return _bad_request(str(exc))
        return _cluster_response(selection, kernel, mode)

    @app.post("/api/select-k")
    async def post_select_k(request: Request):
        if state.profile is None or state.dataset is None:
            return _no_profile()
        parsed, failure = await _parse_select_body(request)
        if failure is not None:
            return failure
        body, kernel, mode = parsed
        try:
            k = int(body["k"])
        except KeyError:
            return _bad_request("missing field 'k'")
        except (TypeError, ValueError):
            return _bad_request("k must be an integer")
        try:
            selection = select_top_k(state.profile, k)
        except ValueError as exc:
            return _bad_request(str(exc))
        return _cluster_response(selection, kernel, mode)

    @app.get("/api/data")
    def get_data(x: str | None = None, y: str | None = None):
        if state.dataset is None:
            return _no_profile()
        data = state.dataset

        def resolve(spec: str | None, fallback: int | None):
            if spec is None:
                if fallback is None:
                    return "index", None
                return data.feature_names[fallback], data.points[:, fallback]
            if spec == "index":
                return "index", None
            if spec in data.feature_names:
                col = data.feature_names.index(spec)
                return data.feature_names[col], data.points[:, col]
            if spec.lstrip("-").isdigit() and 0 <= int(spec) < data.dim:
                col = int(spec)
                return data.feature_names[col], data.points[:, col]
            raise KeyError(spec)

        try:
            x_name, x_vals = resolve(x, 0)
            y_name, y_vals = resolve(y, 1 if data.dim > 1 else None)
        except KeyError as exc:
            return _bad_request(f"unknown column {exc.args[0]!r}")
        last = state.last()
        assignment = last["assignment"] if last else None
        centers = last["centers"] if last else []
        points = [
            {
                "i": i,
                "x": float(x_vals[i]) if x_vals is not None else i,
                "y": float(y_vals[i]) if y_vals is not None else i,
                "cluster": assignment[i] if assignment else None,
            }
            for i in range(data.n)
        ]
        return {
            "points": points,
            "xName": x_name,
            "yName": y_name,
            "centers": centers,
            "columns": list(data.feature_names),
        }

    if static_dir is not None and (Path(static_dir) / "index.html").exists():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
