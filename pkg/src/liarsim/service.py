"""HTTP session service around the compiler and measurement layers.

Sessions are event-sourced: every command appends to a JSON log under
``data_dir/sessions/`` and the quantum state is always derived by replaying
that log from psi0, which doubles as an integrity check on load.  Commands
on one session are serialized with a per-session lock; distinct sessions
run independently.  Persistence writes go through a temp file and an
atomic rename.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .compiler import compile_system, model_summary
from .dsl import ParseError, TopologyError, parse_system
from .linalg import evolve
from .measurement import (
    RNG_ALGORITHM,
    ImpossibleHypothesisError,
    TrajectoryEvent,
    born_weights,
    hypothesize,
    probability_series,
    replay_events,
    sample_measure,
)
from .models import LiarModel

MEASURE_MODES = ("sample", "hypothesize_true", "hypothesize_false")


class SystemBody(BaseModel):
    name: str
    source: str


class SessionBody(BaseModel):
    seed: int


class MeasureBody(BaseModel):
    sentence: int
    mode: str


class EvolveBody(BaseModel):
    dt: float


@dataclass
class SessionRuntime:
    """In-memory view of one session; single writer via ``lock``."""

    session_id: str
    system_id: str
    seed: int
    model: LiarModel
    state: object
    rng: np.random.Generator
    events: list[TrajectoryEvent] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def sim_time(self) -> float:
        return self.events[-1].sim_time if self.events else 0.0


def _atomic_write_json(path: Path, payload: dict) -> None:
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, indent=2))
    os.replace(tmp, path)


class Store:
    """File-tree persistence: ``systems/{id}.json`` and ``sessions/{id}.json``."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        (self.data_dir / "systems").mkdir(parents=True, exist_ok=True)
        (self.data_dir / "sessions").mkdir(parents=True, exist_ok=True)
        self._models: dict[str, LiarModel] = {}
        self._sessions: dict[str, SessionRuntime] = {}
        self._registry_lock = threading.Lock()

    # -- systems ----------------------------------------------------------
    def _system_path(self, system_id: str) -> Path:
        return self.data_dir / "systems" / f"{system_id}.json"

    def create_system(self, name: str, source: str) -> dict:
        system = parse_system(source, name=name)
        model = compile_system(system)
        system_id = secrets.token_hex(16)
        record = {
            "system_id": system_id,
            "name": name,
            "source": source,
            "summary": model_summary(model),
        }
        _atomic_write_json(self._system_path(system_id), record)
        with self._registry_lock:
            self._models[system_id] = model
        return record

    def load_system_record(self, system_id: str) -> dict:
        path = self._system_path(system_id)
        if not path.exists():
            raise KeyError(system_id)
        return json.loads(path.read_text())

    def get_model(self, system_id: str) -> LiarModel:
        with self._registry_lock:
            model = self._models.get(system_id)
        if model is not None:
            return model
        record = self.load_system_record(system_id)
        model = compile_system(parse_system(record["source"], name=record["name"]))
        if model_summary(model) != record["summary"]:
            raise RuntimeError(
                f"stored summary for system {system_id} does not match recompilation"
            )
        with self._registry_lock:
            self._models[system_id] = model
        return model

    # -- sessions ---------------------------------------------------------
    def _session_path(self, session_id: str) -> Path:
        return self.data_dir / "sessions" / f"{session_id}.json"

    def create_session(self, system_id: str, seed: int) -> SessionRuntime:
        model = self.get_model(system_id)
        if model.psi0 is None:
            raise ValueError(
                "system is consistent: it has no paradoxical orbit and no "
                "canonical initial state to measure"
            )
        runtime = SessionRuntime(
            session_id=secrets.token_hex(16),
            system_id=system_id,
            seed=seed,
            model=model,
            state=model.psi0,
            rng=np.random.default_rng(seed),
        )
        self.persist_session(runtime)
        with self._registry_lock:
            self._sessions[runtime.session_id] = runtime
        return runtime

    def persist_session(self, runtime: SessionRuntime) -> None:
        payload = {
            "session_id": runtime.session_id,
            "system_id": runtime.system_id,
            "seed": runtime.seed,
            "rng_algorithm": RNG_ALGORITHM,
            "events": [e.to_dict() for e in runtime.events],
        }
        _atomic_write_json(self._session_path(runtime.session_id), payload)

    def get_session(self, session_id: str) -> SessionRuntime:
        with self._registry_lock:
            runtime = self._sessions.get(session_id)
        if runtime is not None:
            return runtime
        path = self._session_path(session_id)
        if not path.exists():
            raise KeyError(session_id)
        payload = json.loads(path.read_text())
        model = self.get_model(payload["system_id"])
        events = [TrajectoryEvent.from_dict(e) for e in payload["events"]]
        rng = np.random.default_rng(payload["seed"])
        state = replay_events(model, events, rng=rng)
        runtime = SessionRuntime(
            session_id=payload["session_id"],
            system_id=payload["system_id"],
            seed=payload["seed"],
            model=model,
            state=state,
            rng=rng,
            events=events,
        )
        with self._registry_lock:
            self._sessions[session_id] = runtime
        return runtime


def state_summary(runtime: SessionRuntime, top_n: int = 8) -> dict:
    """Per-sentence outcome weights plus the largest basis amplitudes."""
    model = runtime.model
    amps = runtime.state.amplitudes
    probabilities = []
    for sentence in range(1, model.n_sentences + 1):
        weights = born_weights(runtime.state, model, sentence)
        probabilities.append(
            {
                "sentence": sentence,
                "p_true": weights["true"],
                "p_false": weights["false"],
                "p_latent": weights["latent"],
            }
        )
    magnitudes = np.abs(amps)
    order = sorted(range(len(amps)), key=lambda i: (-magnitudes[i], i))[:top_n]
    top = [
        {
            "index": i + 1,
            "label": model.basis_labels[i],
            "re": float(amps[i].real),
            "im": float(amps[i].imag),
            "magnitude": float(magnitudes[i]),
            "phase": float(np.angle(amps[i])),
        }
        for i in order
    ]
    return {"probabilities": probabilities, "top_amplitudes": top}


def create_app(
    data_dir: str | Path,
    cors_origins: tuple[str, ...] = ("*",),
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around a data directory.

    ``static_dir``, when given, is served at ``/`` so the measurement
    console can ride along with the API.
    """
    store = Store(data_dir)
    app = FastAPI(title="liarsim service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def fetch_session(session_id: str) -> SessionRuntime:
        try:
            return store.get_session(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id}")

    @app.post("/api/systems", status_code=201)
    def create_system(body: SystemBody):
        try:
            record = store.create_system(body.name, body.source)
        except (ParseError, TopologyError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"system_id": record["system_id"], "summary": record["summary"]}

    @app.get("/api/systems/{system_id}")
    def get_system(system_id: str):
        try:
            record = store.load_system_record(system_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown system {system_id}")
        return {"summary": record["summary"], "source": record["source"]}

    @app.post("/api/systems/{system_id}/sessions", status_code=201)
    def create_session(system_id: str, body: SessionBody):
        try:
            runtime = store.create_session(system_id, body.seed)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown system {system_id}")
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {"session_id": runtime.session_id, "state": state_summary(runtime)}

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        runtime = fetch_session(session_id)
        with runtime.lock:
            return {"state": state_summary(runtime), "sim_time": runtime.sim_time}

    @app.post("/api/sessions/{session_id}/measure")
    def measure(session_id: str, body: MeasureBody):
        runtime = fetch_session(session_id)
        if body.mode not in MEASURE_MODES:
            raise HTTPException(
                status_code=400,
                detail=f"mode must be one of {MEASURE_MODES}, got {body.mode!r}",
            )
        with runtime.lock:
            if not 1 <= body.sentence <= runtime.model.n_sentences:
                raise HTTPException(
                    status_code=400,
                    detail=f"sentence {body.sentence} out of range 1..{runtime.model.n_sentences}",
                )
            try:
                if body.mode == "sample":
                    outcome = sample_measure(
                        runtime.state, runtime.model, body.sentence, runtime.rng
                    )
                    action = "sample"
                else:
                    outcome = hypothesize(
                        runtime.state,
                        runtime.model,
                        body.sentence,
                        body.mode == "hypothesize_true",
                    )
                    action = "hypothesize"
            except ImpossibleHypothesisError as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            runtime.state = outcome.post_state
            runtime.events.append(
                TrajectoryEvent(
                    runtime.sim_time,
                    action,
                    sentence=outcome.sentence,
                    value=outcome.value,
                    probability=outcome.probability,
                )
            )
            store.persist_session(runtime)
            return {
                "outcome": {
                    "sentence": outcome.sentence,
                    "value": outcome.value,
                    "probability": outcome.probability,
                },
                "state": state_summary(runtime),
                "sim_time": runtime.sim_time,
            }

    @app.post("/api/sessions/{session_id}/evolve")
    def evolve_session(session_id: str, body: EvolveBody):
        runtime = fetch_session(session_id)
        if not np.isfinite(body.dt) or body.dt < 0:
            raise HTTPException(status_code=400, detail="dt must be finite and >= 0")
        with runtime.lock:
            runtime.state = evolve(runtime.model.hamiltonian, body.dt, runtime.state)
            runtime.events.append(
                TrajectoryEvent(runtime.sim_time + body.dt, "evolve", dt=body.dt)
            )
            store.persist_session(runtime)
            return {"state": state_summary(runtime), "sim_time": runtime.sim_time}

    @app.post("/api/sessions/{session_id}/reset")
    def reset_session(session_id: str):
        runtime = fetch_session(session_id)
        with runtime.lock:
            runtime.state = runtime.model.psi0
            runtime.events.append(TrajectoryEvent(runtime.sim_time, "reset"))
            store.persist_session(runtime)
            return {"state": state_summary(runtime), "sim_time": runtime.sim_time}

    @app.get("/api/sessions/{session_id}/series")
    def series(
        session_id: str,
        sentence: int,
        t0: float = Query(default=0.0, alias="from"),
        t1: float = Query(default=2.0 * np.pi, alias="to"),
        steps: int = 128,
    ):
        runtime = fetch_session(session_id)
        with runtime.lock:
            state = runtime.state
            offset = runtime.sim_time
            model = runtime.model
        if not 1 <= sentence <= model.n_sentences:
            raise HTTPException(status_code=400, detail=f"sentence {sentence} out of range")
        if steps < 2 or not t0 < t1:
            raise HTTPException(status_code=400, detail="need steps >= 2 and from < to")
        # Grid is absolute sim-time; the session state sits at `offset`.
        out = probability_series(state, model, sentence, t0 - offset, t1 - offset, steps)
        return {
            "times": [float(t) + offset for t in out.times],
            "p_true": out.p_true.tolist(),
            "p_false": out.p_false.tolist(),
            "p_latent": out.p_latent.tolist(),
        }

    @app.get("/api/sessions/{session_id}/history")
    def history(session_id: str):
        runtime = fetch_session(session_id)
        with runtime.lock:
            return {"events": [e.to_dict() for e in runtime.events]}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
