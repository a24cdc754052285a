"""Measurement semantics: Born sampling, collapse, and trajectories.

A reading of sentence k resolves into three outcomes: ``true`` and
``false`` (the measured slots) and ``latent`` (the state was not carrying a
measured value for that sentence).  Outcome weights follow the squared norm
of the projected state; collapse renormalizes the projection.  Trajectories
record every event with enough detail that replaying them from psi0 with
the same seed reproduces the run exactly.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import IO, Iterable, Mapping, Sequence

import numpy as np

from .linalg import LinalgError, StateVector, evolve
from .models import OUTCOME_FALSE, OUTCOME_LATENT, OUTCOME_TRUE, LiarModel

#: Sampling order; cumulative Born weights are taken in this order.
OUTCOMES = (OUTCOME_TRUE, OUTCOME_FALSE, OUTCOME_LATENT)

#: Identifier of the random stream backing seeded trajectories.
RNG_ALGORITHM = "numpy-pcg64"

#: Projections with smaller norm than this are treated as impossible readings.
MIN_BRANCH_NORM = 1e-12


class ImpossibleHypothesisError(ValueError):
    """The current state assigns no weight to the hypothesized reading."""


class ScheduleError(ValueError):
    """Malformed schedule event."""


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    sentence: int
    value: str
    probability: float
    post_state: StateVector


@dataclass(frozen=True)
class TrajectoryEvent:
    """One measurement, hypothesis, or evolution segment."""

    sim_time: float
    action: str
    sentence: int | None = None
    value: str | None = None
    dt: float | None = None
    probability: float | None = None

    def to_dict(self) -> dict:
        return {
            "sim_time": self.sim_time,
            "action": self.action,
            "sentence": self.sentence,
            "value": self.value,
            "dt": self.dt,
            "probability": self.probability,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TrajectoryEvent":
        return cls(
            sim_time=float(data["sim_time"]),
            action=str(data["action"]),
            sentence=data.get("sentence"),
            value=data.get("value"),
            dt=data.get("dt"),
            probability=data.get("probability"),
        )


@dataclass(frozen=True, eq=False)
class Trajectory:
    model: LiarModel
    rng_seed: int
    events: tuple[TrajectoryEvent, ...]
    final_state: StateVector
    rng_algorithm: str = RNG_ALGORITHM

    @property
    def sim_time(self) -> float:
        return self.events[-1].sim_time if self.events else 0.0


@dataclass(frozen=True, eq=False)
class ProbabilitySeries:
    """Born weights of one sentence on a uniform time grid."""

    sentence: int
    times: np.ndarray
    p_true: np.ndarray
    p_false: np.ndarray
    p_latent: np.ndarray

    def __post_init__(self):
        total = self.p_true + self.p_false + self.p_latent
        if float(np.max(np.abs(total - 1.0))) > 1e-10:
            raise LinalgError("outcome probabilities do not sum to 1")


def _normalize_value(value) -> str:
    if value is True or value == OUTCOME_TRUE:
        return OUTCOME_TRUE
    if value is False or value == OUTCOME_FALSE:
        return OUTCOME_FALSE
    raise ValueError(f"hypothesis value must be true or false, got {value!r}")


def born_weights(state: StateVector, model: LiarModel, sentence: int) -> dict[str, float]:
    """Squared projected norms for the three outcomes of one sentence."""
    if not 1 <= sentence <= model.n_sentences:
        raise ValueError(f"sentence {sentence} out of range 1..{model.n_sentences}")
    weights = {}
    for outcome in OUTCOMES:
        proj = model.projectors[(sentence, outcome)]
        weights[outcome] = float(
            np.sum(np.abs(proj.matrix @ state.amplitudes) ** 2)
        )
    return weights


def _collapse(state: StateVector, model: LiarModel, sentence: int, outcome: str) -> MeasurementOutcome:
    proj = model.projectors[(sentence, outcome)]
    projected = proj.matrix @ state.amplitudes
    norm = float(np.linalg.norm(projected))
    if norm <= MIN_BRANCH_NORM:
        raise ImpossibleHypothesisError(
            f"state assigns no weight to sentence {sentence} being {outcome}"
        )
    post = StateVector(projected / norm, state.labels)
    return MeasurementOutcome(sentence, outcome, norm * norm, post)


def hypothesize(state: StateVector, model: LiarModel, sentence: int, value) -> MeasurementOutcome:
    """Deterministically collapse onto the hypothesized reading.

    The probability field carries the Born weight the hypothesis had; a
    zero-weight hypothesis raises :class:`ImpossibleHypothesisError`.
    """
    return _collapse(state, model, sentence, _normalize_value(value))


def sample_measure(
    state: StateVector, model: LiarModel, sentence: int, rng: np.random.Generator
) -> MeasurementOutcome:
    """Draw an outcome with Born weights and collapse accordingly.

    Consumes exactly one uniform draw from ``rng``, so runs are reproducible
    given the seed and the draw count.
    """
    weights = born_weights(state, model, sentence)
    u = rng.random()
    acc = 0.0
    outcome = None
    for candidate in OUTCOMES:
        acc += weights[candidate]
        if u < acc:
            outcome = candidate
            break
    if outcome is None:
        # Rounding left u beyond the last cumulative weight; take the mode.
        outcome = max(OUTCOMES, key=lambda o: weights[o])
    return _collapse(state, model, sentence, outcome)


def evolve_state(state: StateVector, model: LiarModel, dt: float) -> StateVector:
    """Advance the state by phase time ``dt`` under the model Hamiltonian."""
    return evolve(model.hamiltonian, dt, state)


def probability_series(
    state: StateVector,
    model: LiarModel,
    sentence: int,
    t0: float,
    t1: float,
    steps: int,
) -> ProbabilitySeries:
    """Outcome probabilities of one sentence along Schrödinger evolution.

    Evaluates all three Born weights at ``steps`` uniformly spaced times in
    [t0, t1], endpoints included.
    """
    if steps < 2:
        raise ValueError("steps must be at least 2")
    if not t0 < t1:
        raise ValueError("need t0 < t1")
    times = np.linspace(t0, t1, steps)
    rows = {outcome: np.empty(steps) for outcome in OUTCOMES}
    for i, t in enumerate(times):
        evolved = evolve(model.hamiltonian, float(t), state)
        weights = born_weights(evolved, model, sentence)
        for outcome in OUTCOMES:
            rows[outcome][i] = weights[outcome]
    return ProbabilitySeries(
        sentence, times, rows[OUTCOME_TRUE], rows[OUTCOME_FALSE], rows[OUTCOME_LATENT]
    )


def write_series_csv(series: Iterable[ProbabilitySeries], out: IO[str]) -> None:
    """Write series as CSV rows ``t,sentence,p_true,p_false,p_latent``.

    Rows are time-major across sentences; floats keep full round-trip
    precision.
    """
    series = list(series)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "sentence", "p_true", "p_false", "p_latent"])
    if not series:
        return
    steps = len(series[0].times)
    for s in series:
        if len(s.times) != steps:
            raise ValueError("all series must share one time grid")
    for i in range(steps):
        for s in series:
            writer.writerow(
                [
                    repr(float(s.times[i])),
                    s.sentence,
                    repr(float(s.p_true[i])),
                    repr(float(s.p_false[i])),
                    repr(float(s.p_latent[i])),
                ]
            )


def _initial_state(model: LiarModel, initial_state: StateVector | None) -> StateVector:
    state = initial_state if initial_state is not None else model.psi0
    if state is None:
        raise ScheduleError(
            "model has no psi0 (consistent system); pass an explicit initial state"
        )
    return state


def run_schedule(
    model: LiarModel,
    schedule: Sequence[Mapping],
    seed: int,
    initial_state: StateVector | None = None,
) -> Trajectory:
    """Replay a schedule of events from psi0 under a seeded generator.

    Schedule events are mappings with an ``action`` of ``hypothesize``
    (needs ``sentence`` and boolean ``value``), ``sample`` (needs
    ``sentence``), or ``evolve`` (needs non-negative ``dt``).  Identical
    (model, schedule, seed) triples produce identical trajectories.
    """
    rng = np.random.default_rng(seed)
    state = _initial_state(model, initial_state)
    sim_time = 0.0
    events: list[TrajectoryEvent] = []
    for index, raw in enumerate(schedule):
        action = raw.get("action")
        try:
            if action == "hypothesize":
                outcome = hypothesize(state, model, int(raw["sentence"]), raw["value"])
            elif action == "sample":
                outcome = sample_measure(state, model, int(raw["sentence"]), rng)
            elif action == "evolve":
                dt = float(raw["dt"])
                if not np.isfinite(dt) or dt < 0:
                    raise ScheduleError(f"event {index}: dt must be finite and >= 0")
                state = evolve_state(state, model, dt)
                sim_time += dt
                events.append(TrajectoryEvent(sim_time, "evolve", dt=dt))
                continue
            else:
                raise ScheduleError(f"event {index}: unknown action {action!r}")
        except ImpossibleHypothesisError as exc:
            raise ImpossibleHypothesisError(f"event {index}: {exc}") from exc
        except KeyError as exc:
            raise ScheduleError(f"event {index}: missing field {exc}") from exc
        state = outcome.post_state
        events.append(
            TrajectoryEvent(
                sim_time,
                action,
                sentence=outcome.sentence,
                value=outcome.value,
                probability=outcome.probability,
            )
        )
    return Trajectory(model, seed, tuple(events), state)


def replay_events(
    model: LiarModel,
    events: Iterable[TrajectoryEvent],
    seed: int | None = None,
    initial_state: StateVector | None = None,
    rng: np.random.Generator | None = None,
) -> StateVector:
    """Reconstruct the state after a recorded event log.

    Sampled outcomes are re-drawn from the seeded generator and checked
    against the log, so replay doubles as an integrity check.  Passing a
    live ``rng`` instead of a seed leaves it positioned after the consumed
    draws, which lets a session resume exactly where the log stops.
    """
    if rng is None:
        rng = np.random.default_rng(seed)
    state = _initial_state(model, initial_state)
    for index, event in enumerate(events):
        if event.action == "evolve":
            state = evolve_state(state, model, float(event.dt))
        elif event.action == "hypothesize":
            state = hypothesize(state, model, event.sentence, event.value).post_state
        elif event.action == "sample":
            outcome = sample_measure(state, model, event.sentence, rng)
            if outcome.value != event.value:
                raise ScheduleError(
                    f"event {index}: replay drew {outcome.value!r} "
                    f"but log records {event.value!r}"
                )
            state = outcome.post_state
        elif event.action == "reset":
            state = _initial_state(model, initial_state)
        else:
            raise ScheduleError(f"event {index}: unknown action {event.action!r}")
    return state
