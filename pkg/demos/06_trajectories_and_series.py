#!/usr/bin/env python3
"""Seeded trajectories and probability time series.

A schedule mixes hypotheses (deterministic collapse), Born-rule samples
(seeded randomness), and evolution segments.  The resulting trajectory is
fully reproducible from (model, schedule, seed), and the probability
series after the run shows the paradox oscillating.
"""

import io

import numpy as np

from liarsim import (
    compile_system,
    parse_system,
    probability_series,
    run_schedule,
    write_series_csv,
)

model = compile_system(parse_system(
    "(1) sentence (2) is false\n(2) sentence (1) is true", name="double-liar"
))

schedule = [
    {"action": "hypothesize", "sentence": 1, "value": True},
    {"action": "evolve", "dt": np.pi / 2},
    {"action": "sample", "sentence": 2},
    {"action": "evolve", "dt": np.pi / 4},
    {"action": "sample", "sentence": 1},
]

trajectory = run_schedule(model, schedule, seed=2027)
print(f"seed={trajectory.rng_seed} ({trajectory.rng_algorithm})")
for event in trajectory.events:
    if event.action == "evolve":
        print(f"  t={event.sim_time:.4f}  evolved by dt={event.dt:.4f}")
    else:
        print(f"  t={event.sim_time:.4f}  {event.action} sentence {event.sentence}"
              f" -> {event.value} (p={event.probability:.4f})")

# Sentence-1 series over one full period from the post-schedule state.
series = probability_series(trajectory.final_state, model, 1, 0.0, 2 * np.pi, 9)
print("\nsentence 1 from the final state:")
for t, pt, pf, pl in zip(series.times, series.p_true, series.p_false, series.p_latent):
    bar = "#" * int(round(20 * pt))
    print(f"  t={t:6.3f}  p_true={pt:.3f} p_false={pf:.3f} p_latent={pl:.3f}  {bar}")

# The same data as the CSV the CLI writes.
buf = io.StringIO()
write_series_csv([series], buf)
print("\nCSV head:")
print("\n".join(buf.getvalue().splitlines()[:4]))
