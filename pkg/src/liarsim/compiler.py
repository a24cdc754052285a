"""Compile parsed sentence systems into quantum liar models.

Generalizes the double-liar construction: each sentence gets four basis
directions (latent true/false, measured true/false), each state of the
paradoxical reading orbit becomes one product basis vector, the step
operator permutes those vectors cyclically, and the Hamiltonian is the
scaled principal logarithm of the step.  With 4^n total dimensions the
model always clears the 2^n lower bound for an n-sentence paradox.
"""

from __future__ import annotations

import numpy as np

from .dsl import PARADOXICAL, ReadingOrbit, SentenceSystem, classify
from .linalg import DEFAULT_MAX_DIM, CapacityError, Operator, principal_log_hamiltonian
from .models import (
    HAMILTONIAN_SCALE,
    SLOT_FALSE,
    SLOT_LATENT_FALSE,
    SLOT_LATENT_TRUE,
    SLOT_TRUE,
    LiarModel,
    StateVector,
    cyclic_step_operator,
    product_basis_labels,
    truth_projectors,
)


def flat_index(slots: tuple[int, ...]) -> int:
    """Flatten per-sentence 1-based slots into a 1-based product-basis index.

    Mixed-radix with 4 slots per sentence; for two sentences this is the
    familiar 4(i-1)+j.
    """
    flat = 0
    for slot in slots:
        if not 1 <= slot <= 4:
            raise ValueError(f"slot {slot} out of range 1..4")
        flat = 4 * flat + (slot - 1)
    return flat + 1


def _upcoming_value(orbit: ReadingOrbit, position: int, sentence: int) -> bool:
    """Value ``sentence`` will carry when it is next the focus after ``position``."""
    length = orbit.length
    for ahead in range(1, length + 1):
        state = orbit.states[(position + ahead) % length]
        if state.focus == sentence:
            return state.value
    raise ValueError(f"sentence {sentence} never appears in orbit")


def orbit_basis_states(system: SentenceSystem, orbit: ReadingOrbit) -> tuple[int, ...]:
    """Flat basis index of each orbit state, in reading order.

    The focused sentence sits in its measured slot; every other sentence
    sits in the latent slot matching the value it acquires when next read.
    """
    out = []
    for position, state in enumerate(orbit.states):
        slots = []
        for sentence in range(1, system.n + 1):
            if sentence == state.focus:
                slots.append(SLOT_TRUE if state.value else SLOT_FALSE)
            else:
                upcoming = _upcoming_value(orbit, position, sentence)
                slots.append(SLOT_LATENT_TRUE if upcoming else SLOT_LATENT_FALSE)
        out.append(flat_index(tuple(slots)))
    return tuple(out)


def compile_system(system: SentenceSystem, max_dim: int = DEFAULT_MAX_DIM) -> LiarModel:
    """Build the full quantum model for a parsed sentence system.

    Paradoxical systems get the cyclic step operator over the orbit's basis
    states and a uniform superposition psi0 over them; consistent systems
    compile to identity dynamics with psi0 left unset (every basis state is
    already stationary, the caller picks one).
    """
    orbits = classify(system)
    n = system.n
    dim = 4**n
    if dim > max_dim:
        raise CapacityError(f"model dimension {dim} exceeds maximum {max_dim}")
    labels = product_basis_labels(n)
    projectors = truth_projectors(n)
    name = system.name or "system"

    paradoxical = [o for o in orbits if o.kind == PARADOXICAL]
    if not paradoxical:
        identity = Operator(np.eye(dim, dtype=np.complex128), role="unitary")
        return LiarModel(
            name=name,
            n_sentences=n,
            dim=dim,
            basis_labels=labels,
            psi0=None,
            projectors=projectors,
            u_step=identity,
            hamiltonian=principal_log_hamiltonian(identity, HAMILTONIAN_SCALE),
            system=system,
        )

    orbit = paradoxical[0]
    cycle_states = orbit_basis_states(system, orbit)
    amps = np.zeros(dim, dtype=np.complex128)
    amps[[s - 1 for s in cycle_states]] = 1.0 / np.sqrt(orbit.length)
    u_step = cyclic_step_operator(cycle_states, dim)
    return LiarModel(
        name=name,
        n_sentences=n,
        dim=dim,
        basis_labels=labels,
        psi0=StateVector(amps, labels),
        projectors=projectors,
        u_step=u_step,
        hamiltonian=principal_log_hamiltonian(u_step, HAMILTONIAN_SCALE),
        cycle_states=cycle_states,
        subspace_basis=tuple(sorted(cycle_states)),
        system=system,
        orbit=orbit,
    )


def model_summary(model: LiarModel) -> dict:
    """JSON-ready summary of a compiled model."""
    orbits = []
    if model.system is not None:
        orbits = [
            {"kind": o.kind, "length": o.length} for o in classify(model.system)
        ]
    return {
        "name": model.name,
        "n": model.n_sentences,
        "dim": model.dim,
        "kind": "paradoxical" if model.paradoxical else "consistent",
        "cycle_length": len(model.cycle_states),
        "cycle_states": list(model.cycle_states),
        "orbits": orbits,
    }
