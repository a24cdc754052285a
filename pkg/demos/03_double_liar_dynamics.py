#!/usr/bin/env python3
"""The double liar in C^4 ⊗ C^4: stationary until read, cyclic afterwards.

Each sentence gets four directions (latent true/false, measured
true/false).  The unmeasured state psi0 spreads evenly over the four
reading-cycle basis states and is an exact null vector of the Hamiltonian,
so nothing happens until someone reads a sentence.  One hypothesis
collapses the state onto the cycle, and Schrödinger evolution then walks
it: sentence 1 true, sentence 2 false, sentence 1 false, sentence 2 true,
forever.
"""

import numpy as np

from liarsim import (
    STEP_TIME,
    born_weights,
    double_liar_model,
    evolution_matrix,
    evolve_state,
    hypothesize,
    subspace_block,
)

model = double_liar_model()
print("cycle basis states (flat indices):", model.cycle_states)
print("step operator on the cycle subspace:")
print(subspace_block(model.u_step, model.subspace_basis).real.astype(int))

print("\nH on the cycle subspace:")
print(np.round(subspace_block(model.hamiltonian, model.subspace_basis), 6))
print("H psi0 =", np.round(np.linalg.norm(model.hamiltonian.matrix @ model.psi0.amplitudes), 15))

# Unmeasured: both sentences are half latent, quarter true, quarter false,
# and evolution changes nothing.
for label, state in [("t=0", model.psi0), ("t=2.4", evolve_state(model.psi0, model, 2.4))]:
    w = born_weights(state, model, 1)
    print(f"unmeasured {label}: sentence 1 weights {({k: round(v, 3) for k, v in w.items()})}")

# Read sentence 1, hypothesize it true: now the paradox is live.
state = hypothesize(model.psi0, model, 1, True).post_state
print("\nreading steps of length pi/2 after hypothesizing sentence 1 true:")
for step in range(5):
    w1, w2 = born_weights(state, model, 1), born_weights(state, model, 2)
    verdicts = []
    for k, w in ((1, w1), (2, w2)):
        if w["true"] > 0.99:
            verdicts.append(f"s{k}=true")
        elif w["false"] > 0.99:
            verdicts.append(f"s{k}=false")
        else:
            verdicts.append(f"s{k}=latent")
    print(f"  t = {step}*pi/2: {', '.join(verdicts)}")
    state = evolve_state(state, model, STEP_TIME)

# The closed-form entry (1,1) of the subspace evolution matrix.
t = 0.9
derived = subspace_block(evolution_matrix(model.hamiltonian, t), model.subspace_basis)[0, 0]
closed = (1 + np.exp(-1j * t) + np.exp(1j * t) + np.exp(2j * t)) / 4
print(f"\nU_sub({t})[1,1] derived {derived:.6f} vs closed form {closed:.6f}")
