#!/usr/bin/env python3
"""A single sentence as a two-level system: superposition and Born rule.

Before anyone reads it, a sentence is neither true nor false; it sits in a
weighted superposition of the two truth states.  Reading it applies a
projector, and the squared weight gives the probability of each verdict.
"""

import numpy as np

from liarsim import single_liar_state

def show(labels, amplitudes):
    return {label: complex(np.round(amp, 6)) for label, amp in zip(labels, amplitudes)}


# An undecided sentence: equal weight on true and false.
psi = single_liar_state(1 / np.sqrt(2), 1 / np.sqrt(2))
print("state:", show(psi.labels, psi.amplitudes))

p_true = np.diag([1.0, 0.0])
p_false = np.diag([0.0, 1.0])

prob_true = np.sum(np.abs(p_true @ psi.amplitudes) ** 2)
prob_false = np.sum(np.abs(p_false @ psi.amplitudes) ** 2)
print(f"probability of reading it true:  {prob_true:.3f}")
print(f"probability of reading it false: {prob_false:.3f}")

# Collapse: after a true-reading the sentence IS true, and stays true.
collapsed = p_true @ psi.amplitudes
collapsed = collapsed / np.linalg.norm(collapsed)
print("after a true-reading:", show(psi.labels, collapsed))
print("re-reading true probability:", float(np.sum(np.abs(p_true @ collapsed) ** 2)))

# A biased sentence: mostly-true with a complex phase on the false part.
biased = single_liar_state(0.8, 0.6j)
print("\nbiased state weights:",
      {l: round(float(abs(a) ** 2), 3) for l, a in zip(biased.labels, biased.amplitudes)})
