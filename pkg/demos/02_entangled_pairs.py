#!/usr/bin/env python3
"""Coupled sentence pairs as entangled two-level systems.

Two sentences that refer to each other consistently need no paradox
machinery: the "both deny each other" pair is the antisymmetric singlet
state (opposite verdicts guaranteed), the "both confirm" pair is the
aligned state (equal verdicts guaranteed).  Measuring one sentence fixes
the other instantly.
"""

import numpy as np

from liarsim import born_weights, case_b_aligned, case_c_singlet, hypothesize, pair_model

for name, state in [("singlet (mutual denial)", case_c_singlet()),
                    ("aligned (mutual confirmation)", case_b_aligned())]:
    print(f"== {name}")
    model = pair_model(state, name)
    print("amplitudes:", {l: complex(round(a.real, 4), round(a.imag, 4))
                          for l, a in zip(state.labels, state.amplitudes) if abs(a) > 0})

    # Before any reading, each sentence alone is a fair coin.
    for sentence in (1, 2):
        w = born_weights(state, model, sentence)
        print(f"  sentence {sentence}: p_true={w['true']:.2f} p_false={w['false']:.2f}")

    # Hypothesize sentence 1 true, then look at sentence 2.
    outcome = hypothesize(state, model, 1, True)
    w2 = born_weights(outcome.post_state, model, 2)
    print(f"  after reading sentence 1 as true (weight {outcome.probability:.2f}):")
    print(f"    sentence 2 is true with p={w2['true']:.2f}, false with p={w2['false']:.2f}")
    print()
