#!/usr/bin/env python3
"""Check every derived double-liar matrix against its published version.

The step operator U_D, the closed-form evolution grid U_sub(t), and most
of the Hamiltonian submatrix reproduce the published values to floating
precision.  Two published items are known errata: the lower-right 2x2
block of H_sub (sign flipped) and one worked expansion term (typo in the
exponents).  The report flags those as documented errata after
cross-checking the derived values against two independent oracles,
instead of silently "fixing" the reference data.
"""

from liarsim import verify_reference_matrices

report = verify_reference_matrices()
print(report.to_text())
print()
print("all fixtures accounted for:", report.ok)
