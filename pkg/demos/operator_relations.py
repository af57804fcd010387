"""
Checking the Lie algebra relations on an exterior algebra
=========================================================

The operators h_alpha, L_c and Lambda_c act on the exterior algebra of H^1.
Everything is a sparse rational matrix, so the identities are checked
exactly.
"""

from motdec.descriptor import quaternion
from motdec.realization.algebras import build_realization
from motdec.realization.operators import build_operators, h_id_spectrum, markdown_report, verify

# A model of H_1 = D with D = (-1, 3)_Q and a Rosati-compatible form.
preset = build_realization(quaternion(2))
print(preset.name, "dim D =", preset.dim, "dim D^sym =", len(preset.sym_basis))

# h_1 acts on degree i by g - i.
ops = build_operators(preset)
print({i: [str(v) for v in vals] for i, vals in h_id_spectrum(ops).items()})

# The normalization of Lambda is fixed so that Lambda_1 L_1 is g on degree 0.
print("kappa =", ops.kappa)

# The full table: six relations, the trace pairing and the sl_2-triples.
print(markdown_report(verify(preset)))
