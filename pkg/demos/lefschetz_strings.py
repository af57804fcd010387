"""
Counting Lefschetz strings three ways
=====================================

For End^0 = Q the Lie algebra is sl_2 and the components are the usual
Lefschetz strings.  Their multiplicities can be read off from characters,
from Betti numbers, or from the kernel of Lambda.
"""

from math import comb

from motdec.descriptor import classical
from motdec.realization.algebras import build_realization
from motdec.realization.multiplicities import graded_multiplicities
from motdec.realization.operators import build_operators

g = 3

# 1. Peeling the graded character.
print(graded_multiplicities(classical(g)).psi_mult)

# 2. Differences of binomial coefficients.
print({k: comb(2 * g, g - k) - (comb(2 * g, g - k - 2) if k + 2 <= g else 0) for k in range(g + 1)})

# 3. Primitive classes: the kernel of Lambda in degrees i <= g.
preset = build_realization(classical(g))
lam = build_operators(preset).Lam(preset.unit(0)).to_dense().to_Matrix()
masks = range(1 << (2 * g))
for i in range(g + 1):
    cols = [m for m in masks if bin(m).count("1") == i]
    print(g - i, len(cols) - lam.extract(list(masks), cols).rank())
