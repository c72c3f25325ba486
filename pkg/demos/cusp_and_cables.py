"""
From a branch parametrization to a positive braid
==================================================

The cusp, a two-pair branch, and the numerical oracle that checks them.
"""

from curvebraids.braid import closure_invariants
from curvebraids.monodromy import PolyCurve, critical_radius, track_parametric, track_polynomial
from curvebraids.puiseux import BranchParam, cable_cascade, cascade_braid, g_sequence, milnor_number

# the cusp z = t^2, w = t^3
cusp = BranchParam(2, 3)
print(cable_cascade(cusp).pairs, cascade_braid(cable_cascade(cusp)), milnor_number(cusp))

# same curve as w^2 - z^3 = 0, tracked over |z| = 1/2
f = PolyCurve(((0, 2, 1), (3, 0, -1)))
print(track_polynomial(f, eps=0.5).word)

# two Puiseux pairs: z = t^4, w = t^6 + t^7
b = BranchParam(4, 6, {7: 1})
print("g-sequence", g_sequence(b))
c = cable_cascade(b)
word = cascade_braid(c)
print("cascade", c.pairs)
print(word)
print("mu", milnor_number(b))

# the oracle run must agree on the whole invariant battery
print("critical radius", critical_radius(b))
t = track_parametric(b)
print(closure_invariants(word).battery())
print(closure_invariants(t.word).battery())

# too big a circle sees the t^7 term first and gets a different knot
far = track_parametric(b, eps=16.0)
print(closure_invariants(far.word).battery(), far.warnings[0])
