"""
The cuspidal quartic
====================

The factorization as printed, and the one-sign correction that makes it a
factorization of the full twist.
"""

import warnings

from curvebraids.artin import braids_equal
from curvebraids.braid import delta_squared
from curvebraids.formats import parse_brep
from curvebraids.knotgroup import abelianization, coset_enumerate, count_homs_to_symmetric, projective_presentation

literal = parse_brep("B4: (3^3) (3 -2 : 1) (1^3) (2) (1^3) (3 2 : 1)")
fixed = parse_brep("B4: (3^3) (-3 -2 : 1) (1^3) (2) (1^3) (3 2 : 1)")

for brep in (literal, fixed):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        p = projective_presentation(brep)
    print(braids_equal(brep.braid(), delta_squared(4)), coset_enumerate(p), abelianization(p))

# order 12 but abelianization Z/4, so the group is not abelian;
# 10 homomorphisms to S3, more than the 4 that factor through Z/4
p = projective_presentation(fixed)
print(count_homs_to_symmetric(p, 3))
