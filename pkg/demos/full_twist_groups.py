"""
Factorizations of the full twist and their groups
==================================================
"""

import warnings

from curvebraids.artin import braids_equal
from curvebraids.braid import Band, BandRepresentation, delta_squared
from curvebraids.fixtures import load_fixtures
from curvebraids.knotgroup import abelianization, coset_enumerate, projective_presentation

# two words for the full twist, compared through the Artin action
for n in range(2, 7):
    print(n, braids_equal(delta_squared(n), delta_squared(n, "pure-product")))

# the full twist as a product of standard generators: a cyclic group
n = 5
brep = BandRepresentation(n, tuple(Band(n, (), a) for a in delta_squared(n).letters))
p = projective_presentation(brep)
print(abelianization(p), coset_enumerate(p))

# the pure generators A_pq as bands: free abelian of rank n-1
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    fs = load_fixtures()
p = projective_presentation(fs.bands["example2-n4"].brep)
print(abelianization(p))
print(coset_enumerate(p.with_relators([(i, i) for i in range(1, 5)])))
