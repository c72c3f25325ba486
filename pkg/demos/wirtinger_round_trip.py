"""
Wirtinger groups as braided surfaces
====================================
"""

from curvebraids.formats import format_brep, parse_presentation
from curvebraids.knotgroup import (
    abelianization,
    bidisk_presentation,
    count_homs_to_symmetric,
    tietze_simplify,
    wirtinger_to_bands,
)

trefoil = parse_presentation("gens: 2; rel: x1 x2 x1 -x2 -x1 -x2")
brep = wirtinger_to_bands(trefoil)
print(format_brep(brep))

# the group of the bands, simplified, against the original
back = tietze_simplify(bidisk_presentation(brep))
print(back)
print(abelianization(trefoil), abelianization(back))
for k in (3, 4):
    print(k, count_homs_to_symmetric(trefoil, k), count_homs_to_symmetric(back, k))
