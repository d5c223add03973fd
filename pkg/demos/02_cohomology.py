"""Simplicial cohomology of the nerve, in both chain bases.

Posets with a maximum are contractible; the crown cr4 is a circle and
the 14-element sphere poset is a 2-sphere.  The weak (all chains) and
strict (nondegenerate chains) complexes give the same answers.
"""

from posetdeform.linalg import rank
from posetdeform.posets import chain_poset, crown_poset, diamond_poset, sphere_poset
from posetdeform.simplicial import coboundary_matrix, cohomology_dims

for p in (chain_poset(3), diamond_poset(), crown_poset(), sphere_poset()):
    strict = cohomology_dims(p, 2, strict=True)
    weak = cohomology_dims(p, 2, strict=False)
    assert strict == weak
    print("%-9s betti (degrees 0..2): %s" % (p.name, strict))

# the sphere numbers come from two exact ranks
s = sphere_poset()
d0 = coboundary_matrix(s, 0, strict=True)
d1 = coboundary_matrix(s, 1, strict=True)
print("\nsphere14 strict complex: C0=14, C1=36, C2=24")
print("rank d0 =", rank(d0), " rank d1 =", rank(d1))
print("b2 = 24 - rank d1 =", 24 - rank(d1))
