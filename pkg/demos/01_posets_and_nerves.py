"""Build the bundled example posets and look at their chain bases.

Weak chains (entries may repeat) index the full cochain bases; strict
chains are the nondegenerate part and carry the same cohomology.
"""

from posetdeform.posets import (
    chain_poset,
    crown_poset,
    diamond_poset,
    sphere_poset,
)

for p in (chain_poset(3), diamond_poset(), crown_poset(), sphere_poset()):
    print("%-9s elements=%-3d intervals=%d" % (p.name, p.n, len(p.intervals())))
    weak = [len(p.chains(n)) for n in range(4)]
    strict = [len(p.chains(n, strict=True)) for n in range(4)]
    print("  weak chains   n=0..3:", weak)
    print("  strict chains n=0..3:", strict)

# the crown has no strict 2-chains at all: its nerve is a circle
cr4 = crown_poset()
print("\ncr4 strict 2-chains:", cr4.chains(2, strict=True))

# chains are tuples of element indices; labels are recovered on demand
d = diamond_poset()
top = d.chains(2, strict=True)
print("diamond strict 2-chains:", [tuple(d.chain_labels(c)) for c in top])
