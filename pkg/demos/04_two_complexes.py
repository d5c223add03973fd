"""Nerve cochains versus Hochschild cochains of the incidence algebra.

The map phi reads a simplicial cochain as a relative Hochschild cochain
on the incidence algebra (one scalar per weak chain).  It matches every
piece of structure: insertions, braces, differential, dot, bracket.
The randomized verifier exercises exactly that, and the cohomology
dimensions agree across all three complexes.
"""

import random

from posetdeform.gsiso import phi, phi_inv, verify_morphism
from posetdeform.hochschild import (
    IncElem,
    RelHochschildCarrier,
    hh_dims,
    rel_eval,
)
from posetdeform.posets import chain_poset, diamond_poset
from posetdeform.simplicial import SimplicialCarrier, cohomology_dims

p = diamond_poset()
simp = SimplicialCarrier(p)
rel = RelHochschildCarrier(p)

# phi sends the constant 2-cochain to the algebra multiplication
m_rel = phi(simp.mult())
a = IncElem.basis(p.index("bot"), p.index("a"))
b = IncElem.basis(p.index("a"), p.index("top"))
bot_top = IncElem.basis(p.index("bot"), p.index("top"))
print("phi(m) multiplies:", rel_eval(m_rel, [a, b]) == bot_top)

# it is a bijection on cochains
x = simp.random_elem(2, random.Random(1))
print("round trip:", phi_inv(phi(x)) == x)

# the randomized verifier checks commutation with all derived operations
rep = verify_morphism(p, samples=10, seed=0)
print("verifier: checks=%d failed=%d" % (rep.checks, rep.failed))

# all three cochain complexes compute the same cohomology
for q in (chain_poset(2), chain_poset(3), p):
    print(
        "%-7s simplicial=%s relative=%s full=%s"
        % (
            q.name,
            cohomology_dims(q, 2),
            hh_dims(q, 2, "relative"),
            hh_dims(q, 2, "full"),
        )
    )
