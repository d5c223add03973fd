"""The isomorphism between simplicial cochains and relative Hochschild
cochains of a poset.

Both operads are spanned by weak chains, and the map phi is the copy of
coefficients along that common indexing: a simplicial n-cochain with
value v on the chain (i0, ..., in) goes to the relative cochain sending
(E[i0,i1], ..., E[i_{n-1},in]) to v * E[i0,in].  What makes this worth
verifying is that the two sides compute composition in unrelated ways
(face restriction of chains vs evaluation in the incidence algebra), so
phi commuting with every operation is a genuine theorem about the poset,
checked here on random cochains.

verify_morphism drives the checks over a grid of degree pairs with a
deterministically seeded generator, and can deliberately break one slot
of the relative composition (mutate=True) to demonstrate that the suite
has teeth.
"""

from __future__ import annotations

import random

from .hochschild import RelCochain, RelHochschildCarrier, RingMismatch
from .opcore import (
    SignFlip,
    brace_or_zero,
    bracket,
    differential,
    dot,
    gamma,
)
from .scalars import RAT
from .simplicial import SimpCochain, SimplicialCarrier
from .suites import SuiteReport, agree


def phi(x, ring=RAT):
    """Simplicial cochain -> relative Hochschild cochain, same keys."""
    if ring == RAT:
        return RelCochain(x.degree, dict(x.values))
    one = ring.one
    return RelCochain(x.degree, {c: one * v for c, v in x.values.items()}, ring=ring)


def phi_inv(f):
    """Relative Hochschild cochain -> simplicial cochain, same keys."""
    if f.ring != RAT:
        raise RingMismatch("only rational cochains map back to simplicial ones")
    return SimpCochain(f.degree, dict(f.coeffs))


def verify_morphism(poset, samples=25, seed=0, max_degree=3, mutate=False):
    """Check that phi intertwines every operadic structure map.

    Runs `samples` random trials for each degree pair (p, q) with
    0 <= p, q <= max_degree, comparing phi(op(x, y)) against
    op(phi(x), phi(y)) for insertion, full composition, the
    differential, the product, the bracket, and one- and two-argument
    braces.  mutate=True flips a sign in the relative carrier's slot-2
    insertion, which a sound suite must flag.
    """
    sim = SimplicialCarrier(poset)
    rel = RelHochschildCarrier(poset)
    if mutate:
        rel = SignFlip(rel)
    rep = SuiteReport(
        suite="iso", poset=poset.name, samples=samples, seed=seed
    )

    rep.check(
        "phi(identity)",
        (1,),
        agree(rel, phi(sim.identity()), rel.identity()),
        lambda: rel.diff_witness(phi(sim.identity()), rel.identity()),
    )
    rep.check(
        "phi(mult)",
        (2,),
        agree(rel, phi(sim.mult()), rel.mult()),
        lambda: rel.diff_witness(phi(sim.mult()), rel.mult()),
    )

    for p in range(max_degree + 1):
        for q in range(max_degree + 1):
            rng = random.Random("%s:iso:%d:%d" % (seed, p, q))
            for _ in range(samples):
                x = sim.random_elem(p, rng)
                y = sim.random_elem(q, rng)
                fx = phi(x)
                fy = phi(y)

                for j in range(1, p + 1):
                    _cmp(
                        rep, rel,
                        phi(sim.compose_at(x, j, y)),
                        rel.compose_at(fx, j, fy),
                        "compose_at[%d]" % j, (p, q),
                    )

                if 1 <= p <= 2:
                    ys = [y] + [sim.random_elem(q, rng) for _ in range(p - 1)]
                    _cmp(
                        rep, rel,
                        phi(gamma(sim, x, ys)),
                        gamma(rel, fx, [phi(z) for z in ys]),
                        "gamma", (p, q),
                    )

                _cmp(rep, rel, phi(differential(sim, x)),
                     differential(rel, fx), "differential", (p,))
                _cmp(rep, rel, phi(dot(sim, x, y)),
                     dot(rel, fx, fy), "dot", (p, q))
                _cmp(rep, rel, phi(bracket(sim, x, y)),
                     bracket(rel, fx, fy), "bracket", (p, q))
                _cmp(rep, rel, phi(brace_or_zero(sim, x, [y])),
                     brace_or_zero(rel, fx, [fy]), "brace1", (p, q))

                r = rng.randint(0, max_degree)
                z = sim.random_elem(r, rng)
                _cmp(rep, rel, phi(brace_or_zero(sim, x, [y, z])),
                     brace_or_zero(rel, fx, [fy, phi(z)]),
                     "brace2", (p, q, r))
    return rep


def _cmp(rep, car, lhs, rhs, check, degrees):
    ok = agree(car, lhs, rhs)
    rep.check(check, degrees, ok, lambda: _witness(car, lhs, rhs))


def _witness(car, lhs, rhs):
    if car.arity(lhs) != car.arity(rhs):
        return "arity %d vs %d" % (car.arity(lhs), car.arity(rhs))
    return car.diff_witness(lhs, rhs)
