"""Exact cochain operads on finite poset nerves and their deformations.

The package is organized bottom-up:

* ``scalars``    exact rationals, truncated power series, Witt units
* ``posets``     finite posets, chain and interval enumeration
* ``linalg``     sparse exact Gaussian elimination (rank, kernel, solve)
* ``opcore``     carrier-generic operad operations and all Koszul signs
* ``simplicial`` cochains on the nerve, nerve cohomology
* ``hochschild`` incidence algebra, relative and full Hochschild cochains
* ``gsiso``      the coefficient-copy isomorphism between the two operads
* ``deform``     Maurer-Cartan elements, Witt cocycles, gauge, moduli
* ``suites``     randomized exact verification suites for all the axioms
* ``cli``        command line interface over the whole stack

Everything is computed exactly over Q; there is no floating point in the
package at all.
"""

__version__ = "0.1.0"

from .posets import Poset, chain_poset, crown_poset, diamond_poset, sphere_poset
from .simplicial import SimpCochain, SimplicialCarrier, cohomology_dims
from .hochschild import (
    FullCochain,
    FullHochschildCarrier,
    IncElem,
    RelCochain,
    RelHochschildCarrier,
    hh_dims,
)
from .opcore import brace, bracket, circle, differential, dot, gamma
from .gsiso import phi, phi_inv, verify_morphism
from .deform import MCElement, WittCochain, gauge_equivalent, mc_check, moduli, to_witt
from .scalars import TruncSeries, WittElem

__all__ = [
    "Poset",
    "chain_poset",
    "crown_poset",
    "diamond_poset",
    "sphere_poset",
    "SimpCochain",
    "SimplicialCarrier",
    "cohomology_dims",
    "IncElem",
    "RelCochain",
    "RelHochschildCarrier",
    "FullCochain",
    "FullHochschildCarrier",
    "hh_dims",
    "gamma",
    "brace",
    "circle",
    "dot",
    "differential",
    "bracket",
    "phi",
    "phi_inv",
    "verify_morphism",
    "MCElement",
    "WittCochain",
    "mc_check",
    "to_witt",
    "gauge_equivalent",
    "moduli",
    "TruncSeries",
    "WittElem",
    "__version__",
]
