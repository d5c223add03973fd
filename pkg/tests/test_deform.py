"""Formal deformations: Maurer-Cartan, Witt cocycles, gauge, moduli."""

import random
from fractions import Fraction

import pytest

from posetdeform.deform import (
    MCElement,
    NotMC,
    UnsupportedDegree,
    WittCochain,
    associativity_witness,
    deformation_product,
    from_witt,
    gauge_equivalent,
    is_witt_cocycle,
    mc_check,
    moduli,
    to_witt,
    witt_coboundary,
    witt_exp,
    witt_log_layers,
)
from posetdeform.opcore import SignFlip, differential
from posetdeform.scalars import WittElem
from posetdeform.simplicial import SimpCochain, SimplicialCarrier


def face_sum(p, x):
    out = {}
    for c in p.chains(x.degree + 1):
        acc = Fraction(0)
        for i in range(x.degree + 2):
            acc += (-1) ** i * x.value(c[:i] + c[i + 1 :])
        if acc != 0:
            out[c] = acc
    return SimpCochain(x.degree + 1, out)


def closed_2_rep(p):
    """Layer-1 part of the one-layer moduli basis: a 2-cocycle class rep."""
    dim, basis = moduli(p, 1)
    assert dim >= 1
    return basis[0].term(1)


def crown_non_cocycle(cr4):
    # cr4 has no strict 2-chains, so any nonzero defect must come from a
    # degenerate-chain value
    a, c = cr4.index("a"), cr4.index("c")
    return MCElement(1, {1: SimpCochain(2, {(a, a, c): Fraction(1)})})


def test_mc_element_validation():
    with pytest.raises(ValueError):
        MCElement(0, {})
    with pytest.raises(ValueError):
        MCElement(1, {2: SimpCochain(2, {})})
    with pytest.raises(ValueError):
        MCElement(1, {1: SimpCochain(1, {})})
    e = MCElement(2, {1: SimpCochain(2, {})})
    assert e.is_zero() and e.term(1).is_zero()


def test_mc_element_round_trip(sphere):
    z = closed_2_rep(sphere)
    e = MCElement(2, {1: z, 2: z.scale(Fraction(3))})
    d = e.to_dict(sphere)
    assert MCElement.from_dict(sphere, d) == e


def test_zero_element_is_mc(diamond):
    ok, witness = mc_check(diamond, MCElement.zero(2))
    assert ok and witness is None


def test_coboundary_is_mc(diamond):
    psi = SimplicialCarrier(diamond).random_elem(1, random.Random("mc:cob"))
    e = MCElement(1, {1: face_sum(diamond, psi)})
    assert mc_check(diamond, e)[0]


def test_cocycle_rep_is_mc(sphere):
    e = MCElement.single(1, 1, closed_2_rep(sphere))
    assert mc_check(sphere, e)[0]
    assert is_witt_cocycle(sphere, to_witt(e))


def test_degenerate_supported_non_cocycle(cr4):
    e = crown_non_cocycle(cr4)
    ok, witness = mc_check(cr4, e)
    assert not ok
    layer, chain = witness
    assert layer == 1
    assert list(chain) == ["a", "a", "a", "c"]
    assert not is_witt_cocycle(cr4, to_witt(e))


def test_witt_round_trip(sphere):
    car = SimplicialCarrier(sphere)
    rng = random.Random("witt:rt")
    for order in (1, 2, 3):
        e = MCElement(
            order, {n: car.random_elem(2, rng) for n in range(1, order + 1)}
        )
        w = to_witt(e)
        assert w.degree == 2 and w.order == order
        assert from_witt(w) == e


def test_witt_cochain_group_ops(diamond):
    car = SimplicialCarrier(diamond)
    rng = random.Random("witt:grp")
    e1 = MCElement(2, {1: car.random_elem(2, rng), 2: car.random_elem(2, rng)})
    e2 = MCElement(2, {1: car.random_elem(2, rng)})
    a, b = to_witt(e1), to_witt(e2)
    assert (a * b) * b.inverse() == a
    assert (a * a.inverse()).is_one()


def test_from_witt_needs_degree_two():
    with pytest.raises(UnsupportedDegree):
        from_witt(WittCochain(1, 1, {}))


def test_witt_coboundary_degree_window(diamond):
    with pytest.raises(UnsupportedDegree):
        witt_coboundary(diamond, WittCochain(3, 1, {}))
    one = witt_coboundary(diamond, WittCochain(1, 2, {}))
    assert one.is_one()


def test_coboundary_of_coboundary_is_trivial(diamond):
    car = SimplicialCarrier(diamond)
    rng = random.Random("witt:dd")
    layers = {1: car.random_elem(1, rng), 2: car.random_elem(1, rng)}
    w = witt_exp(diamond, 1, 2, layers)
    assert is_witt_cocycle(diamond, witt_coboundary(diamond, w))


def test_log_transport(diamond):
    """The multiplicative coboundary of a pointwise exponential is the
    pointwise exponential of the additive coboundaries."""
    car = SimplicialCarrier(diamond)
    rng = random.Random("witt:log")
    order = 3
    layers = {n: car.random_elem(1, rng) for n in range(1, order + 1)}
    lhs = witt_coboundary(diamond, witt_exp(diamond, 1, order, layers))
    rhs = witt_exp(
        diamond, 2, order, {n: face_sum(diamond, c) for n, c in layers.items()}
    )
    assert lhs == rhs


def test_exp_log_layers_round_trip(diamond):
    car = SimplicialCarrier(diamond)
    rng = random.Random("witt:el")
    layers = {1: car.random_elem(2, rng), 2: car.random_elem(2, rng)}
    w = witt_exp(diamond, 2, 2, layers)
    back = witt_log_layers(w)
    assert back[1] == layers[1] and back[2] == layers[2]


def test_mc_agrees_with_witt_cocycle_condition(diamond, cr4):
    """Sampled form of the central equivalence."""
    rng = random.Random("mc:equiv")
    seen = {True: 0, False: 0}
    for p in (diamond, cr4):
        car = SimplicialCarrier(p)
        for _ in range(15):
            order = rng.randint(1, 2)
            terms = {}
            for n in range(1, order + 1):
                if rng.random() < 0.5:
                    terms[n] = face_sum(p, car.random_elem(1, rng))
                else:
                    terms[n] = car.random_elem(2, rng)
            e = MCElement(order, terms)
            ok = mc_check(p, e)[0]
            assert ok == is_witt_cocycle(p, to_witt(e))
            seen[ok] += 1
    assert seen[True] >= 1 and seen[False] >= 1


def test_gauge_reflexive(sphere):
    e = MCElement.single(1, 1, closed_2_rep(sphere))
    w = gauge_equivalent(sphere, e, e)
    assert w is not None
    assert witt_coboundary(sphere, w) * to_witt(e) == to_witt(e)


def test_gauge_distinguishes_scalings(sphere):
    z = closed_2_rep(sphere)
    e1 = MCElement.single(1, 1, z)
    e2 = MCElement.single(1, 1, z.scale(Fraction(2)))
    assert gauge_equivalent(sphere, e1, e2) is None


def test_gauge_absorbs_coboundaries(sphere):
    z = closed_2_rep(sphere)
    psi = SimplicialCarrier(sphere).random_elem(1, random.Random("gauge:cob"))
    e1 = MCElement.single(1, 1, z)
    e2 = MCElement.single(1, 1, z.add(face_sum(sphere, psi)))
    w = gauge_equivalent(sphere, e1, e2)
    assert w is not None
    assert witt_coboundary(sphere, w) * to_witt(e2) == to_witt(e1)


def twist(p, e, layers):
    """Gauge e by the exponential of the given 1-cochain layers."""
    w = witt_exp(p, 1, e.order, layers)
    return from_witt(witt_coboundary(p, w).inverse() * to_witt(e))


def test_gauge_symmetric_and_transitive(sphere):
    z = closed_2_rep(sphere)
    car = SimplicialCarrier(sphere)
    rng = random.Random("gauge:st")
    e1 = MCElement(2, {1: z})
    e2 = twist(sphere, e1, {1: car.random_elem(1, rng)})
    e3 = twist(sphere, e2, {2: car.random_elem(1, rng)})
    assert mc_check(sphere, e2)[0] and mc_check(sphere, e3)[0]
    w12 = gauge_equivalent(sphere, e1, e2)
    w21 = gauge_equivalent(sphere, e2, e1)
    w23 = gauge_equivalent(sphere, e2, e3)
    assert w12 is not None and w21 is not None and w23 is not None
    assert witt_coboundary(sphere, w21) * to_witt(e1) == to_witt(e2)
    # composing the two witnesses witnesses the composite relation
    w13 = w12 * w23
    assert witt_coboundary(sphere, w13) * to_witt(e3) == to_witt(e1)
    assert gauge_equivalent(sphere, e1, e3) is not None


def test_gauge_preconditions(sphere, cr4):
    z = closed_2_rep(sphere)
    e1 = MCElement.single(1, 1, z)
    with pytest.raises(ValueError):
        gauge_equivalent(sphere, e1, MCElement.zero(2))
    bad = crown_non_cocycle(cr4)
    with pytest.raises(NotMC):
        gauge_equivalent(cr4, bad, MCElement.zero(1))


def test_moduli_dimensions(cr4, diamond, sphere):
    for order in (1, 2):
        dim, basis = moduli(cr4, order)
        assert dim == 0 and basis == []
        dim, basis = moduli(diamond, order)
        assert dim == 0 and basis == []
    for order in (1, 2, 3):
        dim, basis = moduli(sphere, order)
        assert dim == order
        assert len(basis) == dim
        for e in basis:
            assert e.order == order
            assert mc_check(sphere, e)[0]


def test_moduli_basis_combinations_are_inequivalent(sphere):
    z = closed_2_rep(sphere)
    combos = {}
    for a in (0, 1):
        for b in (0, 1):
            layers = {}
            if a:
                layers[1] = z
            if b:
                layers[2] = z
            combos[(a, b)] = from_witt(witt_exp(sphere, 2, 2, layers))
    for k1, e1 in combos.items():
        assert mc_check(sphere, e1)[0]
        for k2, e2 in combos.items():
            w = gauge_equivalent(sphere, e1, e2)
            if k1 == k2:
                assert w is not None
            else:
                assert w is None


def test_deformed_product_series(sphere):
    z = closed_2_rep(sphere)
    e = MCElement.single(2, 1, z)
    F = deformation_product(sphere, e)
    assert F.degree == 2 and F.ring.order == 2
    ch = sphere.chains(2)[0]
    series = F.value(ch)
    assert series.coeffs[0] == 1 and series.coeffs[1] == z.value(ch)


def test_associativity_witness_matches_mc(sphere, cr4):
    e = MCElement.single(1, 1, closed_2_rep(sphere))
    assert associativity_witness(sphere, e) is None
    bad = crown_non_cocycle(cr4)
    w = associativity_witness(cr4, bad)
    assert w is not None
    assert mc_check(cr4, bad)[1][1] == w


def test_doctored_carrier_breaks_the_equivalence(diamond):
    """mc_check with a sign-flipped carrier must disagree with the Witt
    side somewhere."""
    car = SimplicialCarrier(diamond)
    bad = SignFlip(car)
    rng = random.Random("mc:flip")
    disagreements = 0
    for _ in range(30):
        terms = {1: face_sum(diamond, car.random_elem(1, rng))}
        if rng.random() < 0.5:
            terms[2] = car.random_elem(2, rng)
            e = MCElement(2, terms)
        else:
            e = MCElement(1, terms)
        if mc_check(diamond, e, carrier=bad)[0] != is_witt_cocycle(
            diamond, to_witt(e)
        ):
            disagreements += 1
    assert disagreements >= 1
