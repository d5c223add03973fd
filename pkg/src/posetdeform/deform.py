"""Formal deformations of the incidence product, truncated at a fixed
order N.

An MCElement packages the higher terms omega_1, ..., omega_N (each a
simplicial 2-cochain) of a candidate deformed product
m + omega_1*lam + ... + omega_N*lam^N.  mc_check tests the layerwise
Maurer-Cartan equation  d omega_n + sum_{p+q=n} omega_p o omega_q = 0
with the shifted differential and circle product from opcore.

The same data reads as a single cochain valued in the truncated Witt
group W_N = 1 + lam*k[lam]/(lam^{N+1}): pointwise series
1 + sum omega_n(chain) lam^n.  Under that reading the Maurer-Cartan
equation becomes the multiplicative cocycle condition, coboundaries
implement gauge equivalence, and log/exp turn every question into N
independent linear problems over the rationals.  That is how
gauge_equivalent and moduli are computed; mc_check stays on the DGLA
side precisely so the equivalence of the two roads is testable.
"""

from __future__ import annotations

from fractions import Fraction

from .hochschild import IncElem, RelCochain, RelHochschildCarrier, rel_eval
from .linalg import SparseMat, rank, rank_kernel, solve_in_image
from .opcore import circle, differential
from .posets import Poset
from .scalars import F0, F1, SeriesRing, TruncSeries, WittElem
from .simplicial import SimpCochain, SimplicialCarrier, coboundary_matrix


class NotMC(ValueError):
    """An operation requiring Maurer-Cartan inputs got a non-MC element."""


class UnsupportedDegree(ValueError):
    """Witt coboundary is only defined in degrees 1 and 2."""


class MCElement:
    """Higher terms of a formal deformation: terms[n] is the lam^n
    coefficient, a simplicial 2-cochain, for 1 <= n <= order."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        tv = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for n, c in items:
            n = int(n)
            if not 1 <= n <= order:
                raise ValueError("term index %d outside 1..%d" % (n, order))
            if c.degree != 2:
                raise ValueError("term %d has degree %d, expected 2" % (n, c.degree))
            if not c.is_zero():
                tv[n] = c
        self.terms = tv

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def single(cls, order, n, cochain):
        return cls(order, {n: cochain})

    def term(self, n):
        got = self.terms.get(n)
        if got is None:
            return SimpCochain(2)
        return got

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MCElement)
            and self.order == other.order
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return "MCElement(order=%d, layers=%s)" % (self.order, sorted(self.terms))

    def to_dict(self, poset):
        return {
            "order": self.order,
            "terms": {str(n): c.to_dict(poset) for n, c in sorted(self.terms.items())},
        }

    @classmethod
    def from_dict(cls, poset, d):
        terms = {
            int(k): SimpCochain.from_dict(poset, cd)
            for k, cd in d.get("terms", {}).items()
        }
        return cls(d["order"], terms)


def mc_check(p, e, carrier=None):
    """Layerwise Maurer-Cartan test.

    Returns (True, None) or (False, (n, chain-labels)) with the first
    layer and weak 3-chain where the defect is nonzero.  carrier
    defaults to the simplicial one; passing a doctored carrier is how
    the sensitivity tests poke this harness.
    """
    car = carrier if carrier is not None else SimplicialCarrier(p)
    for n in range(1, e.order + 1):
        defect = differential(car, e.term(n))
        for a in range(1, n):
            quad = circle(car, e.term(a), e.term(n - a))
            if not quad.is_zero():
                defect = car.add(defect, quad)
        if not defect.is_zero():
            for ch in p.chains(3):
                v = defect.value(ch)
                if v != 0:
                    return False, (n, tuple(p.chain_labels(ch)))
            # a nonzero defect must show on some weak 3-chain
            raise AssertionError("nonzero defect without witness chain")
    return True, None


class WittCochain:
    """Cochain valued in the truncated Witt group: one multiplicative
    series per weak chain, defaulting to 1."""

    __slots__ = ("degree", "order", "values")

    def __init__(self, degree, order, values=()):
        self.degree = degree
        self.order = order
        one = WittElem.one(order)
        out = {}
        items = values.items() if isinstance(values, dict) else values
        for ch, w in items:
            if len(ch) != degree + 1:
                raise ValueError(
                    "chain %r has %d entries, expected %d" % (ch, len(ch), degree + 1)
                )
            if w.order != order:
                raise ValueError("order mismatch in Witt values")
            if w != one:
                out[tuple(ch)] = w
        self.values = out

    def value(self, chain):
        got = self.values.get(chain)
        if got is None:
            return WittElem.one(self.order)
        return got

    def is_one(self):
        return not self.values

    def mul(self, other):
        if self.degree != other.degree or self.order != other.order:
            raise ValueError("degree/order mismatch in Witt product")
        out = dict(self.values)
        one = WittElem.one(self.order)
        for ch, w in other.values.items():
            nw = out.get(ch, one) * w
            if nw == one:
                out.pop(ch, None)
            else:
                out[ch] = nw
        c = WittCochain.__new__(WittCochain)
        c.degree = self.degree
        c.order = self.order
        c.values = out
        return c

    __mul__ = mul

    def inverse(self):
        c = WittCochain.__new__(WittCochain)
        c.degree = self.degree
        c.order = self.order
        c.values = {ch: w.inverse() for ch, w in self.values.items()}
        return c

    def __eq__(self, other):
        return (
            isinstance(other, WittCochain)
            and self.degree == other.degree
            and self.order == other.order
            and self.values == other.values
        )

    __hash__ = None

    def __repr__(self):
        return "WittCochain(deg=%d, order=%d, %d nontrivial)" % (
            self.degree,
            self.order,
            len(self.values),
        )

    def to_dict(self, poset):
        entries = []
        for ch, w in sorted(self.values.items()):
            entries.append(
                {
                    "chain": list(poset.chain_labels(ch)),
                    "series": w.value.to_strings(),
                }
            )
        return {"degree": self.degree, "order": self.order, "entries": entries}


def to_witt(e):
    """MCElement -> degree-2 Witt cochain, pointwise 1 + sum omega_n lam^n."""
    n = e.order
    coeffs = {}
    for k, c in e.terms.items():
        for ch, v in c.values.items():
            coeffs.setdefault(ch, [F1] + [F0] * n)[k] = v
    vals = {ch: WittElem(TruncSeries(n, cs)) for ch, cs in coeffs.items()}
    return WittCochain(2, n, vals)


def from_witt(w):
    """Inverse of to_witt: read the lam-coefficients back off."""
    if w.degree != 2:
        raise UnsupportedDegree("only degree-2 Witt cochains encode deformations")
    terms = {n: {} for n in range(1, w.order + 1)}
    for ch, elem in w.values.items():
        for n in range(1, w.order + 1):
            v = elem.value.coeffs[n]
            if v != 0:
                terms[n][ch] = v
    return MCElement(w.order, {n: SimpCochain(2, tv) for n, tv in terms.items() if tv})


def _face(chain, i):
    return chain[:i] + chain[i + 1 :]


def witt_coboundary(p, c):
    """Multiplicative coboundary: alternating face product.

    Degree 1 -> 2: (d0 c)(d1 c)^-1 (d2 c).
    Degree 2 -> 3: (d0 c)(d1 c)^-1 (d2 c)(d3 c)^-1.
    A degree-2 cochain is a cocycle exactly when its coboundary is the
    constant 1.
    """
    if c.degree not in (1, 2):
        raise UnsupportedDegree("witt coboundary defined in degrees 1 and 2")
    n = c.degree
    out = {}
    one = WittElem.one(c.order)
    for ch in p.chains(n + 1):
        acc = one
        for i in range(n + 2):
            f = c.value(_face(ch, i))
            acc = acc * (f if i % 2 == 0 else f.inverse())
        if acc != one:
            out[ch] = acc
    return WittCochain(n + 1, c.order, out)


def is_witt_cocycle(p, c):
    return witt_coboundary(p, c).is_one()


def witt_exp(p, degree, order, layers):
    """Pointwise exponential of additive layers: layers[n] (1-indexed)
    are cochains of the given degree; missing layers are zero."""
    support = set()
    for c in layers.values():
        support.update(c.values)
    vals = {}
    for ch in support:
        cs = [F0] * (order + 1)
        for n, c in layers.items():
            cs[n] = c.value(ch)
        vals[ch] = WittElem.from_log(TruncSeries(order, cs))
    return WittCochain(degree, order, vals)


def witt_log_layers(c):
    """Pointwise log, split into additive layer cochains (1-indexed)."""
    layers = {n: {} for n in range(1, c.order + 1)}
    for ch, w in c.values.items():
        series = w.log()
        for n in range(1, c.order + 1):
            v = series.coeffs[n]
            if v != 0:
                layers[n][ch] = v
    return {n: SimpCochain(c.degree, tv) for n, tv in layers.items()}


def gauge_equivalent(p, e1, e2):
    """Witness 1-cochain phi with to_witt(e1) = d(phi) * to_witt(e2),
    or None when the two deformations are genuinely inequivalent.

    Both inputs must pass mc_check (NotMC otherwise).  The witness is
    found by taking log of the ratio and solving one linear system per
    lam-layer; exp of the solution is returned and the multiplicative
    equation re-checked exactly.
    """
    if e1.order != e2.order:
        raise ValueError("orders differ: %d vs %d" % (e1.order, e2.order))
    for e in (e1, e2):
        ok, wit = mc_check(p, e)
        if not ok:
            raise NotMC("input fails the Maurer-Cartan equation at %r" % (wit,))
    order = e1.order
    ratio = to_witt(e1) * to_witt(e2).inverse()
    target = witt_log_layers(ratio)

    rows = p.chains(2)
    cols = p.chains(1)
    rowof = {ch: k for k, ch in enumerate(rows)}
    mat = coboundary_matrix(p, 1, strict=False)

    psi = {}
    for n in range(1, order + 1):
        b = [F0] * len(rows)
        for ch, v in target[n].values.items():
            b[rowof[ch]] = v
        sol = solve_in_image(mat, b)
        if sol is None:
            return None
        layer = {ch: sol[k] for k, ch in enumerate(cols) if sol[k] != 0}
        if layer:
            psi[n] = SimpCochain(1, layer)

    phi = witt_exp(p, 1, order, psi)
    if witt_coboundary(p, phi) * to_witt(e2) != to_witt(e1):
        raise AssertionError("gauge witness failed the exact re-check")
    return phi


def _strict_h2_reps(p):
    """Representatives of a basis of H^2 on strict chains, as weak
    2-cochains supported on strict chains (extended by zero)."""
    d1 = coboundary_matrix(p, 1, strict=True)
    d2 = coboundary_matrix(p, 2, strict=True)
    c2 = p.chains(2, strict=True)
    r1 = rank(d1)
    _, kernel = rank_kernel(d2)
    b2 = len(kernel) - r1
    if b2 <= 0:
        return []

    # grow the image of d1 by kernel vectors; the ones that enlarge the
    # span represent independent cohomology classes
    reps = []
    base = SparseMat(len(c2), d1.cols + b2)
    for (i, j), v in d1.entries.items():
        base.set(i, j, v)
    col = d1.cols
    cur = r1
    for vec in kernel:
        if len(reps) == b2:
            break
        for i, v in enumerate(vec):
            if v != 0:
                base.set(i, col, v)
        nr = rank(base)
        if nr > cur:
            cur = nr
            col += 1
            reps.append(SimpCochain(2, {c2[i]: v for i, v in enumerate(vec) if v != 0}))
        else:
            for i, v in enumerate(vec):
                if v != 0:
                    base.set(i, col, F0)
    return reps


def moduli(p, order):
    """Dimension and a basis of the deformation classes at the given
    truncation order.

    The dimension is order * dim H^2(P).  The basis elements are
    z_i * lam^j for class representatives z_i; each is checked against
    mc_check, and any that fails (possible when the quadratic term
    z o z does not vanish on the nose) is replaced by the exp-corrected
    element with the same leading layer, which is a cocycle by
    construction.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    reps = _strict_h2_reps(p)
    basis = []
    for z in reps:
        for j in range(1, order + 1):
            e = MCElement.single(order, j, z)
            ok, _ = mc_check(p, e)
            if not ok:
                w = witt_exp(p, 2, order, {j: z})
                e = from_witt(w)
                ok, wit = mc_check(p, e)
                if not ok:
                    raise AssertionError(
                        "exp-corrected basis element fails MC at %r" % (wit,)
                    )
            basis.append(e)
    return order * len(reps), basis


def deformation_product(p, e):
    """The deformed product as a relative 2-cochain over truncated
    series: coefficient 1 + sum omega_n(chain) lam^n on each weak
    2-chain."""
    ring = SeriesRing(e.order)
    w = to_witt(e)
    coeffs = {ch: w.value(ch).value for ch in p.chains(2)}
    return RelCochain(2, coeffs, ring=ring)


def associativity_witness(p, e):
    """First weak 3-chain where the deformed product fails to be
    associative, or None; agrees with mc_check by the central
    equivalence and is computed on the algebra side via rel_eval."""
    ring = SeriesRing(e.order)
    F = deformation_product(p, e)
    for ch in p.chains(3):
        a = IncElem.basis(ch[0], ch[1], ring)
        b = IncElem.basis(ch[1], ch[2], ring)
        c = IncElem.basis(ch[2], ch[3], ring)
        left = rel_eval(F, [rel_eval(F, [a, b]), c])
        right = rel_eval(F, [a, rel_eval(F, [b, c])])
        if left != right:
            return tuple(p.chain_labels(ch))
    return None
