"""The incidence algebra of a poset and its Hochschild cochains.

The incidence algebra kP has a basis element E[i, j] for every interval
i <= j, with E[i, j] * E[j, k] = E[i, k] and all other basis products
zero.  The diagonal spans the separable subalgebra generated by the
idempotents E[i, i].

Two cochain carriers live here.

*Relative* cochains (relative to the diagonal subalgebra) are determined
by one scalar per weak n-chain: such a cochain sends the basis tuple
(E[i0, i1], ..., E[i_{n-1}, i_n]) to coeff * E[i0, i_n] and kills
non-composable tuples.  Degree 0 is the diagonal of kP, one scalar per
element.  Crucially, composition here is computed *natively* -- by
multilinear evaluation in the algebra and re-extraction of coefficients
-- not by transporting through the simplicial side; the isomorphism
between the two operads is then a checkable statement, not a tautology.

*Full* cochains are arbitrary multilinear maps (kP)**n -> kP, tabulated
on basis tuples.  The full carrier is the endomorphism operad of kP; its
multiplication is the algebra product itself and d = [m, -] is the
Hochschild differential.  Tables grow like (#intervals)**n, so degrees
are capped and exceeding the cap raises TooLarge.

Scalars are plain rationals by default; every structure here also works
verbatim over truncated series (see scalars.SeriesRing), which is what
formal deformations of the product need.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .linalg import SparseMat, rank
from .opcore import ArityMismatch, SlotOutOfRange, differential
from .scalars import RAT, SeriesRing

F1 = Fraction(1)

FULL_TABLE_LIMIT = 10_000


class RingMismatch(ValueError):
    """Operands live over different scalar rings."""


class TooLarge(ValueError):
    """Full-complex computation beyond the documented size cap."""


def _check_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch("scalar rings differ: %r vs %r" % (a.ring, b.ring))


class IncElem:
    """Element of the incidence algebra: terms maps intervals (i, j) with
    i <= j to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, terms=(), ring=RAT):
        self.ring = ring
        tv = {}
        items = terms.items() if isinstance(terms, dict) else terms
        zero = ring.zero
        for ij, v in items:
            if v != zero:
                tv[tuple(ij)] = v
        self.terms = tv

    @classmethod
    def basis(cls, i, j, ring=RAT):
        e = cls.__new__(cls)
        e.ring = ring
        e.terms = {(i, j): ring.one}
        return e

    def is_zero(self):
        return not self.terms

    def add(self, other):
        _check_ring(self, other)
        out = dict(self.terms)
        zero = self.ring.zero
        for ij, v in other.terms.items():
            nv = out.get(ij, zero) + v
            if nv == zero:
                out.pop(ij, None)
            else:
                out[ij] = nv
        e = IncElem.__new__(IncElem)
        e.ring = self.ring
        e.terms = out
        return e

    def scale(self, c):
        zero = self.ring.zero
        out = {}
        for ij, v in self.terms.items():
            nv = c * v
            if nv != zero:
                out[ij] = nv
        e = IncElem.__new__(IncElem)
        e.ring = self.ring
        e.terms = out
        return e

    def mul(self, other):
        """Algebra product: E[i,j] * E[j,k] = E[i,k], zero otherwise."""
        _check_ring(self, other)
        zero = self.ring.zero
        out = {}
        for (i, j), a in self.terms.items():
            for (jj, k), b in other.terms.items():
                if j != jj:
                    continue
                key = (i, k)
                nv = out.get(key, zero) + a * b
                if nv == zero:
                    out.pop(key, None)
                else:
                    out[key] = nv
        e = IncElem.__new__(IncElem)
        e.ring = self.ring
        e.terms = out
        return e

    __add__ = add
    __mul__ = mul

    def __sub__(self, other):
        return self.add(other.scale(-self.ring.one))

    def __neg__(self):
        return self.scale(-self.ring.one)

    def __eq__(self, other):
        return (
            isinstance(other, IncElem)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return "IncElem(%d terms)" % len(self.terms)


def inc_mul(a, b):
    return a.mul(b)


def inc_unit(poset, ring=RAT):
    """The algebra unit: the sum of all diagonal idempotents."""
    return IncElem({(i, i): ring.one for i in range(poset.n)}, ring=ring)


class RelCochain:
    """Cochain relative to the diagonal subalgebra.

    coeffs maps weak n-chains to nonzero scalars; degree 0 is keyed by
    singleton chains (i,).  The meaning of coeffs[c] for an n-chain
    c = (i0, ..., in) is: the cochain sends (E[i0,i1], ..., E[i_{n-1},in])
    to coeffs[c] * E[i0, in].
    """

    __slots__ = ("degree", "coeffs", "ring")

    def __init__(self, degree, coeffs=(), ring=RAT):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        self.ring = ring
        out = {}
        zero = ring.zero
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for ch, v in items:
            if len(ch) != degree + 1:
                raise ValueError(
                    "chain %r has %d entries, expected %d" % (ch, len(ch), degree + 1)
                )
            if v != zero:
                out[tuple(ch)] = v
        self.coeffs = out

    def value(self, chain):
        return self.coeffs.get(chain, self.ring.zero)

    def is_zero(self):
        return not self.coeffs

    def add(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch in cochain sum")
        _check_ring(self, other)
        out = dict(self.coeffs)
        zero = self.ring.zero
        for ch, v in other.coeffs.items():
            nv = out.get(ch, zero) + v
            if nv == zero:
                out.pop(ch, None)
            else:
                out[ch] = nv
        c = RelCochain.__new__(RelCochain)
        c.degree = self.degree
        c.ring = self.ring
        c.coeffs = out
        return c

    def scale(self, f):
        zero = self.ring.zero
        out = {}
        for ch, v in self.coeffs.items():
            nv = f * v
            if nv != zero:
                out[ch] = nv
        c = RelCochain.__new__(RelCochain)
        c.degree = self.degree
        c.ring = self.ring
        c.coeffs = out
        return c

    __add__ = add

    def __sub__(self, other):
        return self.add(other.scale(-self.ring.one))

    def __rmul__(self, f):
        return self.scale(f)

    def __eq__(self, other):
        return (
            isinstance(other, RelCochain)
            and self.degree == other.degree
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self):
        return "RelCochain(deg=%d, %d entries)" % (self.degree, len(self.coeffs))

    def as_element(self):
        """Degree-0 cochain as the diagonal algebra element it is."""
        if self.degree != 0:
            raise ArityMismatch("only degree-0 cochains are algebra elements")
        return IncElem(
            {(c[0], c[0]): v for c, v in self.coeffs.items()}, ring=self.ring
        )

    def to_dict(self, poset):
        from .scalars import format_rat

        entries = [
            {"chain": list(poset.chain_labels(ch)), "value": format_rat(v)}
            for ch, v in sorted(self.coeffs.items())
        ]
        return {"degree": self.degree, "entries": entries}

    @classmethod
    def from_dict(cls, poset, d):
        vals = {}
        for e in d.get("entries", ()):
            ch = poset.chain_indices(e["chain"])
            vals[ch] = Fraction(e["value"])
        return cls(d["degree"], vals)


def rel_eval(f, args):
    """Multilinear evaluation of a relative cochain on algebra elements.

    Expands over the basis terms of the arguments, keeps the composable
    paths, and weighs each by f's coefficient on the resulting chain."""
    n = f.degree
    if n < 1:
        raise ArityMismatch("rel_eval needs degree >= 1")
    if len(args) != n:
        raise ArityMismatch("expected %d arguments, got %d" % (n, len(args)))
    ring = f.ring
    for a in args:
        if a.ring != ring:
            raise RingMismatch("argument ring %r != cochain ring %r" % (a.ring, ring))
    zero = ring.zero
    # paths: (vertex chain so far, accumulated scalar)
    paths = [((), None)]
    for a in args:
        nxt = []
        for chain, s in paths:
            for (lo, hi), c in a.terms.items():
                if chain:
                    if chain[-1] != lo:
                        continue
                    nxt.append((chain + (hi,), s * c))
                else:
                    nxt.append(((lo, hi), c))
        paths = nxt
        if not paths:
            break
    acc = {}
    for chain, s in paths:
        coeff = f.coeffs.get(chain)
        if coeff is None:
            continue
        key = (chain[0], chain[-1])
        v = acc.get(key, zero) + coeff * s
        if v == zero:
            acc.pop(key, None)
        else:
            acc[key] = v
    e = IncElem.__new__(IncElem)
    e.ring = ring
    e.terms = acc
    return e


class RelHochschildCarrier:
    """Operad carrier of relative Hochschild cochains, with composition
    computed by evaluation in the incidence algebra."""

    name = "relative"

    def __init__(self, poset, ring=RAT):
        self.poset = poset
        self.ring = ring
        self._bargs = {}

    def chains(self, n):
        return self.poset.chains(n)

    def arity(self, x):
        return x.degree

    def zero(self, n):
        return RelCochain(n, ring=self.ring)

    def add(self, x, y):
        return x.add(y)

    def scale(self, c, x):
        if self.ring.order is not None and isinstance(c, (int, Fraction)):
            c = self.ring.one * c
        return x.scale(c)

    def equal(self, x, y):
        return x == y

    def is_zero(self, x):
        return x.is_zero()

    def _basis_args(self, chain):
        # shared immutable IncElems; cached since compose_at revisits chains
        got = self._bargs.get(chain)
        if got is None:
            ring = self.ring
            got = [
                IncElem.basis(chain[t], chain[t + 1], ring)
                for t in range(len(chain) - 1)
            ]
            self._bargs[chain] = got
        return got

    def compose_at(self, f, j, g):
        p, q = f.degree, g.degree
        if p < 1 or not 1 <= j <= p:
            raise SlotOutOfRange("slot %d invalid for arity %d" % (j, p))
        _check_ring(f, g)
        ring = self.ring
        out = {}
        g_elem = g.as_element() if q == 0 else None
        for c in self.chains(p + q - 1):
            if q == 0:
                inner = g_elem
            else:
                inner = rel_eval(g, self._basis_args(c[j - 1 : j + q]))
                if inner.is_zero():
                    continue
            args = (
                self._basis_args(c[:j]) + [inner] + self._basis_args(c[j + q - 1 :])
            )
            val = rel_eval(f, args)
            coeff = val.terms.get((c[0], c[-1]))
            if coeff is not None:
                out[c] = coeff
        res = RelCochain.__new__(RelCochain)
        res.degree = p + q - 1
        res.ring = ring
        res.coeffs = out
        return res

    def constant(self, n, value=None):
        v = self.ring.one if value is None else value
        return RelCochain(n, {c: v for c in self.chains(n)}, ring=self.ring)

    def identity(self):
        """The identity map of kP: coefficient 1 on every weak 1-chain."""
        return self.constant(1)

    def mult(self):
        """The algebra product as a relative 2-cochain: coefficient 1 on
        every weak 2-chain."""
        return self.constant(2)

    def random_elem(self, n, rng):
        one = self.ring.one
        vals = {}
        for c in self.chains(n):
            vals[c] = one * Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        return RelCochain(n, vals, ring=self.ring)

    def diff_witness(self, x, y):
        keys = sorted(set(x.coeffs) | set(y.coeffs))
        for ch in keys:
            if x.value(ch) != y.value(ch):
                return str(tuple(self.poset.chain_labels(ch)))
        return ""


class FullCochain:
    """Arbitrary multilinear map (kP)**n -> kP, tabulated on basis tuples.
    table maps tuples of intervals to nonzero IncElem values; degree 0 is
    keyed by the empty tuple."""

    __slots__ = ("degree", "table", "ring")

    def __init__(self, degree, table=(), ring=RAT):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        self.ring = ring
        out = {}
        items = table.items() if isinstance(table, dict) else table
        for tup, val in items:
            if len(tup) != degree:
                raise ValueError("tuple %r has %d entries, expected %d" % (tup, len(tup), degree))
            if not val.is_zero():
                out[tuple(tup)] = val
        self.table = out

    def value(self, tup):
        got = self.table.get(tup)
        if got is None:
            return IncElem(ring=self.ring)
        return got

    def is_zero(self):
        return not self.table

    def add(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch in cochain sum")
        _check_ring(self, other)
        out = dict(self.table)
        for tup, val in other.table.items():
            cur = out.get(tup)
            nv = val if cur is None else cur.add(val)
            if nv.is_zero():
                out.pop(tup, None)
            else:
                out[tup] = nv
        c = FullCochain.__new__(FullCochain)
        c.degree = self.degree
        c.ring = self.ring
        c.table = out
        return c

    def scale(self, f):
        out = {}
        for tup, val in self.table.items():
            nv = val.scale(f)
            if not nv.is_zero():
                out[tup] = nv
        c = FullCochain.__new__(FullCochain)
        c.degree = self.degree
        c.ring = self.ring
        c.table = out
        return c

    def __eq__(self, other):
        return (
            isinstance(other, FullCochain)
            and self.degree == other.degree
            and self.ring == other.ring
            and self.table == other.table
        )

    __hash__ = None

    def __repr__(self):
        return "FullCochain(deg=%d, %d entries)" % (self.degree, len(self.table))


class FullHochschildCarrier:
    """Endomorphism operad of the incidence algebra, on basis tables."""

    name = "full"

    def __init__(self, poset, ring=RAT):
        self.poset = poset
        self.ring = ring
        self._tuples = {}

    def tuples(self, n):
        got = self._tuples.get(n)
        if got is None:
            ivs = self.poset.intervals()
            if len(ivs) ** n > FULL_TABLE_LIMIT:
                raise TooLarge(
                    "%d**%d basis tuples exceeds the full-complex cap" % (len(ivs), n)
                )
            got = tuple(product(ivs, repeat=n))
            self._tuples[n] = got
        return got

    def arity(self, x):
        return x.degree

    def zero(self, n):
        return FullCochain(n, ring=self.ring)

    def add(self, x, y):
        return x.add(y)

    def scale(self, c, x):
        if self.ring.order is not None and isinstance(c, (int, Fraction)):
            c = self.ring.one * c
        return x.scale(c)

    def equal(self, x, y):
        return x == y

    def is_zero(self, x):
        return x.is_zero()

    def compose_at(self, f, j, g):
        p, q = f.degree, g.degree
        if p < 1 or not 1 <= j <= p:
            raise SlotOutOfRange("slot %d invalid for arity %d" % (j, p))
        _check_ring(f, g)
        out = {}
        for t in self.tuples(p + q - 1):
            inner = g.value(t[j - 1 : j - 1 + q])
            if inner.is_zero():
                continue
            acc = None
            for K, s in inner.terms.items():
                ft = f.table.get(t[: j - 1] + (K,) + t[j - 1 + q :])
                if ft is None:
                    continue
                term = ft.scale(s)
                acc = term if acc is None else acc.add(term)
            if acc is not None and not acc.is_zero():
                out[t] = acc
        res = FullCochain.__new__(FullCochain)
        res.degree = p + q - 1
        res.ring = self.ring
        res.table = out
        return res

    def identity(self):
        ring = self.ring
        return FullCochain(
            1,
            {(iv,): IncElem.basis(iv[0], iv[1], ring) for iv in self.poset.intervals()},
            ring=ring,
        )

    def mult(self):
        """The algebra multiplication as an arity-2 endomorphism."""
        ring = self.ring
        table = {}
        for a in self.poset.intervals():
            for b in self.poset.intervals():
                if a[1] == b[0]:
                    table[(a, b)] = IncElem.basis(a[0], b[1], ring)
        return FullCochain(2, table, ring=ring)

    def random_elem(self, n, rng):
        ring = self.ring
        ivs = self.poset.intervals()
        table = {}
        for t in self.tuples(n):
            if rng.random() < 0.5:
                continue
            tgt = ivs[rng.randrange(len(ivs))]
            c = ring.one * Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            val = IncElem.basis(tgt[0], tgt[1], ring).scale(c)
            if not val.is_zero():
                table[t] = val
        return FullCochain(n, table, ring=ring)

    def diff_witness(self, x, y):
        keys = sorted(set(x.table) | set(y.table))
        for t in keys:
            if x.value(t) != y.value(t):
                return str(t)
        return ""


def include_relative(full_car, f):
    """The inclusion of relative cochains into the full complex."""
    ring = full_car.ring
    if f.degree == 0:
        return FullCochain(0, {(): f.as_element()}, ring=ring)
    table = {}
    for c, v in f.coeffs.items():
        tup = tuple((c[t], c[t + 1]) for t in range(len(c) - 1))
        table[tup] = IncElem({(c[0], c[-1]): v}, ring=ring)
    return FullCochain(f.degree, table, ring=ring)


def full_differential(full_car, f):
    """Hochschild differential d = [m, -] on the full complex (the shifted
    convention shared by the whole package)."""
    return differential(full_car, f)


def _rel_basis(poset, n):
    return poset.chains(n)


def _full_basis(poset, car, n):
    ivs = poset.intervals()
    return [(t, iv) for t in car.tuples(n) for iv in ivs]


def hh_dims(poset, max_n, which="relative"):
    """Hochschild cohomology dimensions [dim HH^0, ..., dim HH^max_n].

    which='relative' uses the diagonal-relative complex (max_n <= 3);
    which='full' uses the full endomorphism complex (max_n <= 2, table
    growth).  Both use the same differential d = [m, -].
    """
    if which == "relative":
        if max_n > 3:
            raise TooLarge("relative complex capped at degree 3")
        car = RelHochschildCarrier(poset)

        def basis(n):
            return _rel_basis(poset, n)

        def elem(n, key):
            return RelCochain(n, {key: F1})

        def matrix(n):
            src = basis(n)
            dst = basis(n + 1)
            rowof = {c: k for k, c in enumerate(dst)}
            m = SparseMat(len(dst), len(src))
            for k, key in enumerate(src):
                df = differential(car, elem(n, key))
                for ch, v in df.coeffs.items():
                    m.set(rowof[ch], k, v)
            return m

    elif which == "full":
        if max_n > 2:
            raise TooLarge("full complex capped at degree 2")
        car = FullHochschildCarrier(poset)
        ivs = poset.intervals()
        iv_index = {iv: k for k, iv in enumerate(ivs)}

        def basis(n):
            return _full_basis(poset, car, n)

        def elem(n, key):
            t, iv = key
            return FullCochain(n, {t: IncElem.basis(iv[0], iv[1])})

        def matrix(n):
            src = basis(n)
            tupidx = {t: k for k, t in enumerate(car.tuples(n + 1))}
            ni = len(ivs)
            m = SparseMat(len(tupidx) * ni, len(src))
            for k, key in enumerate(src):
                df = differential(car, elem(n, key))
                for t, val in df.table.items():
                    base = tupidx[t] * ni
                    for iv, s in val.terms.items():
                        m.set(base + iv_index[iv], k, s)
            return m

    else:
        raise ValueError("which must be 'relative' or 'full'")

    sizes = [len(basis(n)) for n in range(max_n + 1)]
    ranks = [rank(matrix(n)) for n in range(max_n + 1)]
    dims = []
    prev = 0
    for n in range(max_n + 1):
        dims.append(sizes[n] - ranks[n] - prev)
        prev = ranks[n]
    return dims
