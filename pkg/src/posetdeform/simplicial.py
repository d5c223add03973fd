"""Simplicial cochains on the nerve of a finite poset.

A degree-n cochain is a rational-valued function on weak n-chains,
stored sparsely.  The partial composition

    (f o_j g)(c_0, ..., c_{p+q-1})
        = f(c_0, ..., c_{j-1}, c_{j+q-1}, ..., c_{p+q-1})
          * g(c_{j-1}, ..., c_{j+q-1})

makes the graded space an operad; composing with a degree-0 argument
repeats the vertex c_{j-1}.  The constant cochains 1 in degrees 1 and 2
are the operadic identity and the multiplication, and through them the
whole opcore structure (braces, dot, differential, bracket) applies.

Nerve cohomology dimensions are computed from the classical alternating
face-sum coboundary on either the weak or the strict chain basis.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import SparseMat, rank
from .opcore import SlotOutOfRange

F0 = Fraction(0)
F1 = Fraction(1)


class SimpCochain:
    """Sparse exact cochain: values maps weak chains (tuples of element
    indices) to nonzero Fractions; anything absent reads as zero."""

    __slots__ = ("degree", "values")

    def __init__(self, degree, values=()):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        vals = {}
        items = values.items() if isinstance(values, dict) else values
        for ch, v in items:
            if len(ch) != degree + 1:
                raise ValueError(
                    "chain %r has %d entries, expected %d" % (ch, len(ch), degree + 1)
                )
            v = v if isinstance(v, Fraction) else Fraction(v)
            if v != 0:
                vals[tuple(ch)] = v
        self.values = vals

    def value(self, chain):
        return self.values.get(chain, F0)

    def is_zero(self):
        return not self.values

    def add(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch in cochain sum")
        out = dict(self.values)
        for ch, v in other.values.items():
            nv = out.get(ch, F0) + v
            if nv == 0:
                out.pop(ch, None)
            else:
                out[ch] = nv
        c = SimpCochain.__new__(SimpCochain)
        c.degree = self.degree
        c.values = out
        return c

    def scale(self, f):
        f = f if isinstance(f, Fraction) else Fraction(f)
        if f == 0:
            return SimpCochain(self.degree)
        c = SimpCochain.__new__(SimpCochain)
        c.degree = self.degree
        c.values = {ch: f * v for ch, v in self.values.items()}
        return c

    __add__ = add

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __rmul__(self, f):
        return self.scale(f)

    def __eq__(self, other):
        return (
            isinstance(other, SimpCochain)
            and self.degree == other.degree
            and self.values == other.values
        )

    __hash__ = None

    def __repr__(self):
        return "SimpCochain(deg=%d, %d entries)" % (self.degree, len(self.values))

    def to_dict(self, poset):
        from .scalars import format_rat

        entries = [
            {"chain": list(poset.chain_labels(ch)), "value": format_rat(v)}
            for ch, v in sorted(self.values.items())
        ]
        return {"degree": self.degree, "entries": entries}

    @classmethod
    def from_dict(cls, poset, d):
        vals = {}
        for e in d.get("entries", ()):
            ch = poset.chain_indices(e["chain"])
            vals[ch] = Fraction(e["value"])
        return cls(d["degree"], vals)


class SimplicialCarrier:
    """Operad carrier of simplicial cochains on one poset."""

    name = "simplicial"

    def __init__(self, poset):
        self.poset = poset

    def chains(self, n):
        return self.poset.chains(n)

    def arity(self, x):
        return x.degree

    def zero(self, n):
        return SimpCochain(n)

    def add(self, x, y):
        return x.add(y)

    def scale(self, c, x):
        return x.scale(c)

    def equal(self, x, y):
        return x == y

    def is_zero(self, x):
        return x.is_zero()

    def compose_at(self, f, j, g):
        p, q = f.degree, g.degree
        if p < 1 or not 1 <= j <= p:
            raise SlotOutOfRange("slot %d invalid for arity %d" % (j, p))
        fv = f.values
        gv = g.values
        out = {}
        for c in self.chains(p + q - 1):
            a = fv.get(c[:j] + c[j + q - 1 :])
            if a is None:
                continue
            b = gv.get(c[j - 1 : j + q])
            if b is None:
                continue
            out[c] = a * b
        res = SimpCochain.__new__(SimpCochain)
        res.degree = p + q - 1
        res.values = out
        return res

    def constant(self, n, value=F1):
        v = value if isinstance(value, Fraction) else Fraction(value)
        return SimpCochain(n, {c: v for c in self.chains(n)})

    def identity(self):
        return self.constant(1)

    def mult(self):
        return self.constant(2)

    def random_elem(self, n, rng):
        vals = {}
        for c in self.chains(n):
            vals[c] = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        return SimpCochain(n, vals)

    def diff_witness(self, x, y):
        """First basis chain where two same-degree cochains differ."""
        keys = sorted(set(x.values) | set(y.values))
        for ch in keys:
            if x.value(ch) != y.value(ch):
                return str(tuple(self.poset.chain_labels(ch)))
        return ""


def constants(poset):
    """The operadic identity (degree 1) and multiplication (degree 2)."""
    car = SimplicialCarrier(poset)
    return car.identity(), car.mult()


def coboundary_matrix(poset, n, strict=False):
    """Matrix of the classical alternating face sum C^n -> C^{n+1} on the
    weak (default) or strict chain basis: rows are (n+1)-chains, columns
    n-chains, entry (-1)**i for dropping vertex i."""
    src = poset.chains(n, strict=strict)
    dst = poset.chains(n + 1, strict=strict)
    col = {c: k for k, c in enumerate(src)}
    m = SparseMat(len(dst), len(src))
    for r, ch in enumerate(dst):
        for i in range(n + 2):
            face = ch[:i] + ch[i + 1 :]
            k = col.get(face)
            if k is None:
                continue
            m.add_to(r, k, F1 if i % 2 == 0 else -F1)
    return m


def cohomology_dims(poset, max_n, strict=True):
    """Nerve cohomology dimensions [dim H^0, ..., dim H^max_n] over Q."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    sizes = [len(poset.chains(n, strict=strict)) for n in range(max_n + 1)]
    ranks = [rank(coboundary_matrix(poset, n, strict=strict)) for n in range(max_n + 1)]
    dims = []
    prev_rank = 0
    for n in range(max_n + 1):
        dims.append(sizes[n] - ranks[n] - prev_rank)
        prev_rank = ranks[n]
    return dims
