"""Randomized verification suites for cochain carriers.

Each suite draws seeded random elements over a grid of degree pairs and
asserts a family of exact identities: the partial-composition axioms
(operad_suite), the brace identity with its insertion sign
(brace_suite), the differential graded algebra laws including the
two-argument product compatibility (hga_suite), and the differential
graded Lie laws derived from the circle product (dgla_suite).  All
comparisons are exact; a mismatch is recorded as a Failure with the
first differing chain.

The generator is split per degree pair as Random("seed:suite:p:q"), so
reports are reproducible and independent of iteration order changes
elsewhere.  Every suite accepts mutate=True, which wraps the carrier so
that insertion into slot 2 flips sign; a sound suite must then report
failures (sensitivity check).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .opcore import (
    SignFlip,
    brace,
    brace_or_zero,
    bracket,
    circle,
    differential,
    differential_unshifted,
    dot,
    gamma,
)

MAX_RECORDED_FAILURES = 25


@dataclass
class Failure:
    check: str
    degrees: tuple
    witness: str

    def to_dict(self):
        return {
            "check": self.check,
            "degrees": list(self.degrees),
            "witness": self.witness,
        }


@dataclass
class SuiteReport:
    suite: str
    poset: str
    samples: int
    seed: int
    checks: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, name, degrees, ok, witness=""):
        """Count one comparison; record a Failure when it missed.

        witness may be a string or a thunk (only called on failure, so
        callers can defer the cost of locating the differing chain)."""
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                if callable(witness):
                    witness = witness()
                self.failures.append(Failure(name, tuple(degrees), witness))
        return ok

    @property
    def ok(self):
        return self.failed == 0

    def to_dict(self):
        return {
            "suite": self.suite,
            "poset": self.poset,
            "samples": self.samples,
            "seed": self.seed,
            "checks": self.checks,
            "failed": self.failed,
            "ok": self.ok,
            "failures": [f.to_dict() for f in self.failures],
        }


def agree(car, a, b):
    """Equality that tolerates differently-clamped arities of zero."""
    if car.arity(a) != car.arity(b):
        return car.is_zero(a) and car.is_zero(b)
    return car.equal(a, b)


def _witness(car, a, b):
    if car.arity(a) != car.arity(b):
        return "arity %d vs %d" % (car.arity(a), car.arity(b))
    return car.diff_witness(a, b)


def _zsum(car, terms):
    """Sum skipping zeros, so clamped-arity zeros never poison add."""
    acc = None
    for t in terms:
        if car.is_zero(t):
            continue
        acc = t if acc is None else car.add(acc, t)
    if acc is None:
        return car.zero(0)
    return acc


def _sdeg(car, x):
    return car.arity(x) - 1


def _rng_for(seed, suite, p, q):
    return random.Random("%s:%s:%d:%d" % (seed, suite, p, q))


def _grid(max_degree):
    return [(p, q) for p in range(max_degree + 1) for q in range(max_degree + 1)]


def operad_suite(car, samples=25, seed=0, max_degree=3, mutate=False):
    """Two-sided unit laws and May associativity of partial composition."""
    if mutate:
        car = SignFlip(car)
    rep = SuiteReport("operad", car.poset.name, samples, seed)
    ident = car.identity()
    m = car.mult()

    mm = circle(car, m, m)
    rep.check("mult-square", (2, 2), car.is_zero(mm),
              lambda: _witness(car, mm, car.zero(car.arity(mm))))

    for p, q in _grid(max_degree):
        rng = _rng_for(seed, "operad", p, q)
        for _ in range(samples):
            f = car.random_elem(p, rng)
            g = car.random_elem(q, rng)

            for j in range(1, p + 1):
                got = car.compose_at(f, j, ident)
                rep.check("unit-right[%d]" % j, (p,), agree(car, got, f),
                          lambda a=got, b=f: _witness(car, a, b))
            got = car.compose_at(ident, 1, f)
            rep.check("unit-left", (p,), agree(car, got, f),
                      lambda a=got, b=f: _witness(car, a, b))
            if p >= 1:
                got = gamma(car, f, [ident] * p)
                rep.check("unit-gamma", (p,), agree(car, got, f),
                          lambda a=got, b=f: _witness(car, a, b))

            if p < 1:
                continue
            # composite degree p+q+r-2 drives the cost; keep h small
            r = rng.randint(0, min(2, max_degree))
            h = car.random_elem(r, rng)
            for i in range(1, p + 1):
                fg = car.compose_at(f, i, g)
                for j in range(1, p + q):
                    lhs = car.compose_at(fg, j, h)
                    if j < i:
                        # h lands left of g's block
                        rhs = car.compose_at(
                            car.compose_at(f, j, h), i + r - 1, g
                        )
                    elif j <= i + q - 1:
                        # h lands inside g
                        rhs = car.compose_at(
                            f, i, car.compose_at(g, j - i + 1, h)
                        )
                    else:
                        # h lands right of g's block
                        rhs = car.compose_at(
                            car.compose_at(f, j - q + 1, h), i, g
                        )
                    rep.check("assoc[i=%d,j=%d]" % (i, j), (p, q, r),
                              agree(car, lhs, rhs),
                              lambda a=lhs, b=rhs: _witness(car, a, b))
    return rep


def _brace_rhs(car, x, xs, ys):
    """Right side of the brace identity: all ordered ways to feed
    consecutive runs of ys into the xs and the rest into x directly."""
    n = len(ys)
    sy = [_sdeg(car, y) for y in ys]
    terms = []

    def place(p, start, args, eps):
        if p == len(xs):
            args = args + ys[start:]
            t = brace_or_zero(car, x, args)
            terms.append(car.scale(-1, t) if eps % 2 else t)
            return
        for i in range(start, n + 1):
            e = eps + _sdeg(car, xs[p]) * sum(sy[:i])
            for j in range(i, n + 1):
                inner = brace_or_zero(car, xs[p], ys[i:j])
                place(p + 1, j, args + ys[start:i] + [inner], e)

    place(0, 0, [], 0)
    return _zsum(car, terms)


def brace_suite(car, samples=25, seed=0, max_degree=3, mutate=False):
    """x{} = x and the brace composition identity for one or two inner
    arguments against up to two outer arguments."""
    if mutate:
        car = SignFlip(car)
    rep = SuiteReport("brace", car.poset.name, samples, seed)
    for p, q in _grid(max_degree):
        rng = _rng_for(seed, "brace", p, q)
        for _ in range(samples):
            x = car.random_elem(p, rng)
            rep.check("brace-empty", (p,), agree(car, brace(car, x, []), x),
                      lambda a=x: _witness(car, brace(car, a, []), a))

            # one (m, n) shape per sample; the rng walks all six shapes
            # across a run.  Extra elements stay at degree <= 1 so the
            # nested-brace composite degree stays small.
            m_ct = rng.randint(1, 2)
            n_ct = rng.randint(0, 2)
            xs = [car.random_elem(q, rng)]
            if m_ct == 2:
                xs.append(car.random_elem(rng.randint(0, 1), rng))
            ys = [car.random_elem(rng.randint(0, 1), rng) for _ in range(n_ct)]
            lhs = brace_or_zero(car, brace_or_zero(car, x, xs), ys)
            rhs = _brace_rhs(car, x, xs, ys)
            rep.check(
                "brace-identity[m=%d,n=%d]" % (m_ct, n_ct),
                (p, q), agree(car, lhs, rhs),
                lambda a=lhs, b=rhs: _witness(car, a, b),
            )
    return rep


def hga_suite(car, samples=25, seed=0, max_degree=3, mutate=False):
    """DGA laws: associativity of dot, the product-brace interchange for
    up to two arguments, d squared zero, and the Leibniz rule of the
    unshifted differential over dot."""
    if mutate:
        car = SignFlip(car)
    rep = SuiteReport("hga", car.poset.name, samples, seed)
    for p, q in _grid(max_degree):
        rng = _rng_for(seed, "hga", p, q)
        for _ in range(samples):
            x = car.random_elem(p, rng)
            y = car.random_elem(q, rng)
            r = rng.randint(0, min(2, max_degree))
            z = car.random_elem(r, rng)

            lhs = dot(car, dot(car, x, y), z)
            rhs = dot(car, x, dot(car, y, z))
            rep.check("dot-assoc", (p, q, r), agree(car, lhs, rhs),
                      lambda a=lhs, b=rhs: _witness(car, a, b))

            n_ct = rng.randint(0, 2)
            ys = [car.random_elem(rng.randint(0, 1), rng)
                  for _ in range(n_ct)]
            sy = [_sdeg(car, w) for w in ys]
            lhs = brace_or_zero(car, dot(car, x, y), ys)
            terms = []
            for i in range(n_ct + 1):
                t = dot(car,
                        brace_or_zero(car, x, ys[:i]),
                        brace_or_zero(car, y, ys[i:]))
                if (car.arity(y) * sum(sy[:i])) % 2:
                    t = car.scale(-1, t)
                terms.append(t)
            rhs = _zsum(car, terms)
            rep.check("dot-brace[n=%d]" % n_ct, (p, q), agree(car, lhs, rhs),
                      lambda a=lhs, b=rhs: _witness(car, a, b))

            dd = differential(car, differential(car, x))
            rep.check("d-squared", (p,), car.is_zero(dd),
                      lambda a=dd: _witness(car, a, car.zero(car.arity(a))))

            lhs = differential_unshifted(car, dot(car, x, y))
            right = dot(car, x, differential_unshifted(car, y))
            if car.arity(x) % 2:
                right = car.scale(-1, right)
            rhs = _zsum(car, [dot(car, differential_unshifted(car, x), y), right])
            rep.check("leibniz-dot", (p, q), agree(car, lhs, rhs),
                      lambda a=lhs, b=rhs: _witness(car, a, b))
    return rep


def dgla_suite(car, samples=25, seed=0, max_degree=3, mutate=False):
    """Lie laws of the circle-product commutator on shifted degrees."""
    if mutate:
        car = SignFlip(car)
    rep = SuiteReport("dgla", car.poset.name, samples, seed)
    m = car.mult()

    dm = differential(car, m)
    rep.check("d-mult", (2,), car.is_zero(dm),
              lambda: _witness(car, dm, car.zero(car.arity(dm))))
    mm = bracket(car, m, m)
    rep.check("bracket-mult", (2, 2), car.is_zero(mm),
              lambda: _witness(car, mm, car.zero(car.arity(mm))))

    for p, q in _grid(max_degree):
        rng = _rng_for(seed, "dgla", p, q)
        sp, sq = p - 1, q - 1
        for _ in range(samples):
            f = car.random_elem(p, rng)
            g = car.random_elem(q, rng)
            r = rng.randint(0, min(2, max_degree))
            h = car.random_elem(r, rng)
            sr = r - 1

            gf = bracket(car, g, f)
            if (sp * sq) % 2:
                gf = car.scale(-1, gf)
            anti = _zsum(car, [bracket(car, f, g), gf])
            rep.check("antisymmetry", (p, q), car.is_zero(anti),
                      lambda a=anti: _witness(car, a, car.zero(car.arity(a))))

            lhs = _associator(car, f, g, h)
            rhs = _associator(car, f, h, g)
            if (sq * sr) % 2:
                rhs = car.scale(-1, rhs)
            rep.check("prelie-symmetry", (p, q, r), agree(car, lhs, rhs),
                      lambda a=lhs, b=rhs: _witness(car, a, b))

            t1 = bracket(car, bracket(car, f, g), h)
            if (sp * sr) % 2:
                t1 = car.scale(-1, t1)
            t2 = bracket(car, bracket(car, g, h), f)
            if (sq * sp) % 2:
                t2 = car.scale(-1, t2)
            t3 = bracket(car, bracket(car, h, f), g)
            if (sr * sq) % 2:
                t3 = car.scale(-1, t3)
            jac = _zsum(car, [t1, t2, t3])
            rep.check("jacobi", (p, q, r), car.is_zero(jac),
                      lambda a=jac: _witness(car, a, car.zero(car.arity(a))))

            lhs = differential(car, bracket(car, f, g))
            right = bracket(car, f, differential(car, g))
            if sp % 2:
                right = car.scale(-1, right)
            rhs = _zsum(car, [bracket(car, differential(car, f), g), right])
            rep.check("leibniz-bracket", (p, q), agree(car, lhs, rhs),
                      lambda a=lhs, b=rhs: _witness(car, a, b))
    return rep


def _associator(car, f, g, h):
    left = circle(car, f, circle(car, g, h))
    right = circle(car, circle(car, f, g), h)
    return _zsum(car, [left, car.scale(-1, right)])


SUITES = {
    "operad": operad_suite,
    "brace": brace_suite,
    "hga": hga_suite,
    "dgla": dgla_suite,
}
