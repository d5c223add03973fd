"""Finite posets and the enumerations every cochain complex is built on.

Conventions used throughout the package:

* elements are referred to by index internally and by label in all
  serialized input/output;
* an n-chain is a tuple of n+1 element indices; *weak* chains are
  monotone (v0 <= v1 <= ... <= vn, repeats allowed), *strict* chains are
  strictly increasing;
* chain lists and interval lists are produced in lexicographic index
  order, so every downstream matrix and report is reproducible.
"""

from __future__ import annotations

import json


class PosetError(ValueError):
    pass


class CycleDetected(PosetError):
    """The reflexive-transitive closure of the input relations has x <= y
    and y <= x for distinct x, y, so there is no partial order."""


class DuplicateElement(PosetError):
    pass


class UnknownElement(PosetError):
    pass


class Poset:
    """Finite poset on labeled elements.

    ``leq`` holds the full relation (reflexive and transitive); build
    instances through :meth:`from_relations`, which closes an arbitrary
    generating set of pairs and validates antisymmetry.
    """

    def __init__(self, labels, leq, name="poset"):
        self.labels = tuple(labels)
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.name = name
        n = len(self.labels)
        assert all(len(row) == n for row in self.leq)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        # successor lists (including the element itself), used by the
        # chain enumerator; sorted so enumeration is lexicographic
        self.up = tuple(
            tuple(j for j in range(n) if self.leq[i][j]) for i in range(n)
        )
        self._chains = {}
        self._intervals = None

    @classmethod
    def from_relations(cls, labels, pairs, name="poset"):
        labels = list(labels)
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateElement("duplicate element label %r" % (lab,))
            seen.add(lab)
        n = len(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise UnknownElement("unknown element %r in relation" % (a,))
            if b not in index:
                raise UnknownElement("unknown element %r in relation" % (b,))
            leq[index[a]][index[b]] = True
        # Warshall closure
        for k in range(n):
            rk = leq[k]
            for i in range(n):
                if leq[i][k]:
                    ri = leq[i]
                    for j in range(n):
                        if rk[j]:
                            ri[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if leq[i][j] and leq[j][i]:
                    raise CycleDetected(
                        "%r and %r are comparable both ways" % (labels[i], labels[j])
                    )
        return cls(labels, leq, name=name)

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement("unknown element %r" % (label,)) from None

    def le(self, i, j):
        return self.leq[i][j]

    def chains(self, n, strict=False):
        """All weak (default) or strict n-chains, lexicographic.

        An n-chain has n+1 entries; chains(0) lists the singletons."""
        if n < 0:
            raise ValueError("chain degree must be >= 0")
        key = (n, strict)
        got = self._chains.get(key)
        if got is not None:
            return got
        out = []
        if strict:
            def extend(ch, last):
                if len(ch) == n + 1:
                    out.append(tuple(ch))
                    return
                for j in self.up[last]:
                    if j != last:
                        ch.append(j)
                        extend(ch, j)
                        ch.pop()
        else:
            def extend(ch, last):
                if len(ch) == n + 1:
                    out.append(tuple(ch))
                    return
                for j in self.up[last]:
                    ch.append(j)
                    extend(ch, j)
                    ch.pop()
        for i in range(self.n):
            extend([i], i)
        got = tuple(out)
        self._chains[key] = got
        return got

    def intervals(self):
        """All pairs (i, j) with i <= j, lexicographic."""
        if self._intervals is None:
            self._intervals = tuple(
                (i, j) for i in range(self.n) for j in range(self.n) if self.leq[i][j]
            )
        return self._intervals

    def chain_labels(self, chain):
        return tuple(self.labels[i] for i in chain)

    def chain_indices(self, labels):
        return tuple(self.index(lab) for lab in labels)

    def __repr__(self):
        return "Poset(%r, n=%d)" % (self.name, self.n)

    def to_dict(self):
        rels = [
            [self.labels[i], self.labels[j]]
            for i in range(self.n)
            for j in range(self.n)
            if i != j and self.leq[i][j]
        ]
        return {"name": self.name, "elements": list(self.labels), "relations": rels}

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict) or "elements" not in d:
            raise PosetError("poset document needs an 'elements' list")
        return cls.from_relations(
            d["elements"], d.get("relations", ()), name=d.get("name", "poset")
        )


def load_poset(path):
    with open(path, "r", encoding="utf-8") as fh:
        return Poset.from_dict(json.load(fh))


def save_poset(poset, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(poset.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def chain_poset(k):
    """Total order 0 < 1 < ... < k-1 on k elements."""
    labels = [str(i) for i in range(k)]
    pairs = [(labels[i], labels[i + 1]) for i in range(k - 1)]
    return Poset.from_relations(labels, pairs, name="chain%d" % k)


def diamond_poset():
    """bot < a, b < top; the nerve is contractible."""
    return Poset.from_relations(
        ["bot", "a", "b", "top"],
        [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        name="diamond",
    )


def crown_poset():
    """The 4-crown a, b < c, d; its nerve is a circle."""
    return Poset.from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        name="cr4",
    )


def sphere_poset():
    """Face poset of the boundary of the 3-simplex: 4 vertices, 6 edges,
    4 triangles ordered by inclusion (14 elements).  Its nerve is the
    barycentric subdivision of the 2-sphere."""
    verts = ["0", "1", "2", "3"]
    edges = ["01", "02", "03", "12", "13", "23"]
    faces = ["012", "013", "023", "123"]
    pairs = []
    for e in edges:
        for v in verts:
            if v in e:
                pairs.append((v, e))
    for f in faces:
        for e in edges:
            if set(e) <= set(f):
                pairs.append((e, f))
    return Poset.from_relations(verts + edges + faces, pairs, name="sphere14")
