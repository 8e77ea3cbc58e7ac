"""Computed cohomology sets, maps between them, and exactness checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


class PointedSet:
    """Classes of cocycles, each stored by its canonical (lexicographically least) representative.

    ``lookup`` maps every enumerated cocycle to its class index, so any
    cocycle-level construction can be canonicalized with :meth:`classify`.
    """

    def __init__(self, label, reps, lookup, basepoint=0, neutral=None, mul=None):
        self.label = label
        self.reps = list(reps)
        self.lookup = lookup
        self.basepoint = basepoint
        self.neutral = None if neutral is None else frozenset(neutral)
        self.mul = mul  # optional group table on class indices
        if self.neutral is not None and basepoint not in self.neutral:
            raise ValueError("basepoint must be neutral")

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(range(len(self.reps)))

    def __repr__(self):
        return f"<PointedSet {self.label} |{len(self)}|>"

    def classify(self, cocycle):
        try:
            return self.lookup[tuple(cocycle)]
        except KeyError:
            raise ValueError(f"{cocycle} is not a cocycle of {self.label}") from None

    def members(self, k):
        return [z for z, i in self.lookup.items() if i == k]

    @property
    def is_group(self):
        return self.mul is not None


class ClassGroup(PointedSet):
    """An abelian group of classes; index 0 is the zero class."""

    def __init__(self, label, reps, lookup, add_table, degree=None):
        super().__init__(label, reps, lookup, 0, None, add_table)
        self.degree = degree
        self.neg_table = [row.index(0) for row in add_table]

    def add(self, i, j):
        return self.mul[i][j]

    def neg(self, i):
        return self.neg_table[i]

    def sub(self, i, j):
        return self.mul[i][self.neg_table[j]]


@dataclass
class CohMap:
    source: PointedSet
    target: PointedSet
    images: tuple
    label: str

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != len(self.source):
            raise ValueError(f"{self.label}: images not total")

    def __call__(self, i):
        return self.images[i]

    @property
    def image(self):
        return frozenset(self.images)

    @property
    def kernel(self):
        """Preimage of the target basepoint."""
        b = self.target.basepoint
        return frozenset(i for i, v in enumerate(self.images) if v == b)

    @property
    def is_pointed(self):
        return self.images[self.source.basepoint] == self.target.basepoint

    @property
    def is_injective(self):
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self):
        return len(set(self.images)) == len(self.target)

    @property
    def is_bijective(self):
        return self.is_injective and self.is_surjective

    def is_homomorphism(self):
        s, t = self.source, self.target
        if s.mul is None or t.mul is None:
            return None
        m = self.images
        return all(
            m[s.mul[a][b]] == t.mul[m[a]][m[b]] for a in range(len(s)) for b in range(len(s))
        )

    def compose(self, inner, label=None):
        """self ∘ inner"""
        return CohMap(
            inner.source,
            self.target,
            tuple(self.images[v] for v in inner.images),
            label or f"{self.label}∘{inner.label}",
        )

    def inverse(self, label=None):
        if not self.is_bijective:
            raise ValueError(f"{self.label} is not bijective")
        inv = [None] * len(self.target)
        for i, v in enumerate(self.images):
            inv[v] = i
        return CohMap(self.target, self.source, tuple(inv), label or f"{self.label}^-1")


def exact_at(incoming, outgoing):
    """Pointed-set exactness at the middle term: image(incoming) == kernel(outgoing).

    Returns (ok, witness) where the witness is a class index in the symmetric
    difference, or None.
    """
    im, ker = incoming.image, outgoing.kernel
    if im == ker:
        return True, None
    return False, min(im ^ ker)


def injective_pointed(m):
    """Exactness of 1 -> A -> B at A: the kernel is the basepoint alone."""
    ker = m.kernel
    ok = ker == frozenset([m.source.basepoint])
    return ok, (None if ok else min(ker - {m.source.basepoint}))


@dataclass
class Joint:
    name: str
    ok: bool
    witness: Optional[int] = None
    note: str = ""


@dataclass
class SequenceReport:
    maps: list = field(default_factory=list)
    joints: list = field(default_factory=list)
    extras: list = field(default_factory=list)

    @property
    def ok(self):
        return all(j.ok for j in self.joints) and all(j.ok for j in self.extras)

    def failures(self):
        return [j for j in self.joints + self.extras if not j.ok]

    def joint(self, name):
        for j in self.joints + self.extras:
            if j.name == name:
                return j
        raise KeyError(name)
