"""Objects and morphisms of FWS_A and its pointed version.

A labeled set is a tuple of labels; position ``i`` is the i-th point.  An
FWS morphism is a label-compatible surjection given by the list of images.
A pointed morphism additionally carries a pointing, an arbitrary function
from the source into A.  Composition of pointed morphisms is

    (f2, g2) o (f1, g1) = (f2 o f1, g1 + g2 o f1).
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

from .groups import FiniteAbelianGroup


class CompositionError(ValueError):
    pass


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledSet:
    group: FiniteAbelianGroup
    labels: tuple

    @property
    def size(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    @cached_property
    def total(self):
        return self.group.total(self.labels)

    def multidegree(self):
        """Count of each group element among the labels, in element order."""
        counts = [0] * self.group.order
        for a in self.labels:
            counts[self.group.index(a)] += 1
        return tuple(counts)

    def canonical(self):
        return LabeledSet(self.group, tuple(sorted(self.labels)))

    def is_canonical(self):
        return list(self.labels) == sorted(self.labels)

    def restrict(self, positions):
        return LabeledSet(self.group, tuple(self.labels[p] for p in positions))

    def prepend(self, label):
        """(*, label) disjoint-union self, with * at position 0."""
        return LabeledSet(self.group, (label,) + self.labels)

    def is_zero_labeled(self):
        z = self.group.zero
        return all(a == z for a in self.labels)

    def __str__(self):
        return "(" + ",".join(self.group.format_element(a) for a in self.labels) + ")"


def zero_labeled(group, n):
    return LabeledSet(group, (group.zero,) * n)


def object_from_multidegree(group, f):
    """Canonical object X_f with f(a) points labeled a."""
    labels = []
    for a, k in zip(group.elements, f):
        labels.extend([a] * k)
    return LabeledSet(group, tuple(labels))


@dataclass(frozen=True)
class FwsMorphism:
    source: LabeledSet
    target: LabeledSet
    map: tuple

    def __post_init__(self):
        validate_fws(self.source, self.target, self.map)

    def fiber(self, y):
        return [x for x, fx in enumerate(self.map) if fx == y]

    def compose_after(self, other):
        """self o other."""
        if other.target != self.source:
            raise CompositionError("cannot compose: %s != %s" % (other.target, self.source))
        return FwsMorphism(other.source, self.target, tuple(self.map[i] for i in other.map))


def validate_fws(source, target, fmap):
    if source.group != target.group:
        raise MorphismError("source and target live over different groups")
    if len(fmap) != source.size:
        raise MorphismError("map has %d entries for a source of size %d" % (len(fmap), source.size))
    group = source.group
    sums = [group.zero] * target.size
    hit = [False] * target.size
    for x, y in enumerate(fmap):
        if not 0 <= y < target.size:
            raise MorphismError("map value %r out of range" % (y,))
        hit[y] = True
        sums[y] = group.add(sums[y], source.labels[x])
    if not all(hit):
        raise MorphismError("map %r is not surjective" % (fmap,))
    if tuple(sums) != target.labels:
        raise MorphismError("fiber label sums %r do not match target labels" % (sums,))


@dataclass(frozen=True)
class TwsMorphism:
    base: FwsMorphism
    pointing: tuple

    def __post_init__(self):
        group = self.base.source.group
        if len(self.pointing) != self.base.source.size:
            raise MorphismError("pointing has the wrong length")
        for a in self.pointing:
            if not group.contains(a):
                raise MorphismError("pointing value %r not in %s" % (a, group))

    @property
    def source(self):
        return self.base.source

    @property
    def target(self):
        return self.base.target

    @property
    def map(self):
        return self.base.map

    def is_unpointed(self):
        z = self.source.group.zero
        return all(a == z for a in self.pointing)


def as_tws(m):
    if isinstance(m, TwsMorphism):
        return m
    if isinstance(m, FwsMorphism):
        return TwsMorphism(m, (m.source.group.zero,) * m.source.size)
    raise TypeError("not a morphism: %r" % (m,))


def identity(X, pointed=True):
    base = FwsMorphism(X, X, tuple(range(X.size)))
    return as_tws(base) if pointed else base


def compose_tws(m2, m1):
    """m2 o m1 for m1: X -> Y and m2: Y -> Z."""
    m1, m2 = as_tws(m1), as_tws(m2)
    if m1.target != m2.source:
        raise CompositionError("cannot compose: %s != %s" % (m1.target, m2.source))
    group = m1.source.group
    base = FwsMorphism(m1.source, m2.target, tuple(m2.map[i] for i in m1.map))
    pointing = tuple(group.add(g1, m2.pointing[fx]) for g1, fx in zip(m1.pointing, m1.map))
    return TwsMorphism(base, pointing)


def enumerate_objects(group, n):
    """One canonical representative per isomorphism class of size n."""
    return [
        LabeledSet(group, labels)
        for labels in itertools.combinations_with_replacement(group.elements, n)
    ]


def enumerate_all_objects(group, max_size, min_size=0):
    out = []
    for n in range(min_size, max_size + 1):
        out.extend(enumerate_objects(group, n))
    return out


def surjections(n, k):
    """All surjective maps [n] -> [k] as tuples, in lexicographic order."""
    if k == 0:
        return [()] if n == 0 else []
    if n < k:
        return []
    out = []
    cur = [0] * n
    counts = [0] * k

    def rec(i, uncovered):
        if n - i < uncovered:
            return
        if i == n:
            out.append(tuple(cur))
            return
        for y in range(k):
            cur[i] = y
            counts[y] += 1
            rec(i + 1, uncovered - (counts[y] == 1))
            counts[y] -= 1

    rec(0, k)
    return out


_SURJ_CACHE = {}


def _surj(n, k):
    key = (n, k)
    if key not in _SURJ_CACHE:
        _SURJ_CACHE[key] = surjections(n, k)
    return _SURJ_CACHE[key]


_HOM_CACHE = {}


def hom_fws(X, Y):
    """All label-compatible surjections X -> Y."""
    if X.group != Y.group:
        raise MorphismError("objects over different groups")
    key = (X, Y)
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return hit
    out = []
    if X.size >= Y.size and X.total == Y.total:
        group = X.group
        for fmap in _surj(X.size, Y.size):
            sums = [group.zero] * Y.size
            for x, y in enumerate(fmap):
                sums[y] = group.add(sums[y], X.labels[x])
            if tuple(sums) == Y.labels:
                out.append(FwsMorphism(X, Y, fmap))
    out = tuple(out)
    _HOM_CACHE[key] = out
    return out


def pointings(group, n):
    return itertools.product(group.elements, repeat=n)


def hom_tws(X, Y):
    """All pairs (f, g) with f in hom_fws(X, Y) and g: X -> A arbitrary."""
    base = hom_fws(X, Y)
    return tuple(
        TwsMorphism(f, g) for f in base for g in pointings(X.group, X.size)
    )
