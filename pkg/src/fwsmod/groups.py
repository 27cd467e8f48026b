"""Finite abelian groups presented as products of cyclic groups.

Elements are plain tuples of residues, one per cyclic factor.  The trivial
group has no factors and a single element ``()``.
"""

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

from .cyclotomic import lcm, root_of_unity


class GroupSpecError(ValueError):
    """Raised for malformed group, element or label literals."""


@dataclass(frozen=True)
class FiniteAbelianGroup:
    cyclic_orders: tuple = ()

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        for n in orders:
            if n < 2:
                raise GroupSpecError("cyclic factor of order %d < 2" % n)
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self):
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out

    @property
    def exponent(self):
        return lcm(*self.cyclic_orders)

    @property
    def rank(self):
        return len(self.cyclic_orders)

    @cached_property
    def elements(self):
        """All elements in lexicographic order; the identity comes first."""
        return tuple(itertools.product(*(range(n) for n in self.cyclic_orders)))

    @cached_property
    def _index(self):
        return {a: i for i, a in enumerate(self.elements)}

    def index(self, a):
        return self._index[a]

    @property
    def zero(self):
        return (0,) * self.rank

    def generators(self):
        """The unit vector of each cyclic factor."""
        out = []
        for k in range(self.rank):
            g = [0] * self.rank
            g[k] = 1
            out.append(tuple(g))
        return out

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.cyclic_orders))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.cyclic_orders))

    def sub(self, a, b):
        return tuple((x - y) % n for x, y, n in zip(a, b, self.cyclic_orders))

    def total(self, elems):
        out = self.zero
        for a in elems:
            out = self.add(out, a)
        return out

    def element_order(self, a):
        out = 1
        for x, n in zip(a, self.cyclic_orders):
            out = lcm(out, n // _gcd(x, n))
        return out

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(x, int) and 0 <= x < n for x, n in zip(a, self.cyclic_orders))
        )

    def format_element(self, a):
        return ".".join(str(x) for x in a) if a else "0"

    def parse_element(self, text):
        return parse_element(self, text)

    def __str__(self):
        if not self.cyclic_orders:
            return "1"
        return "x".join("Z%d" % n for n in self.cyclic_orders)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


TRIVIAL = FiniteAbelianGroup(())

_FACTOR = re.compile(r"Z(\d+)$")


def parse_group(spec):
    """Parse ``"1"`` or ``"Z<n>xZ<m>..."`` into a group."""
    spec = spec.strip()
    if spec == "1":
        return TRIVIAL
    if not spec:
        raise GroupSpecError("empty group spec")
    orders = []
    for token in spec.split("x"):
        m = _FACTOR.match(token)
        if not m:
            raise GroupSpecError("bad group factor %r in %r" % (token, spec))
        n = int(m.group(1))
        if n < 2:
            raise GroupSpecError("cyclic factor %r has order < 2" % token)
        orders.append(n)
    return FiniteAbelianGroup(tuple(orders))


def parse_element(group, text):
    """Parse a dot-separated element literal such as ``1.0.3``."""
    text = text.strip()
    if group.rank == 0:
        if text in ("0", "e", ""):
            return ()
        raise GroupSpecError("bad element %r for trivial group" % text)
    parts = text.split(".")
    if len(parts) != group.rank:
        raise GroupSpecError(
            "element %r needs %d coordinates for %s" % (text, group.rank, group)
        )
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise GroupSpecError("bad element literal %r" % text) from None
    for x, n in zip(coords, group.cyclic_orders):
        if not 0 <= x < n:
            raise GroupSpecError("coordinate %d of %r out of range [0, %d)" % (x, text, n))
    return coords


def parse_labels(group, text):
    """Parse a comma-separated list of element literals; ``""`` is empty."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_element(group, t) for t in text.split(","))


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    generators: frozenset
    element_list: tuple

    @property
    def order(self):
        return len(self.element_list)

    def __contains__(self, a):
        return a in self._members

    @cached_property
    def _members(self):
        return frozenset(self.element_list)


@dataclass(frozen=True)
class QuotientIndex:
    """Coset labelling of A / H by lexicographically minimal representatives."""

    subgroup: Subgroup
    representatives: tuple
    coset_of: dict = field(compare=False, hash=False)

    @property
    def size(self):
        return len(self.representatives)

    def reduce(self, a):
        """Minimal representative of the coset of a."""
        return self.representatives[self.coset_of[a]]


_SUBGROUP_CACHE = {}


def subgroup_and_quotient(group, gens):
    """Closure of ``gens`` together with the coset indexing of A / <gens>."""
    key = (group, frozenset(gens))
    hit = _SUBGROUP_CACHE.get(key)
    if hit is not None:
        return hit
    members = {group.zero}
    frontier = [group.zero]
    gens = [g for g in key[1] if g != group.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.add(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    H = Subgroup(group, key[1], tuple(sorted(members)))
    coset_of = {}
    reps = []
    for a in group.elements:  # lexicographic, so the first hit is the minimum
        if a in coset_of:
            continue
        idx = len(reps)
        reps.append(a)
        for h in H.element_list:
            coset_of[group.add(a, h)] = idx
    Q = QuotientIndex(H, tuple(reps), coset_of)
    _SUBGROUP_CACHE[key] = (H, Q)
    return H, Q


@dataclass(frozen=True)
class Character:
    """chi(a) = prod_k zeta_{n_k} ** (e_k * a_k) with e_k = target_root_exponents[k]."""

    group: FiniteAbelianGroup
    target_root_exponents: tuple

    def exponent_at(self, a):
        """k such that chi(a) = zeta_e ** k, where e is the group exponent."""
        e = self.group.exponent
        return sum(
            x * k * (e // n)
            for x, k, n in zip(a, self.target_root_exponents, self.group.cyclic_orders)
        ) % e

    def __call__(self, a):
        return root_of_unity(self.group.exponent, self.exponent_at(a))

    def conjugate(self):
        return Character(self.group, self.group.neg(self.target_root_exponents))

    def as_element(self):
        """The matching element of the dual group (same cyclic orders)."""
        return self.target_root_exponents


def characters(group):
    """All |A| characters, indexed like the elements of A."""
    return [Character(group, a) for a in group.elements]


def dual_group(group):
    """A^vee, presented with the same cyclic factors as A."""
    return group
