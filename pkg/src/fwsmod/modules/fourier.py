"""Fourier transform of FS_A-modules into FWS-modules over the dual group.

For a module M over zero-labeled sets, A^X acts on M(X) through the
pointings (id, g).  The value of the transform at (X, l), l: X -> A^vee, is
the l-isotypic part of M(X).  Isotypic parts are found one point at a
time: the projectors

    e_chi^(y) = 1/|A| sum_a conj(chi(a)) act(id, a at y)

commute, so splitting by the character at point 0, then point 1, and so on
reaches every leaf l without ever forming an |A|^n-term sum.
"""

import itertools
from fractions import Fraction

from ..category import FwsMorphism, TwsMorphism, zero_labeled, LabeledSet
from ..cyclotomic import CyclotomicNumber, simplify
from ..groups import characters, dual_group, Character
from ..linalg import (
    ConsistencyError,
    ExactMatrix,
    coordinates_in_basis,
    reduced_column_basis,
    vec_add,
)
from .base import FunctorModule, TWS, FWS, FSA, CategoryMismatch
from .constructions import point_pointing


def _clean(v):
    return {k: simplify(x) for k, x in v.items() if x}


class FourierTransform(FunctorModule):
    def __init__(self, M):
        if M.category not in (TWS, FSA):
            raise CategoryMismatch("fourier expects an FS_A (or tws) module")
        super().__init__(dual_group(M.group), FWS)
        self.inner = M
        self.base_group = M.group
        self.field_order = max(M.group.exponent, 1)
        self._chars = characters(M.group)
        self._conj_values = {}
        self._leaves = {}

    def _coeffs(self, chi):
        """conj(chi(a)) / |A| for every a."""
        hit = self._conj_values.get(chi)
        if hit is None:
            n = self.base_group.order
            hit = [chi.conjugate()(a) * Fraction(1, n) for a in self.base_group.elements]
            self._conj_values[chi] = hit
        return hit

    def point_projector(self, n, y, chi, v):
        """e_chi^(y) applied to v in M(zero-labeled set of size n)."""
        G = self.base_group
        Z = zero_labeled(G, n)
        ident = FwsMorphism(Z, Z, tuple(range(n)))
        out = {}
        for a, c in zip(G.elements, self._coeffs(chi)):
            w = self.inner.apply(TwsMorphism(ident, point_pointing(G, n, y, a)), v)
            out = vec_add(out, w, c)
        return out

    def project(self, n, l, v):
        """e_l applied to v, as a product of per-point projectors."""
        for y, k in enumerate(l):
            v = self.point_projector(n, y, Character(self.base_group, k), v)
            if not v:
                break
        return _clean(v)

    def leaves(self, n):
        """{l: (leads, reduced basis columns)} over nonzero isotypic parts."""
        hit = self._leaves.get(n)
        if hit is not None:
            return hit
        Z = zero_labeled(self.base_group, n)
        d = self.inner.dim(Z)
        nodes = {(): [{i: 1} for i in range(d)]} if d else {}
        for y in range(n):
            nxt = {}
            for prefix, vecs in nodes.items():
                for chi in self._chars:
                    cols = [self.point_projector(n, y, chi, v) for v in vecs]
                    r, basis, _ = reduced_column_basis(cols, d)
                    if r:
                        nxt[prefix + (chi.as_element(),)] = [_clean(c) for c in basis.columns]
            nodes = nxt
        out = {}
        total = 0
        for l, vecs in nodes.items():
            leads = [min(v) for v in vecs]
            out[l] = (leads, vecs)
            total += len(vecs)
        if total != d:
            raise ConsistencyError("isotypic parts have total dim %d != %d" % (total, d))
        self._leaves[n] = out
        return out

    def decompose(self, n):
        """{l: dim of the l-isotypic part of M(zero-labeled n-set)}."""
        return {l: len(v[1]) for l, v in self.leaves(n).items()}

    def isotypic_basis(self, X):
        leaf = self.leaves(X.size).get(X.labels)
        if leaf is None:
            return [], []
        return leaf

    def _basis(self, X):
        return tuple(self.isotypic_basis(X)[0])

    def _act(self, m):
        src, tgt = m.source, m.target
        G = self.base_group
        inner_m = FwsMorphism(
            zero_labeled(G, src.size), zero_labeled(G, tgt.size), m.map
        )
        leads, _ = self.isotypic_basis(src)
        _, vecs = self.isotypic_basis(tgt)
        cols = []
        for v in vecs:
            w = self.project(src.size, src.labels, self.inner.apply(inner_m, v))
            cols.append(coordinates_in_basis(w, leads))
        return ExactMatrix(len(leads), len(cols), cols)

    def describe(self):
        return "fourier(%s)" % self.inner.describe()


def fourier(M):
    return FourierTransform(M)


def projector_matrix(M, n, l):
    """Direct isotypic projector 1/|A|^n sum_g conj(l(g)) act(id, g) on M(zero n-set).

    Independent of the iterative splitting; used to cross-check it.
    """
    G = M.group
    Z = zero_labeled(G, n)
    d = M.dim(Z)
    ident = FwsMorphism(Z, Z, tuple(range(n)))
    chis = [Character(G, k).conjugate() for k in l]
    scale = Fraction(1, G.order ** n)
    cols = [dict() for _ in range(d)]
    for g in itertools.product(G.elements, repeat=n):
        c = CyclotomicNumber.rational(max(G.exponent, 1), scale)
        for chi, a in zip(chis, g):
            c = c * chi(a)
        A = M.act(TwsMorphism(ident, g))
        for j in range(d):
            cols[j] = vec_add(cols[j], A.columns[j], c)
    return ExactMatrix(d, d, [_clean(c) for c in cols])


def dual_labeled_set(group, labels):
    """An object of FWS over the dual group (presented like the group itself)."""
    return LabeledSet(dual_group(group), tuple(labels))
