"""Shifts, convolution, coinvariants, restriction and pushforward."""

import itertools

from ..category import FwsMorphism, LabeledSet, TwsMorphism, zero_labeled
from ..groups import TRIVIAL
from ..linalg import ConsistencyError, ExactMatrix, QuotientSpace, vec_add
from .base import FunctorModule, TWS, FWS, FS, FSA, CategoryMismatch


def shift_morphism(m, a):
    """(f, g) -> (f + {* -> *}, g + {* -> 0}) on (*, a) + source."""
    G = m.source.group
    base = FwsMorphism(
        m.source.prepend(a), m.target.prepend(a), (0,) + tuple(y + 1 for y in m.map)
    )
    return TwsMorphism(base, (G.zero,) + tuple(m.pointing))


class Shift(FunctorModule):
    """X -> M((*, a) + X), with the new point at position 0."""

    def __init__(self, M, a):
        if M.category not in (TWS, FWS, FS):
            raise CategoryMismatch("cannot shift a %s module" % M.category)
        if not M.group.contains(a):
            raise ValueError("shift element %r not in %s" % (a, M.group))
        super().__init__(M.group, M.category)
        self.inner = M
        self.a = a

    def _basis(self, X):
        return self.inner.basis(X.prepend(self.a))

    def _act(self, m):
        return self.inner.act(shift_morphism(m, self.a))

    def apply(self, m, v):
        m = self.normalize_morphism(m)
        return self.inner.apply(shift_morphism(m, self.a), v)

    def describe(self):
        return "shift(%s,%s)" % (self.group.format_element(self.a), self.inner.describe())


def shift(M, a):
    return Shift(M, a)


def restrict_morphism(m, src_positions, tgt_positions):
    """Restriction of m to src_positions -> tgt_positions (f maps one into the other)."""
    where = {y: k for k, y in enumerate(tgt_positions)}
    base = FwsMorphism(
        m.source.restrict(src_positions),
        m.target.restrict(tgt_positions),
        tuple(where[m.map[x]] for x in src_positions),
    )
    return TwsMorphism(base, tuple(m.pointing[x] for x in src_positions))


class Convolution(FunctorModule):
    """(M * N)(X) = sum over X = S + T of M(S) (x) N(T)."""

    def __init__(self, M, N):
        if M.group != N.group or M.category != N.category:
            raise CategoryMismatch("convolution needs modules over the same category")
        super().__init__(M.group, M.category)
        self.left = M
        self.right = N
        self._blocks = {}

    def blocks(self, X):
        """[(S, T, dim M(S), dim N(T), offset)], subsets ordered by bitmask."""
        hit = self._blocks.get(X)
        if hit is not None:
            return hit
        n = X.size
        out = []
        offset = 0
        for mask in range(1 << n):
            S = tuple(i for i in range(n) if mask >> i & 1)
            T = tuple(i for i in range(n) if not mask >> i & 1)
            dm = self.left.dim(X.restrict(S))
            dn = self.right.dim(X.restrict(T)) if dm else 0
            out.append((S, T, dm, dn, offset))
            offset += dm * dn
        self._blocks[X] = out
        return out

    def _basis(self, X):
        labels = []
        for S, T, dm, dn, _ in self.blocks(X):
            for i in range(dm):
                for j in range(dn):
                    labels.append((S, i, j))
        return labels

    def _act(self, m):
        src, tgt = m.source, m.target
        src_blocks = {S: (dm, dn, off) for S, _, dm, dn, off in self.blocks(src)}
        cols = [None] * self.dim(tgt)
        for S, T, dm, dn, off in self.blocks(tgt):
            if not dm * dn:
                continue
            Sset = set(S)
            S2 = tuple(x for x in range(src.size) if m.map[x] in Sset)
            T2 = tuple(x for x in range(src.size) if m.map[x] not in Sset)
            block = self.left.act(restrict_morphism(m, S2, S)).kron(
                self.right.act(restrict_morphism(m, T2, T))
            )
            _, _, off2 = src_blocks[S2]
            for j, c in enumerate(block.columns):
                cols[off + j] = {off2 + i: x for i, x in c.items()}
        return ExactMatrix(self.dim(src), len(cols), cols)

    def describe(self):
        return "conv(%s,%s)" % (self.left.describe(), self.right.describe())


def convolve(M, N):
    return Convolution(M, N)


class FwsRestriction(FunctorModule):
    """A pointed module viewed through the inclusion f -> (f, 0)."""

    def __init__(self, M):
        if M.category != TWS:
            raise CategoryMismatch("restriction expects a tws module")
        super().__init__(M.group, FWS)
        self.inner = M

    def _basis(self, X):
        return self.inner.basis(X)

    def _act(self, m):
        return self.inner.act(m)

    def apply(self, m, v):
        return self.inner.apply(self.normalize_morphism(m), v)

    def describe(self):
        return "res(%s)" % self.inner.describe()


def restrict_to_fws(M):
    return FwsRestriction(M)


def point_pointing(group, n, x, a):
    g = [group.zero] * n
    g[x] = a
    return tuple(g)


class Coinvariants(FunctorModule):
    """M(X) modulo the A^X action through the pointings (id, g)."""

    def __init__(self, M):
        if M.category != TWS:
            raise CategoryMismatch("coinvariants expect a tws module")
        super().__init__(M.group, FWS)
        self.inner = M
        self._quotients = {}

    def quotient(self, X):
        hit = self._quotients.get(X)
        if hit is not None:
            return hit
        M = self.inner
        n = M.dim(X)
        relations = []
        if n:
            ident = FwsMorphism(X, X, tuple(range(X.size)))
            for x in range(X.size):
                for a in self.group.generators():
                    rho = M.act(TwsMorphism(ident, point_pointing(self.group, X.size, x, a)))
                    for j, c in enumerate(rho.columns):
                        relations.append(vec_add({j: 1}, c, -1))
        hit = QuotientSpace(n, relations)
        self._quotients[X] = hit
        return hit

    def _basis(self, X):
        inner = self.inner.basis(X)
        return [inner[i] for i in self.quotient(X).basis_indices]

    def _act(self, m):
        q_src = self.quotient(m.source)
        q_tgt = self.quotient(m.target)
        A = self.inner.act(m)
        for r in q_tgt.relations.pivots.values():
            if q_src.project(A.apply(r)):
                raise ConsistencyError("induced action on coinvariants is not well defined")
        cols = [q_src.project(A.columns[i]) for i in q_tgt.basis_indices]
        return ExactMatrix(q_src.dim, len(cols), cols)

    def describe(self):
        return "coinv(%s)" % self.inner.describe()


def coinvariants(M):
    return Coinvariants(M)


class Pushforward(FunctorModule):
    """u_* M: a plain set X goes to the sum over labelings l of M(X, l)."""

    def __init__(self, M):
        if M.category == TWS:
            M = FwsRestriction(M)
        if M.category != FWS:
            raise CategoryMismatch("pushforward expects an fws module")
        super().__init__(TRIVIAL, FS)
        self.inner = M
        self.label_group = M.group
        self._layout = {}
        self._groupings = {}

    def layout(self, n):
        """(labelings, offsets, dims) for plain sets of size n."""
        hit = self._layout.get(n)
        if hit is not None:
            return hit
        labelings = list(itertools.product(self.label_group.elements, repeat=n))
        offsets = {}
        dims = {}
        off = 0
        for l in labelings:
            d = self.inner.dim(LabeledSet(self.label_group, l))
            offsets[l] = off
            dims[l] = d
            off += d
        hit = (labelings, offsets, dims)
        self._layout[n] = hit
        return hit

    def _basis(self, X):
        labelings, _, _ = self.layout(X.size)
        out = []
        for l in labelings:
            for b in self.inner.basis(LabeledSet(self.label_group, l)):
                out.append((l, b))
        return out

    def preimages(self, fmap, n_src, n_tgt):
        """Map each target labeling to the source labelings pushing forward to it."""
        key = (fmap, n_src)
        hit = self._groupings.get(key)
        if hit is not None:
            return hit
        G = self.label_group
        hit = {}
        for l2 in itertools.product(G.elements, repeat=n_src):
            sums = [G.zero] * n_tgt
            for x, y in enumerate(fmap):
                sums[y] = G.add(sums[y], l2[x])
            hit.setdefault(tuple(sums), []).append(l2)
        self._groupings[key] = hit
        return hit

    def _inner_morphism(self, l2, l, fmap):
        G = self.label_group
        return FwsMorphism(LabeledSet(G, l2), LabeledSet(G, l), fmap)

    def _act(self, m):
        n_src, n_tgt = m.source.size, m.target.size
        _, off_src, _ = self.layout(n_src)
        labelings, off_tgt, dims_tgt = self.layout(n_tgt)
        pre = self.preimages(m.map, n_src, n_tgt)
        cols = [dict() for _ in range(self.dim(m.target))]
        for l in labelings:
            if not dims_tgt[l]:
                continue
            for l2 in pre.get(l, ()):
                block = self.inner.act(self._inner_morphism(l2, l, m.map))
                o2 = off_src[l2]
                for j, c in enumerate(block.columns):
                    col = cols[off_tgt[l] + j]
                    for i, x in c.items():
                        col[o2 + i] = x
        return ExactMatrix(self.dim(m.source), len(cols), cols)

    def apply(self, m, v):
        m = self.normalize_morphism(m)
        n_src, n_tgt = m.source.size, m.target.size
        _, off_src, _ = self.layout(n_src)
        labelings, off_tgt, dims_tgt = self.layout(n_tgt)
        pre = self.preimages(m.map, n_src, n_tgt)
        out = {}
        for l in labelings:
            d = dims_tgt[l]
            if not d:
                continue
            o = off_tgt[l]
            part = {j - o: c for j, c in v.items() if o <= j < o + d}
            if not part:
                continue
            for l2 in pre.get(l, ()):
                img = self.inner.apply(self._inner_morphism(l2, l, m.map), part)
                o2 = off_src[l2]
                for i, x in img.items():
                    out[o2 + i] = x
        return out

    def block_offset(self, labeling):
        return self.layout(len(labeling))[1][tuple(labeling)]

    def describe(self):
        return "push(%s)" % self.inner.describe()


def pushforward_u(M):
    return Pushforward(M)


def plain_set(n):
    return zero_labeled(TRIVIAL, n)
