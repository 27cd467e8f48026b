"""The orbit modules V0-tilde and V0-bar.

Basis vectors are orbits of functions X -> A (resp. X -> A/H, with
H = <labels>) under diagonal translation.  Each orbit is stored by its
representative vanishing at position 0; for a shifted object position 0 is
the added point.
"""

import itertools

from ..groups import subgroup_and_quotient
from ..linalg import ExactMatrix
from .base import FunctorModule, TWS


class V0Tilde(FunctorModule):
    """Q{A^X / A} when |X| >= 3 and the labels sum to 0, else 0."""

    def __init__(self, group):
        super().__init__(group, TWS)

    def _nonzero_at(self, X):
        return X.size >= 3 and X.total == self.group.zero

    def _basis(self, X):
        if not self._nonzero_at(X):
            return ()
        zero = self.group.zero
        return [(zero,) + rest for rest in itertools.product(self.group.elements, repeat=X.size - 1)]

    def _act(self, m):
        src, tgt = m.source, m.target
        n_src = self.dim(src)
        if not self.dim(tgt):
            return ExactMatrix(n_src, 0)
        G = self.group
        src_index = self.index(src)
        cols = []
        for h in self.basis(tgt):
            pulled = [G.add(h[fx], g) for fx, g in zip(m.map, m.pointing)]
            base = pulled[0]
            rep = tuple(G.sub(v, base) for v in pulled)
            cols.append({src_index[rep]: 1})
        return ExactMatrix(n_src, len(cols), cols)

    def describe(self):
        return "v0tilde"


class V0Bar(FunctorModule):
    """Q{(A/<labels>)^X / A} when |X| >= 1 and the labels sum to 0, else 0."""

    def __init__(self, group):
        super().__init__(group, TWS)

    def _nonzero_at(self, X):
        return X.size >= 1 and X.total == self.group.zero

    def quotient(self, X):
        return subgroup_and_quotient(self.group, X.labels)[1]

    def _basis(self, X):
        if not self._nonzero_at(X):
            return ()
        Q = self.quotient(X)
        zero = self.group.zero
        return [(zero,) + rest for rest in itertools.product(Q.representatives, repeat=X.size - 1)]

    def _act(self, m):
        src, tgt = m.source, m.target
        n_src = self.dim(src)
        if not self.dim(tgt):
            return ExactMatrix(n_src, 0)
        G = self.group
        Q = self.quotient(src)
        src_index = self.index(src)
        cols = []
        for alpha in self.basis(tgt):
            pulled = [G.add(alpha[fx], g) for fx, g in zip(m.map, m.pointing)]
            base = pulled[0]
            rep = tuple(Q.reduce(G.sub(v, base)) for v in pulled)
            cols.append({src_index[rep]: 1})
        return ExactMatrix(n_src, len(cols), cols)

    def describe(self):
        return "v0bar"


def v0_tilde(group):
    return V0Tilde(group)


def v0_bar(group):
    return V0Bar(group)


def v0_quotient_matrix(tilde, bar, X):
    """Matrix of the quotient q: V0-tilde(X) -> V0-bar(X), reduction mod H."""
    if tilde.group != bar.group:
        raise ValueError("modules over different groups")
    n_t = tilde.dim(X)
    n_b = bar.dim(X)
    if not n_t:
        return ExactMatrix(n_b, 0)
    Q = bar.quotient(X)
    idx = bar.index(X)
    cols = [{idx[tuple(Q.reduce(v) for v in h)]: 1} for h in tilde.basis(X)]
    return ExactMatrix(n_b, n_t, cols)
