"""Principal projective (representable) modules P_X."""

from ..category import hom_fws, hom_tws, compose_tws
from ..groups import TRIVIAL
from ..linalg import ExactMatrix
from .base import FunctorModule, TWS, FWS, FS, FSA, CategoryMismatch


class PrincipalProjective(FunctorModule):
    """Y -> free vector space on Hom(Y, X); morphisms act by precomposition."""

    def __init__(self, X, category=TWS):
        super().__init__(X.group, category)
        self.check_object(X)
        self.X = X
        self._pointed = category in (TWS, FSA)

    def _basis(self, Y):
        if self._pointed:
            return hom_tws(Y, self.X)
        return hom_fws(Y, self.X)

    def _compose(self, h, m):
        if self._pointed:
            return compose_tws(h, m)
        return h.compose_after(m.base)

    def _act(self, m):
        src_index = self.index(m.source)
        cols = [{src_index[self._compose(h, m)]: 1} for h in self.basis(m.target)]
        return ExactMatrix(len(src_index), len(cols), cols)

    def apply(self, m, v):
        m = self.normalize_morphism(m)
        if m in self._act_cache:
            return self._act_cache[m].apply(v)
        src_index = self.index(m.source)
        tgt = self.basis(m.target)
        out = {}
        for j, c in v.items():
            i = src_index[self._compose(tgt[j], m)]
            y = out.get(i, 0) + c
            if y:
                out[i] = y
            else:
                out.pop(i, None)
        return out

    def describe(self):
        return "P%s[%s]" % (self.X, self.category)


def principal_projective(X, category=TWS):
    if category == FS and X.group != TRIVIAL:
        raise CategoryMismatch("FS projectives need an object over the trivial group")
    return PrincipalProjective(X, category)
