"""Contravariant functor modules with memoized values and actions."""

from ..category import FwsMorphism, TwsMorphism, LabeledSet, as_tws
from ..groups import TRIVIAL
from ..linalg import ExactMatrix

TWS = "tws"
FWS = "fws"
FS = "fs"
FSA = "fsA"
CATEGORIES = (TWS, FWS, FS, FSA)


class CategoryMismatch(ValueError):
    """An object or morphism does not belong to the module's category."""


class FunctorModule:
    """A contravariant functor from a labeled-set category to Q-vector spaces.

    Subclasses implement ``_basis(X)`` returning a tuple of hashable basis
    labels and ``_act(m)`` returning the matrix of m^*: M(target) -> M(source),
    of shape dim M(source) x dim M(target).  Morphisms reach ``_act`` as
    pointed morphisms; for unpointed categories the pointing is zero.
    """

    def __init__(self, group, category):
        if category not in CATEGORIES:
            raise ValueError("unknown category %r" % (category,))
        if category == FS and group != TRIVIAL:
            raise ValueError("FS modules live over the trivial group")
        self.group = group
        self.category = category
        self._basis_cache = {}
        self._index_cache = {}
        self._act_cache = {}

    # -- objects -----------------------------------------------------------
    def check_object(self, X):
        if not isinstance(X, LabeledSet):
            raise CategoryMismatch("not a labeled set: %r" % (X,))
        if X.group != self.group:
            raise CategoryMismatch("object over %s, module over %s" % (X.group, self.group))
        if self.category == FSA and not X.is_zero_labeled():
            raise CategoryMismatch("FS_A objects are zero-labeled, got %s" % (X,))

    def basis(self, X):
        hit = self._basis_cache.get(X)
        if hit is None:
            self.check_object(X)
            hit = tuple(self._basis(X))
            self._basis_cache[X] = hit
        return hit

    def index(self, X):
        hit = self._index_cache.get(X)
        if hit is None:
            hit = {b: i for i, b in enumerate(self.basis(X))}
            self._index_cache[X] = hit
        return hit

    def dim(self, X):
        return len(self.basis(X))

    # -- morphisms ---------------------------------------------------------
    def normalize_morphism(self, m):
        if not isinstance(m, (FwsMorphism, TwsMorphism)):
            raise CategoryMismatch("not a morphism: %r" % (m,))
        m = as_tws(m)
        self.check_object(m.source)
        self.check_object(m.target)
        if self.category in (FWS, FS) and not m.is_unpointed():
            raise CategoryMismatch("%s modules only accept unpointed morphisms" % self.category)
        return m

    def act(self, m):
        m = self.normalize_morphism(m)
        hit = self._act_cache.get(m)
        if hit is None:
            hit = self._act(m)
            expected = (self.dim(m.source), self.dim(m.target))
            if hit.shape != expected:
                raise AssertionError("action has shape %s, expected %s" % (hit.shape, expected))
            self._act_cache[m] = hit
        return hit

    def apply(self, m, v):
        """m^* applied to a sparse vector of M(target)."""
        return self.act(m).apply(v)

    def _basis(self, X):
        raise NotImplementedError

    def _act(self, m):
        raise NotImplementedError

    def describe(self):
        return self.__class__.__name__


class ZeroModule(FunctorModule):
    def __init__(self, group, category=TWS):
        super().__init__(group, category)

    def _basis(self, X):
        return ()

    def _act(self, m):
        return ExactMatrix(0, 0)

    def describe(self):
        return "zero"


def zero_module(group, category=TWS):
    return ZeroModule(group, category)


def eval_module(M, X):
    """(dim, basis labels) of M at X."""
    b = M.basis(X)
    return len(b), b


def act_matrix(M, m):
    return M.act(m)
