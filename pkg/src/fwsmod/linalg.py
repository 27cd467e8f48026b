"""Exact sparse linear algebra over Q and Q(zeta_e).

Vectors are dicts ``{index: value}`` with no stored zeros.  Matrices are
stored by column since every map we build is described by the images of
basis vectors.  Entries are ints, Fractions or CyclotomicNumbers.
"""

import heapq
from fractions import Fraction
from math import gcd

from .cyclotomic import CyclotomicNumber


class ConsistencyError(RuntimeError):
    """An internal invariant of an exact computation failed."""


def is_rational_value(x):
    return isinstance(x, (int, Fraction))


def vec_add(u, v, c=1):
    """u + c * v as a new dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class ExactMatrix:
    """A rows x cols matrix stored as a list of sparse columns."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows, cols, columns=None):
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise ValueError("expected %d columns, got %d" % (cols, len(columns)))
        self.columns = [{k: x for k, x in c.items() if x} for c in columns]

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: 1} for i in range(n)])

    @classmethod
    def from_dense(cls, data, cols=None):
        data = [list(r) for r in data]
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        columns = [{} for _ in range(cols)]
        for i, r in enumerate(data):
            if len(r) != cols:
                raise ValueError("ragged matrix")
            for j, x in enumerate(r):
                if x:
                    columns[j][i] = x
        return cls(rows, cols, columns)

    @classmethod
    def from_columns(cls, rows, columns):
        return cls(rows, len(columns), list(columns))

    def entry(self, i, j):
        return self.columns[j].get(i, 0)

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                out[i][j] = x
        return out

    @property
    def shape(self):
        return (self.rows, self.cols)

    def nnz(self):
        return sum(len(c) for c in self.columns)

    def is_rational(self):
        return all(is_rational_value(x) for c in self.columns for x in c.values())

    def is_zero(self):
        return not any(self.columns)

    def transpose(self):
        cols = [{} for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, x in c.items():
                cols[i][j] = x
        return ExactMatrix(self.cols, self.rows, cols)

    def apply(self, v):
        """Matrix times sparse vector."""
        out = {}
        for j, c in v.items():
            for i, x in self.columns[j].items():
                y = out.get(i, 0) + c * x
                if y:
                    out[i] = y
                else:
                    out.pop(i, None)
        return out

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        return ExactMatrix(self.rows, other.cols, [self.apply(c) for c in other.columns])

    def __add__(self, other):
        self._check_same(other)
        return ExactMatrix(
            self.rows, self.cols, [vec_add(a, b) for a, b in zip(self.columns, other.columns)]
        )

    def __sub__(self, other):
        self._check_same(other)
        return ExactMatrix(
            self.rows, self.cols, [vec_add(a, b, -1) for a, b in zip(self.columns, other.columns)]
        )

    def scale(self, c):
        return ExactMatrix(self.rows, self.cols, [vec_scale(col, c) for col in self.columns])

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    def __repr__(self):
        return "ExactMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz())

    def select_columns(self, indices):
        return ExactMatrix(self.rows, len(indices), [self.columns[j] for j in indices])

    def kron(self, other):
        """Kronecker product; row (i, k) -> i * other.rows + k."""
        cols = []
        for a in self.columns:
            for b in other.columns:
                col = {}
                for i, x in a.items():
                    base = i * other.rows
                    for k, y in b.items():
                        col[base + k] = x * y
                cols.append(col)
        return ExactMatrix(self.rows * other.rows, self.cols * other.cols, cols)


def hstack(mats, rows=None):
    if rows is None:
        if not mats:
            raise ValueError("hstack of nothing needs rows")
        rows = mats[0].rows
    cols = []
    for m in mats:
        if m.rows != rows:
            raise ValueError("row mismatch in hstack")
        cols.extend(m.columns)
    return ExactMatrix(rows, len(cols), cols)


def vstack(mats, cols=None):
    if cols is None:
        cols = mats[0].cols
    out = [{} for _ in range(cols)]
    offset = 0
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in vstack")
        for j, c in enumerate(m.columns):
            for i, x in c.items():
                out[j][offset + i] = x
        offset += m.rows
    return ExactMatrix(offset, cols, out)


def block_diagonal(mats):
    rows = sum(m.rows for m in mats)
    cols = []
    offset = 0
    for m in mats:
        for c in m.columns:
            cols.append({offset + i: x for i, x in c.items()})
        offset += m.rows
    return ExactMatrix(rows, len(cols), cols)


class Echelon:
    """Incremental echelon basis over a field.

    Each stored vector has coefficient 1 at its lead index, which is its
    smallest index, and leads are distinct.  ``reduce`` returns the unique
    representative of v modulo the span with no support on lead indices.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, v):
        v = dict(v)
        piv = self.pivots
        heap = [k for k in v if k in piv]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            for j, pj in piv[k].items():
                y = v.get(j, 0) - c * pj
                if y:
                    if j not in v and j in piv:
                        heapq.heappush(heap, j)
                    v[j] = y
                else:
                    v.pop(j, None)
        return v

    def add(self, v):
        """Insert v; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        lead = min(r)
        c = r[lead]
        if c != 1:
            inv = Fraction(1) / c if is_rational_value(c) else c.inverse()
            r = {k: x * inv for k, x in r.items()}
        self.pivots[lead] = r
        return True

    def contains(self, v):
        return not self.reduce(v)

    def reduced_basis(self):
        """Fully reduced basis: vector for lead p vanishes at every other lead."""
        leads = sorted(self.pivots)
        done = {}
        for p in reversed(leads):
            vec = dict(self.pivots[p])
            for q in sorted(k for k in vec if k in done and k != p):
                c = vec.get(q)
                if c:
                    vec = vec_add(vec, done[q], -c)
            done[p] = vec
        return [(p, done[p]) for p in leads]


class IntegerEchelon:
    """Fraction-free echelon form for integer vectors.

    Rows are kept primitive (content 1) so entries stay small.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, v):
        v = dict(v)
        piv = self.pivots
        heap = [k for k in v if k in piv]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if c is None:
                continue
            pk = piv[k]
            p = pk[k]
            g = gcd(p, c)
            mp, mc = p // g, c // g
            if mp != 1:
                for j in v:
                    v[j] *= mp
            for j, pj in pk.items():
                y = v.get(j, 0) - mc * pj
                if y:
                    if j not in v and j in piv:
                        heapq.heappush(heap, j)
                    v[j] = y
                else:
                    v.pop(j, None)
            if v:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for j in v:
                        v[j] //= g
        return v

    def add(self, v):
        r = self.reduce(v)
        if not r:
            return False
        lead = min(r)
        if r[lead] < 0:
            r = {k: -x for k, x in r.items()}
        self.pivots[lead] = r
        return True


def _integerize(col):
    den = 1
    for x in col.values():
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    if den == 1:
        return {k: int(x) for k, x in col.items()}
    return {k: int(x * den) for k, x in col.items()}


def rank(M, stop_at=None):
    """Exact rank; fraction-free on rational input.

    ``stop_at`` ends elimination early once that rank is reached.
    """
    return rank_of_columns(M.columns, rational=M.is_rational(), stop_at=stop_at)


def rank_of_columns(columns, rational=None, stop_at=None):
    columns = list(columns)
    if rational is None:
        rational = all(is_rational_value(x) for c in columns for x in c.values())
    ech = IntegerEchelon() if rational else Echelon()
    for c in columns:
        if not c:
            continue
        ech.add(_integerize(c) if rational else c)
        if stop_at is not None and ech.rank >= stop_at:
            break
    return ech.rank


def column_space(M):
    """(rank, basis) with basis columns in reduced echelon form.

    Basis column r has a 1 at row ``leads[r]`` and 0 at every other lead, so
    coordinates of a vector in the span are its entries at the leads.
    """
    rank_, basis, _ = reduced_column_basis(M.columns, M.rows)
    return rank_, basis


def reduced_column_basis(columns, rows):
    ech = Echelon()
    for c in columns:
        if c:
            ech.add(c)
    pairs = ech.reduced_basis()
    basis = ExactMatrix(rows, len(pairs), [v for _, v in pairs])
    return len(pairs), basis, [p for p, _ in pairs]


class QuotientSpace:
    """k^n modulo the span of a set of relation vectors.

    Quotient coordinates are the non-lead indices of the relation echelon
    form; the standard vectors at those indices give a section (lift).
    """

    def __init__(self, ambient_dim, relations):
        self.ambient_dim = ambient_dim
        self.relations = Echelon()
        for r in relations:
            if r:
                self.relations.add(r)
        leads = set(self.relations.pivots)
        self.basis_indices = [i for i in range(ambient_dim) if i not in leads]
        self._pos = {i: k for k, i in enumerate(self.basis_indices)}

    @property
    def relation_rank(self):
        return self.relations.rank

    @property
    def dim(self):
        return len(self.basis_indices)

    def project(self, v):
        r = self.relations.reduce(v)
        return {self._pos[i]: x for i, x in r.items()}

    def projection_matrix(self):
        return ExactMatrix(
            self.dim, self.ambient_dim, [self.project({i: 1}) for i in range(self.ambient_dim)]
        )

    def lift_matrix(self):
        return ExactMatrix(self.ambient_dim, self.dim, [{i: 1} for i in self.basis_indices])

    def project_matrix(self, M):
        return ExactMatrix(self.dim, M.cols, [self.project(c) for c in M.columns])


def cokernel(M):
    """Quotient of the codomain of M by its column space."""
    return QuotientSpace(M.rows, M.columns)


def coordinates_in_basis(v, leads):
    """Coordinates of v (assumed in the span) w.r.t. a reduced basis."""
    out = {}
    for r, p in enumerate(leads):
        x = v.get(p)
        if x:
            out[r] = x
    return out


def field_of(values):
    """The cyclotomic order of the entries, or None if all rational."""
    for x in values:
        if isinstance(x, CyclotomicNumber):
            return x.order
    return None
