"""Generation-degree certificates.

A module is generated in degree <= d iff at every object X with |X| > d the
pullbacks along the collapse morphisms (f_S, g_b) span M(X).  Here S is a
subset of X with at least two points, collapsed to a new point * placed at
position 0 of the target, and b: S -> A is the pointing on S.

Every certificate is a finite computation and is labeled with the
truncation N it was checked up to.
"""

import itertools
from dataclasses import dataclass, field

from .category import (
    FwsMorphism,
    LabeledSet,
    TwsMorphism,
    compose_tws,
    enumerate_objects,
    hom_fws,
    hom_tws,
    surjections,
)
from .cyclotomic import simplify
from .groups import Character, dual_group
from .linalg import ExactMatrix, block_diagonal, rank, rank_of_columns, vstack
from .modules.base import FS, FSA, FWS, TWS
from .modules.constructions import Pushforward, FwsRestriction, plain_set
from .modules.projective import principal_projective
from .modules.v0 import v0_bar, v0_quotient_matrix, v0_tilde


def collapse_morphism(X, S, b):
    """(f_S, g_b): X -> (*, sum of labels on S) + (X - S)."""
    G = X.group
    Sset = set(S)
    rest = [x for x in range(X.size) if x not in Sset]
    target = LabeledSet(G, (G.total(X.labels[s] for s in S),) + tuple(X.labels[x] for x in rest))
    where = {x: k + 1 for k, x in enumerate(rest)}
    fmap = tuple(0 if x in Sset else where[x] for x in range(X.size))
    pointing = [G.zero] * X.size
    for s, a in zip(S, b):
        pointing[s] = a
    return TwsMorphism(FwsMorphism(X, target, fmap), tuple(pointing))


def collapse_subsets(n):
    for k in range(2, n + 1):
        yield from itertools.combinations(range(n), k)


def _pointings_for(M, S):
    G = M.group
    if M.category in (FWS, FS):
        return [(G.zero,) * len(S)]
    return itertools.product(G.elements, repeat=len(S))


def eta_columns(M, X):
    """Columns of the eta map at X, skipping blocks whose source value is zero."""
    for S in collapse_subsets(X.size):
        for b in _pointings_for(M, S):
            m = collapse_morphism(X, S, b)
            if not M.dim(m.target):
                continue
            yield from M.act(m).columns


def eta_matrix(M, X):
    return ExactMatrix.from_columns(M.dim(X), list(eta_columns(M, X)))


def eta_rank(M, X):
    d = M.dim(X)
    if not d:
        return 0
    return rank_of_columns(eta_columns(M, X), stop_at=d)


def brute_force_span_rank(M, X):
    """Rank of the span of all pullbacks along morphisms to strictly smaller objects."""
    d = M.dim(X)
    if not d:
        return 0
    cols = []
    pointed = M.category in (TWS, FSA)
    for n in range(X.size):
        for Y in enumerate_objects(X.group, n):
            if M.category == FSA and not Y.is_zero_labeled():
                continue
            if not M.dim(Y):
                continue
            homs = hom_tws(X, Y) if pointed else hom_fws(X, Y)
            for m in homs:
                cols.extend(M.act(m).columns)
    return rank_of_columns(cols)


def _objects(M, n):
    objs = enumerate_objects(M.group, n)
    if M.category == FSA:
        objs = [X for X in objs if X.is_zero_labeled()]
    return objs


@dataclass
class ObjectRecord:
    multidegree: tuple
    labels: tuple
    dim: int
    rank: int

    @property
    def coker_dim(self):
        return self.dim - self.rank

    @property
    def passed(self):
        return self.coker_dim == 0

    def as_dict(self):
        return {
            "multidegree": list(self.multidegree),
            "labels": [list(a) for a in self.labels],
            "dim": self.dim,
            "rank": self.rank,
            "coker_dim": self.coker_dim,
            "pass": self.passed,
        }


def object_record(M, X):
    d = M.dim(X)
    r = eta_rank(M, X) if X.size >= 2 else 0
    return ObjectRecord(X.multidegree(), X.labels, d, r)


@dataclass
class GenerationReport:
    claim: int
    truncation: int
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    def summary(self):
        verdict = "PASS" if self.passed else "FAIL"
        return "%s: generated in degree <= %d up to truncation %d" % (
            verdict, self.claim, self.truncation)

    def as_dict(self):
        return {
            "claim": self.claim,
            "truncation": self.truncation,
            "pass": self.passed,
            "summary": self.summary(),
            "records": [r.as_dict() for r in self.records],
        }


def certify_generation(M, d, N):
    """Check eta surjectivity at every iso class X with d < |X| <= N."""
    if N < d:
        raise ValueError("truncation N=%d is below the claimed degree %d" % (N, d))
    report = GenerationReport(d, N)
    for n in range(max(d + 1, 0), N + 1):
        for X in _objects(M, n):
            report.records.append(object_record(M, X))
    return report


@dataclass
class GenerationProfile:
    truncation: int
    records: list

    def counts_by_size(self):
        out = [0] * (self.truncation + 1)
        for r in self.records:
            out[len(r.labels)] += r.coker_dim
        return out

    @property
    def max_degree(self):
        """Largest size carrying new generators, or -1 if there are none."""
        out = -1
        for n, c in enumerate(self.counts_by_size()):
            if c:
                out = n
        return out

    def as_dict(self):
        return {
            "truncation": self.truncation,
            "max_degree": self.max_degree,
            "counts_by_size": self.counts_by_size(),
            "records": [r.as_dict() for r in self.records],
        }


def generation_profile(M, N):
    """New generators per iso class: dim coker(eta), the full dim below size 2."""
    records = []
    for n in range(N + 1):
        for X in _objects(M, n):
            records.append(object_record(M, X))
    return GenerationProfile(N, records)


# -- factorization of eta for V0-bar through q ---------------------------------


@dataclass
class FactorRecord:
    labels: tuple
    kernel_dim: int
    passed: bool

    def as_dict(self):
        return {"labels": [list(a) for a in self.labels], "kernel_dim": self.kernel_dim,
                "pass": self.passed}


def factor_check_at(X, tilde, bar):
    """Does eta for V0-bar at X vanish on the kernel of q (x) id?"""
    G = X.group
    n = X.size
    q_blocks = []
    e_cols = []
    for S in collapse_subsets(n):
        sigma = G.total(X.labels[s] for s in S)
        first = LabeledSet(G, (G.neg(sigma),) + tuple(X.labels[s] for s in S))
        rest = [x for x in range(n) if x not in S]
        second = LabeledSet(G, (sigma,) + tuple(X.labels[x] for x in rest))
        dt = tilde.dim(first)
        dw = bar.dim(second)
        if not dt or not dw:
            continue
        q_blocks.append(v0_quotient_matrix(tilde, bar, first).kron(ExactMatrix.identity(dw)))
        for h in tilde.basis(first):
            # orbit representative vanishes at *, so h restricted to S is b
            m = collapse_morphism(X, S, h[1:])
            e_cols.extend(bar.act(m).columns)
    if not q_blocks:
        return FactorRecord(X.labels, 0, True)
    Q = block_diagonal(q_blocks)
    E = ExactMatrix.from_columns(bar.dim(X), e_cols)
    rq = rank(Q)
    both = rank(vstack([Q, E]))
    return FactorRecord(X.labels, Q.cols - rq, both == rq)


@dataclass
class FactorReport:
    truncation: int
    records: list

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    def as_dict(self):
        return {"truncation": self.truncation, "pass": self.passed,
                "records": [r.as_dict() for r in self.records]}


def factor_check_v00(group, N=4):
    """Kernel containment ker(q (x) id) in ker(eta) at every object of size <= N."""
    tilde, bar = v0_tilde(group), v0_bar(group)
    records = []
    for n in range(N + 1):
        for X in enumerate_objects(group, n):
            records.append(factor_check_at(X, tilde, bar))
    return FactorReport(N, records)


# -- restriction witnesses ------------------------------------------------------

TWS_TO_FWS = "tws-to-fws"
FWS_TO_FS = "fws-to-fs"
COMPOSITE = "composite"
RESTRICTION_MODES = (TWS_TO_FWS, FWS_TO_FS, COMPOSITE)


def covering_subsets(points, X_size, key):
    """Nonempty subsets of ``points`` whose images under ``key`` cover range(X_size)."""
    points = list(points)
    for k in range(X_size, len(points) + 1):
        for S in itertools.combinations(points, k):
            if len({key(p) for p in S}) == X_size:
                yield S


def fiber_labelings(group, S, X):
    """All l: S -> A whose sums over the fibers of S -> X equal the labels of X.

    Elements of S are tuples whose last entry is the X-coordinate.
    """
    fibers = [[i for i, s in enumerate(S) if s[-1] == x] for x in range(X.size)]
    per_fiber = []
    for x, fib in enumerate(fibers):
        opts = []
        for vals in itertools.product(group.elements, repeat=len(fib) - 1):
            last = group.sub(X.labels[x], group.total(vals))
            opts.append(vals + (last,))
        per_fiber.append(opts)
    for choice in itertools.product(*per_fiber):
        lab = [None] * len(S)
        for fib, vals in zip(fibers, choice):
            for i, a in zip(fib, vals):
                lab[i] = a
        yield tuple(lab)


@dataclass
class WitnessRecord:
    size: int
    labels: tuple
    dim: int
    rank: int
    needed_degree: int

    def as_dict(self):
        return {"size": self.size, "labels": [list(a) for a in self.labels], "dim": self.dim,
                "rank": self.rank, "needed_degree": self.needed_degree,
                "pass": self.rank == self.dim}


@dataclass
class WitnessReport:
    mode: str
    X: LabeledSet
    truncation: int
    bound: int
    family_size: int
    records: list

    @property
    def passed(self):
        return all(r.rank == r.dim for r in self.records)

    @property
    def certified_degree(self):
        """Largest generator size the checks needed, up to the truncation."""
        return max([r.needed_degree for r in self.records] + [0])

    def as_dict(self):
        return {
            "mode": self.mode,
            "labels": [list(a) for a in self.X.labels],
            "truncation": self.truncation,
            "bound": self.bound,
            "family_size": self.family_size,
            "certified_degree": self.certified_degree,
            "within_bound": self.certified_degree <= self.bound,
            "pass": self.passed and self.certified_degree <= self.bound,
            "records": [r.as_dict() for r in self.records],
        }


def _span_check(dim, columns_by_size):
    """(rank, smallest generator size whose columns, with all smaller ones, span)."""
    if not dim:
        return 0, 0
    cols = []
    for size in sorted(columns_by_size):
        cols.extend(columns_by_size[size])
        r = rank_of_columns(cols, stop_at=dim)
        if r == dim:
            return r, size
    return rank_of_columns(cols), max(columns_by_size, default=0)


def _tws_to_fws(X, N):
    G = X.group
    P = FwsRestriction(principal_projective(X, TWS))
    points = [(a, x) for x in range(X.size) for a in G.elements]
    family = []
    for S in covering_subsets(points, X.size, key=lambda p: p[-1]):
        for lam in fiber_labelings(G, S, X):
            src = LabeledSet(G, lam)
            gen = TwsMorphism(FwsMorphism(src, X, tuple(p[-1] for p in S)),
                              tuple(p[0] for p in S))
            family.append((src, gen))
    records = []
    for n in range(N + 1):
        for Y in enumerate_objects(G, n):
            idx = P.index(Y)
            by_size = {}
            for src, gen in family:
                for h in hom_fws(Y, src):
                    by_size.setdefault(src.size, []).append({idx[compose_tws(gen, h)]: 1})
            r, need = _span_check(len(idx), by_size)
            records.append(WitnessRecord(n, Y.labels, len(idx), r, need))
    return len(family), records


def _fourier_generators(group, X, pointed):
    """Generators of u_*(P_X) indexed by subsets S of A^vee x (A x) X covering X.

    The generator at S lives in u_*(P_X)(S) and is the character-weighted sum
    over labelings l of S with fiber sums l_X of the canonical map S -> X.
    """
    dual = dual_group(group)
    if pointed:
        points = [(chi, a, x) for x in range(X.size) for a in group.elements
                  for chi in dual.elements]
    else:
        points = [(chi, x) for x in range(X.size) for chi in dual.elements]
    out = []
    for S in covering_subsets(points, X.size, key=lambda p: p[-1]):
        fmap = tuple(p[-1] for p in S)
        chis = [Character(group, p[0]) for p in S]
        vec = []
        for lam in fiber_labelings(group, S, X):
            c = 1
            for chi, a in zip(chis, lam):
                c = c * chi.conjugate()(a)
            base = FwsMorphism(LabeledSet(group, lam), X, fmap)
            elem = TwsMorphism(base, tuple(p[1] for p in S)) if pointed else base
            vec.append((lam, elem, c))
        out.append((len(S), vec))
    return out


def _fs_witness(X, N, pointed):
    G = X.group
    P = principal_projective(X, TWS if pointed else FWS)
    U = Pushforward(FwsRestriction(P) if pointed else P)
    gens = _fourier_generators(G, X, pointed)
    records = []
    for n in range(N + 1):
        Y = plain_set(n)
        dim = U.dim(Y)
        by_size = {}
        for k, vec in gens:
            if k > n:
                continue
            S = plain_set(k)
            w = {}
            for lam, elem, c in vec:
                i = U.block_offset(lam) + P.index(LabeledSet(G, lam))[elem]
                w[i] = simplify(c)
            for f in surjections(n, k):
                col = U.apply(FwsMorphism(Y, S, f), w)
                by_size.setdefault(k, []).append(col)
        r, need = _span_check(dim, by_size)
        records.append(WitnessRecord(n, Y.labels, dim, r, need))
    return len(gens), records


def restriction_witness(X, mode=TWS_TO_FWS, N=5):
    """Verify the explicit covering family of a restricted principal projective.

    tws-to-fws: P_X restricted along f -> (f, 0) is spanned by pullbacks of
        the maps (S, l) -> X given by the projections, S ranging over subsets
        of A x X covering X.
    fws-to-fs: u_*(P_X) for the fws projective is spanned by pullbacks of the
        character-weighted generators indexed by subsets of A^vee x X.
    composite: the same for u_* of the restricted tws projective, with
        subsets of A^vee x A x X.
    """
    G = X.group
    if mode == TWS_TO_FWS:
        bound = X.size * G.order
        family, records = _tws_to_fws(X, N)
    elif mode == FWS_TO_FS:
        bound = X.size * G.order
        family, records = _fs_witness(X, N, pointed=False)
    elif mode == COMPOSITE:
        bound = X.size * G.order ** 2
        family, records = _fs_witness(X, N, pointed=True)
    else:
        raise ValueError("unknown restriction mode %r" % (mode,))
    return WitnessReport(mode, X, N, bound, family, records)


# -- the numerical recursion ----------------------------------------------------


@dataclass
class BoundTable:
    i_max: int
    g_max: int
    values: dict

    def __getitem__(self, ig):
        return self.values[ig]

    def violations(self):
        return [(i, g) for (i, g), v in sorted(self.values.items())
                if (i, g) != (0, 0) and v > g + 5 * i]

    @property
    def passed(self):
        return not self.violations()

    def rows(self):
        return [(i, g, self.values[i, g], g + 5 * i) for i in range(self.i_max + 1)
                for g in range(self.g_max + 1)]

    def as_dict(self):
        return {
            "i_max": self.i_max,
            "g_max": self.g_max,
            "pass": self.passed,
            "violations": [list(v) for v in self.violations()],
            "table": [{"i": i, "g": g, "f": f, "bound": b} for i, g, f, b in self.rows()],
        }


def bound_recursion_check(i_max, g_max):
    """Largest f allowed by the two recursive inequalities, taken as equalities."""
    if i_max < 0 or g_max < 0:
        raise ValueError("i_max and g_max must be nonnegative")
    f = {}
    for i in range(i_max + 1):
        for g in range(g_max + 1):
            if i == 0:
                f[i, g] = 3 if g == 0 else (1 if g == 1 else 0)
                continue
            splits = [
                f[i1, g1] + f[i - i1, g - g1]
                for i1 in range(i + 1) for g1 in range(g + 1)
                if (i1, g1) != (0, 0) and (i - i1, g - g1) != (0, 0)
            ]
            best = max(splits, default=0)
            if g == 0:
                f[i, g] = max(i + 4, best)
            else:
                f[i, g] = max(max(i - 2 * g + 3, 1), f[i, g - 1], best)
    return BoundTable(i_max, g_max, f)
