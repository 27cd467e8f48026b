"""Truncated Hilbert series of modules and fitting them to rational functions.

A series lives in variables t_a, one per group element, and is stored as a
dict from exponent tuples (multidegrees, in element order) to exact
coefficients.  The plain series has coefficient dim M(X_f) at f; the
weighted one multiplies by the multinomial C_f = |f|! / prod f(a)!.

Fitting multiplies the series by linear factors (1 - c t_a) drawn from a
finite candidate family, greedily keeping a factor when it lowers the orders
of the linear recurrences satisfied by the tail of the series along each
variable.  A fit is accepted once the product is a polynomial followed
by at least ``guard`` vanishing total degrees.
"""

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .category import enumerate_objects
from .cyclotomic import CyclotomicNumber, root_of_unity, simplify
from .linalg import Echelon
from .modules.base import CategoryMismatch


# -- exact coefficient strings ---------------------------------------------------

_CYC = re.compile(r"Q\(z(\d+)\)\[(.*)\]$")


def format_exact(x):
    x = simplify(x)
    if isinstance(x, CyclotomicNumber):
        return "Q(z%d)[%s]" % (x.order, ",".join(str(c) for c in x.coords))
    return str(Fraction(x))


def parse_exact(text):
    m = _CYC.match(text)
    if m:
        return CyclotomicNumber(int(m.group(1)), [Fraction(c) for c in m.group(2).split(",")])
    return Fraction(text)


def _normalize(x):
    x = simplify(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


# -- truncated multivariate polynomials -------------------------------------------


def total_degree(e):
    return sum(e)


def poly_mul_linear(p, var, c, nvars, N):
    """p * (1 - c t_var), truncated at total degree N."""
    out = dict(p)
    for e, x in p.items():
        if total_degree(e) >= N:
            continue
        e2 = e[:var] + (e[var] + 1,) + e[var + 1:]
        y = out.get(e2, 0) - c * x
        if y:
            out[e2] = y
        else:
            out.pop(e2, None)
    return {e: _normalize(x) for e, x in out.items() if x}


def poly_mul_geometric(p, var, c, N):
    """p / (1 - c t_var), truncated at total degree N."""
    out = {}
    for e, x in p.items():
        k = 0
        coef = x
        while total_degree(e) + k <= N:
            e2 = e[:var] + (e[var] + k,) + e[var + 1:]
            y = out.get(e2, 0) + coef
            if y:
                out[e2] = y
            else:
                out.pop(e2, None)
            coef = coef * c
            k += 1
    return {e: _normalize(x) for e, x in out.items() if x}


def multinomial(f):
    out = factorial(sum(f))
    for k in f:
        out //= factorial(k)
    return out


@dataclass
class RationalSeries:
    """Truncated power series; ``variables`` names the t_a."""

    variables: tuple
    coeffs: dict
    truncation: int
    weighted: bool = False

    def __post_init__(self):
        self.coeffs = {tuple(e): _normalize(x) for e, x in self.coeffs.items()
                       if x and total_degree(e) <= self.truncation}

    @property
    def nvars(self):
        return len(self.variables)

    def coefficient(self, e):
        return self.coeffs.get(tuple(e), 0)

    def monomials(self):
        """All exponent tuples of total degree <= N, graded then lexicographic."""
        out = []
        for n in range(self.truncation + 1):
            out.extend(_exponents(self.nvars, n))
        return out

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (self.variables == other.variables and self.truncation == other.truncation
                and self.coeffs == other.coeffs)

    def truncate(self, N):
        return RationalSeries(self.variables, self.coeffs, min(N, self.truncation), self.weighted)

    def to_weighted(self):
        if self.weighted:
            return self
        return RationalSeries(self.variables, {e: x * multinomial(e) for e, x in self.coeffs.items()},
                              self.truncation, True)

    def to_plain(self):
        if not self.weighted:
            return self
        return RationalSeries(self.variables,
                              {e: Fraction(x) / multinomial(e) if not isinstance(x, CyclotomicNumber)
                               else x / multinomial(e) for e, x in self.coeffs.items()},
                              self.truncation, False)

    def graded(self):
        """Coefficients summed by total degree: the all t_a = t specialization."""
        out = [0] * (self.truncation + 1)
        for e, x in self.coeffs.items():
            out[total_degree(e)] = out[total_degree(e)] + x
        return [_normalize(x) for x in out]

    def as_dict(self):
        return {
            "variables": list(self.variables),
            "truncation": self.truncation,
            "weighted": self.weighted,
            "coefficients": {",".join(str(k) for k in e): format_exact(x)
                             for e, x in sorted(self.coeffs.items())},
        }

    @classmethod
    def from_dict(cls, d):
        coeffs = {}
        for key, val in d["coefficients"].items():
            e = tuple(int(k) for k in key.split(",")) if key else ()
            coeffs[e] = parse_exact(val)
        return cls(tuple(d["variables"]), coeffs, d["truncation"], d["weighted"])


def _exponents(nvars, n):
    if nvars == 0:
        return [()] if n == 0 else []
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


def variable_names(group):
    return tuple("t" + (group.format_element(a) if a else "") for a in group.elements)


def truncated_series(M, N, weighted=False):
    """Coefficients dim M(X_f) (times C_f if weighted) for all |f| <= N.

    Objects outside the module's category (nonzero labels for FS_A modules)
    contribute 0.
    """
    if N < 0:
        raise ValueError("truncation must be >= 0")
    G = M.group
    coeffs = {}
    for n in range(N + 1):
        for X in enumerate_objects(G, n):
            try:
                d = M.dim(X)
            except CategoryMismatch:
                continue
            if d:
                f = X.multidegree()
                coeffs[f] = d * multinomial(f) if weighted else d
    return RationalSeries(variable_names(G), coeffs, N, weighted)


# -- candidate factors -------------------------------------------------------------


@dataclass(frozen=True)
class LinearFactor:
    """The factor (1 - c t_var)."""

    var: int
    c: object

    def describe(self, names):
        return "(1 - (%s)*%s)" % (format_exact(self.c), names[self.var])

    def as_dict(self, names):
        return {"variable": names[self.var], "c": format_exact(self.c)}


def candidate_factors(group, degree=1):
    """(1 -+ (j/|A|) zeta t_a) for zeta^ord(a) = 1 and 1 <= j <= degree*|A|^2."""
    n = group.order
    e = max(group.exponent, 1)
    seen = set()
    out = []
    for var, a in enumerate(group.elements):
        k = group.element_order(a)
        for j in range(1, degree * n * n + 1):
            for r in range(k):
                zeta = root_of_unity(e, r * (e // k))
                for sign in (1, -1):
                    c = _normalize(zeta * Fraction(sign * j, n))
                    key = (var, c)
                    if key not in seen:
                        seen.add(key)
                        out.append(LinearFactor(var, c))
    return out


def univariate_candidates(max_j, denominators=(1,)):
    """(1 -+ (j/q) t) on a single variable."""
    out = []
    seen = set()
    for q in denominators:
        for j in range(1, max_j + 1):
            for sign in (1, -1):
                c = _normalize(Fraction(sign * j, q))
                if c not in seen:
                    seen.add(c)
                    out.append(LinearFactor(0, c))
    return out


# -- tail complexity -----------------------------------------------------------------


def recurrence_order(seq, guard, max_order=None):
    """Smallest L such that the last 2L + guard terms obey a length-L recurrence.

    L = 0 means the last ``guard`` terms vanish.  Returns None when no order
    fits in the available window.
    """
    n = len(seq)
    cap = (n - guard) // 2
    if max_order is not None:
        cap = min(cap, max_order)
    for L in range(cap + 1):
        start = n - 2 * L - guard
        rows = range(start + L, n)
        if L == 0:
            if not any(seq[k] for k in rows):
                return 0
            continue
        ech = Echelon()
        for i in range(1, L + 1):
            col = {r: seq[k - i] for r, k in enumerate(rows) if seq[k - i]}
            if col:
                ech.add(col)
        target = {r: seq[k] for r, k in enumerate(rows) if seq[k]}
        if ech.contains(target):
            return L
    return None


def tail_complexity(coeffs, nvars, N, guard):
    """(sum over variables of the largest slice order, sum of all slice orders).

    A slice fixes the exponents of the other variables (total at most N/2)
    and reads the coefficients along one variable; its order is the tail
    recurrence order.  The first entry estimates the denominator degree in
    each variable, the second breaks ties.
    """
    top = 0
    total = 0
    width = N // 2
    for v in range(nvars):
        others = [u for u in range(nvars) if u != v]
        worst = 0
        for w in range(width + 1):
            for rest in _exponents(len(others), w):
                length = N - w + 1
                seq = []
                for k in range(length):
                    e = [0] * nvars
                    for u, x in zip(others, rest):
                        e[u] = x
                    e[v] = k
                    seq.append(coeffs.get(tuple(e), 0))
                L = recurrence_order(seq, guard)
                L = (length + 1) if L is None else L
                worst = max(worst, L)
                total += L
        top += worst
    return (top, total)


def polynomial_degree(coeffs):
    return max((total_degree(e) for e in coeffs), default=-1)


def is_polynomial(coeffs, N, guard):
    return N - polynomial_degree(coeffs) >= guard


# -- fitting -------------------------------------------------------------------------


@dataclass
class FittedRational:
    variables: tuple
    numerator: dict
    factors: list
    guard: int
    truncation: int

    def expand(self, N=None):
        N = self.truncation if N is None else N
        p = {e: x for e, x in self.numerator.items() if total_degree(e) <= N}
        for fac in self.factors:
            p = poly_mul_geometric(p, fac.var, fac.c, N)
        return RationalSeries(self.variables, p, N)

    def describe(self):
        num = " + ".join(
            "%s*%s" % (format_exact(x), _monomial(self.variables, e))
            for e, x in sorted(self.numerator.items())) or "0"
        den = "".join(f.describe(self.variables) for f in self.factors) or "1"
        return "(%s) / %s" % (num, den)

    def as_dict(self):
        return {
            "fit": True,
            "variables": list(self.variables),
            "numerator": {",".join(str(k) for k in e): format_exact(x)
                          for e, x in sorted(self.numerator.items())},
            "factors": [f.as_dict(self.variables) for f in self.factors],
            "guard": self.guard,
            "truncation": self.truncation,
            "formula": self.describe(),
        }


def _monomial(names, e):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append("%s^%d" % (name, k))
    return "*".join(parts) or "1"


@dataclass
class NoFit:
    """Fitting failed; ``residual`` is the series times the factors kept so far."""

    variables: tuple
    factors: list
    residual: dict
    truncation: int
    reason: str

    def as_dict(self):
        return {
            "fit": False,
            "reason": self.reason,
            "factors": [f.as_dict(self.variables) for f in self.factors],
            "residual_tail": {",".join(str(k) for k in e): format_exact(x)
                              for e, x in sorted(self.residual.items())
                              if total_degree(e) > self.truncation // 2},
        }


@dataclass
class _State:
    coeffs: dict
    factors: list = field(default_factory=list)


def fit_rational(S, candidates=None, max_multiplicity=3, guard=3, backtrack=False,
                 max_factors=12, group=None):
    """Greedy elimination of denominator factors.

    ``candidates`` defaults to ``candidate_factors(group)`` (a group is then
    required).  Returns a FittedRational or a NoFit value.
    """
    if guard < 2:
        raise ValueError("guard must be >= 2")
    if candidates is None:
        if group is None:
            raise ValueError("either candidates or group is required")
        candidates = candidate_factors(group)
    N = S.truncation
    n = S.nvars

    def score(coeffs):
        return tail_complexity(coeffs, n, N, guard)

    def done(st):
        return is_polynomial(st.coeffs, N, guard)

    def options(st):
        counts = {}
        for f in st.factors:
            counts[f] = counts.get(f, 0) + 1
        out = []
        for k, f in enumerate(candidates):
            if counts.get(f, 0) >= max_multiplicity:
                continue
            new = poly_mul_linear(st.coeffs, f.var, f.c, n, N)
            out.append((score(new), len(new), k, f, new))
        out.sort(key=lambda t: t[:3])
        return out

    start = _State(dict(S.coeffs))
    if backtrack:
        result = _search(start, score(start.coeffs), options, done, max_factors)
    else:
        result = _greedy(start, score, options, done, max_factors)
    if isinstance(result, _State):
        return FittedRational(S.variables, result.coeffs, result.factors, guard, N)
    st, reason = result
    return NoFit(S.variables, st.factors, st.coeffs, N, reason)


def _greedy(st, score, options, done, max_factors):
    current = score(st.coeffs)
    while True:
        if done(st):
            return st
        if len(st.factors) >= max_factors:
            return st, "factor budget exhausted"
        opts = options(st)
        if not opts or opts[0][0] >= current:
            return st, "no candidate factor shortens the tail"
        current, _, _, f, new = opts[0]
        st = _State(new, st.factors + [f])


def _search(st, current, options, done, max_factors):
    if done(st):
        return st
    if len(st.factors) >= max_factors:
        return st, "factor budget exhausted"
    last = (st, "no candidate factor shortens the tail")
    for s, _, _, f, new in options(st):
        if s >= current:
            break
        res = _search(_State(new, st.factors + [f]), s, options, done, max_factors)
        if isinstance(res, _State):
            return res
        last = res
    return last


# -- specialization ------------------------------------------------------------------


def specialize_univariate(obj):
    """Set every t_a to t."""
    if isinstance(obj, RationalSeries):
        coeffs = {(k,): x for k, x in enumerate(obj.graded()) if x}
        return RationalSeries(("t",), coeffs, obj.truncation, obj.weighted)
    if isinstance(obj, FittedRational):
        num = {}
        for e, x in obj.numerator.items():
            k = (total_degree(e),)
            num[k] = num.get(k, 0) + x
        num = {e: _normalize(x) for e, x in num.items() if x}
        factors = [LinearFactor(0, f.c) for f in obj.factors]
        return FittedRational(("t",), num, factors, obj.guard, obj.truncation)
    raise TypeError("cannot specialize %r" % (obj,))
