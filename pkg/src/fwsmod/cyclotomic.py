"""Exact arithmetic in the cyclotomic field Q(zeta_e).

Numbers are stored as coordinate vectors in the power basis
1, z, ..., z^(phi(e)-1), reduced modulo the e-th cyclotomic polynomial, so
equality is coordinatewise.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod_int(num, den):
    """Divide integer polynomials (low degree first); den must be monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    rem = num[: len(den) - 1]
    return out, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(poly)


def totient(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(e):
    # row k = coordinates of z^k for k < max(e, 2*phi - 1)
    phi = totient(e)
    poly = cyclotomic_polynomial(e)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(e, 2 * phi - 1)):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


def _reduce(e, coeffs):
    phi = totient(e)
    if len(coeffs) <= phi:
        return tuple(coeffs) + (Fraction(0),) * (phi - len(coeffs))
    table = _power_table(e)
    out = [Fraction(0)] * phi
    for k, c in enumerate(coeffs):
        if c:
            for j, t in enumerate(table[k]):
                if t:
                    out[j] += c * t
    return tuple(out)


class CyclotomicNumber:
    """An element of Q(zeta_e)."""

    __slots__ = ("order", "coords")

    def __init__(self, order, coords):
        self.order = order
        self.coords = _reduce(order, [Fraction(c) for c in coords])

    @classmethod
    def _raw(cls, order, coords):
        obj = object.__new__(cls)
        obj.order = order
        obj.coords = coords
        return obj

    @classmethod
    def rational(cls, order, value):
        phi = totient(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    "cannot mix Q(zeta_%d) and Q(zeta_%d)" % (self.order, other.order)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.rational(self.order, other)
        return None

    def is_rational(self):
        return not any(self.coords[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%r is not rational" % (self,))
        return self.coords[0]

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(
            self.order, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber._raw(
            self.order, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(self.order, tuple(a * other for a in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(self.coords) - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return CyclotomicNumber.rational(self.order, 1 / self.coords[0])
        # extended Euclid in Q[x]: find u with u * self = 1 mod Phi_e
        a = _trim(list(cyclotomic_polynomial(self.order)))
        a = [Fraction(c) for c in a]
        b = _trim(list(self.coords))
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while len(b) > 1 or b[0] != 0:
            q, r = _poly_divmod_frac(a, b)
            a, b = b, r
            u0, u1 = u1, _trim(_poly_sub(u0, _poly_mul(q, u1)))
            if len(b) == 1 and b[0] == 0:
                break
        # a is now a nonzero constant gcd, and u0 * self = a (mod Phi)
        c = a[0]
        return CyclotomicNumber(self.order, [x / c for x in u0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber._raw(
                self.order, tuple(a / other for a in self.coords)
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, z -> z^-1."""
        e = self.order
        out = [Fraction(0)] * e
        for k, c in enumerate(self.coords):
            out[(-k) % e] += c
        return CyclotomicNumber(e, out)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.order, self.coords))

    def __repr__(self):
        return "CyclotomicNumber(%d, %s)" % (self.order, [str(c) for c in self.coords])

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("%s*z%d" % (c, self.order))
            else:
                terms.append("%s*z%d^%d" % (c, self.order, k))
        return " + ".join(terms) if terms else "0"


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return [a - b for a, b in zip(p, q)]


def _poly_divmod_frac(num, den):
    num = [Fraction(c) for c in num]
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] / lead
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return out, _trim(num[: len(den) - 1] or [Fraction(0)])


def root_of_unity(e, k=1):
    """zeta_e ** k as an element of Q(zeta_e)."""
    row = _power_table(e)[k % e]
    return CyclotomicNumber._raw(e, tuple(Fraction(c) for c in row))


def simplify(x):
    """Return a Fraction when x is a rational cyclotomic number."""
    if isinstance(x, CyclotomicNumber) and x.is_rational():
        return x.coords[0]
    return x


def lcm(*ns):
    out = 1
    for n in ns:
        out = out * n // gcd(out, n)
    return out
