from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fwsmod.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    root_of_unity,
    simplify,
    totient,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_spec_identities():
    z2 = root_of_unity(2)
    assert z2 * z2 == 1
    z3 = root_of_unity(3)
    assert z3 + z3 ** 2 == -1
    z4 = root_of_unity(4)
    assert z4 ** 2 == -1
    assert z4 ** 4 == 1 and z4 ** 2 != 1


def test_roots_have_exact_order():
    for e in range(1, 13):
        z = root_of_unity(e)
        powers = [z ** k for k in range(e)]
        assert powers[0] == 1
        assert all(p != 1 for p in powers[1:])
        assert z ** e == 1
        # sum of all e-th roots of unity vanishes for e > 1
        total = sum(powers[1:], powers[0])
        assert (total == 0) == (e > 1)


def test_mismatched_fields_raise():
    with pytest.raises(ValueError):
        root_of_unity(3) + root_of_unity(4)


def test_inverse_and_division():
    z5 = root_of_unity(5)
    x = 1 + 2 * z5 - Fraction(1, 3) * z5 ** 3
    assert x * x.inverse() == 1
    assert (x / x) == 1
    assert Fraction(1) / x == x.inverse()
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.rational(5, 0).inverse()


def test_conjugate_is_inverse_on_roots():
    for e in (3, 4, 5, 8, 12):
        for k in range(e):
            z = root_of_unity(e, k)
            assert z.conjugate() == z.inverse()


def test_rational_embedding():
    x = CyclotomicNumber.rational(7, Fraction(3, 4))
    assert x.is_rational() and simplify(x) == Fraction(3, 4)
    assert x == Fraction(3, 4)
    assert hash(x) == hash(Fraction(3, 4))
    assert not simplify(root_of_unity(7)).__class__ is Fraction


ORDERS = [3, 4, 5, 6, 8, 12]


@st.composite
def field_elements(draw, order):
    phi = totient(order)
    coords = draw(st.lists(st.fractions(max_denominator=5, min_value=-5, max_value=5),
                           min_size=phi, max_size=phi))
    return CyclotomicNumber(order, coords)


@st.composite
def triples(draw):
    e = draw(st.sampled_from(ORDERS))
    return tuple(draw(field_elements(e)) for _ in range(3))


@given(triples())
def test_ring_laws(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0 and a * 1 == a


@given(triples())
def test_field_inverse(t):
    a = t[0]
    if a:
        assert a * a.inverse() == 1


@given(triples())
def test_conjugation_is_ring_homomorphism(t):
    a, b, _ = t
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a
