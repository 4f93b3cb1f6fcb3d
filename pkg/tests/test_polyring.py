"""Unit tests for Laurent polynomials and rational functions."""

import random
from fractions import Fraction

import pytest

from qcongr.polyring import (
    LaurentPoly,
    NotDivisibleError,
    RationalFunction,
    ZeroDenominatorError,
    format_terms,
    laurent_gcd,
)

rng = random.Random(90125)

Q = LaurentPoly.monomial(1)


def rand_coeff():
    if rng.random() < 0.3:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 7))
    return rng.randint(-9, 9)


def rand_poly(max_terms=6, lo=-6, hi=8):
    pairs = [(rng.randint(lo, hi), rand_coeff())
             for _ in range(rng.randint(0, max_terms))]
    return LaurentPoly(pairs)


def rand_nonzero(max_terms=6, lo=-6, hi=8):
    while True:
        p = rand_poly(max_terms, lo, hi)
        if not p.is_zero:
            return p


def test_constructors():
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly.one() == 1
    assert LaurentPoly.const(Fraction(4, 2)) == 2
    assert LaurentPoly.monomial(3, 2) == 2 * Q**3
    assert LaurentPoly([(1, 1), (1, -1)]).is_zero
    assert LaurentPoly([(0, Fraction(1, 2)), (0, Fraction(1, 2))]) == 1


def test_degree_valuation_ordinary():
    p = LaurentPoly([(-2, 1), (5, 3)])
    assert p.degree == 5
    assert p.valuation == -2
    assert not p.is_ordinary
    assert (Q**2 + 1).is_ordinary
    z = LaurentPoly.zero()
    assert z.degree is None
    assert z.valuation is None
    assert z.is_ordinary


def test_ring_axioms_random():
    for _ in range(1000):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + LaurentPoly.zero() == a
        assert a * LaurentPoly.one() == a
        assert a - a == LaurentPoly.zero()
        assert a + (-a) == LaurentPoly.zero()
        assert -(-a) == a


def test_int_and_fraction_mixing():
    a = rand_poly()
    assert a + 0 == a
    assert 1 * a == a
    assert 2 - a == LaurentPoly.const(2) - a
    assert a * Fraction(1, 2) * 2 == a


def test_pow():
    p = 1 + Q
    assert p**0 == 1
    assert p**3 == 1 + 3 * Q + 3 * Q**2 + Q**3
    assert Q**-4 == LaurentPoly.monomial(-4)
    assert (2 * Q**3) ** -2 == LaurentPoly.monomial(-6, Fraction(1, 4))
    with pytest.raises(ValueError):
        (1 + Q) ** -1
    with pytest.raises(ValueError):
        p ** Fraction(1, 2)


def test_shift_subst_evaluate():
    p = 1 + Q - Q**3
    assert p.shift(2) == Q**2 + Q**3 - Q**5
    assert p.shift(-1) == Q**-1 + 1 - Q**2
    assert p.subst_power(2) == 1 + Q**2 - Q**6
    with pytest.raises(ValueError):
        p.subst_power(0)
    assert p.evaluate(2) == 1 + 2 - 8
    assert p.evaluate(Fraction(1, 2)) == Fraction(11, 8)
    assert (Q**-1).evaluate(Fraction(1, 3)) == 3
    with pytest.raises(ZeroDivisionError):
        (Q**-1).evaluate(0)
    assert LaurentPoly.zero().evaluate(0) == 0


def test_evaluate_matches_structure_random():
    for _ in range(200):
        a, b = rand_poly(), rand_poly()
        x = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


def test_divexact_roundtrip_random():
    for _ in range(300):
        a = rand_poly()
        b = rand_nonzero()
        assert (a * b).divexact(b) == a


def test_divexact_errors():
    with pytest.raises(NotDivisibleError):
        (Q**2 + 1).divexact(Q + 1)
    with pytest.raises(ZeroDivisionError):
        (Q + 1).divexact(LaurentPoly.zero())
    assert LaurentPoly.zero().divexact(Q + 1) == 0


def test_gcd_known_values():
    assert laurent_gcd(1 - Q**2, 1 - Q**3) == Q - 1
    assert laurent_gcd(Q**5, Q**3) == 1
    assert laurent_gcd(LaurentPoly.zero(), 2 * Q + 2) == Q + 1
    with pytest.raises(ValueError):
        laurent_gcd(LaurentPoly.zero(), LaurentPoly.zero())


def test_gcd_properties_random():
    for _ in range(120):
        a, b = rand_nonzero(4), rand_nonzero(4)
        g = rand_nonzero(3)
        d = laurent_gcd(a * g, b * g)
        assert d.is_ordinary
        assert d.coeff(d.degree) == 1
        assert d.valuation == 0 or d == 1
        # d contains g up to a q-power and common content of a, b
        (g * (a * g).divexact(g)).divexact(d)  # a*g divisible by d
        (b * g).divexact(d)


def test_str_formatting():
    assert str(LaurentPoly.zero()) == "0"
    assert str(-1 - Q + Q**3) == "-1 - q + q^3"
    assert str(2 * Q**2) == "2 q^2"
    assert str(Q**-1 + 1) == "q^-1 + 1"
    assert str(LaurentPoly.const(Fraction(1, 2))) == "1/2"
    assert format_terms([(0, 1), (2, -3)], "x") == "1 - 3 x^2"


def test_json_roundtrip():
    for _ in range(100):
        p = rand_poly()
        obj = p.to_json_obj()
        assert obj["terms"] == sorted(obj["terms"])
        assert LaurentPoly.from_json_obj(obj) == p
    obj = (Q**-2 * Fraction(3, 7)).to_json_obj()
    assert obj == {"terms": [[-2, "3/7"]]}


def test_hash_consistency():
    a = 1 + Q
    b = LaurentPoly([(0, 1), (1, Fraction(2, 2))])
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


# -- rational functions -----------------------------------------------------


def test_rf_normalization():
    r = RationalFunction(1 - Q**2, 1 - Q)
    assert r == RationalFunction(1 + Q)
    assert r.den == LaurentPoly.one()
    # q-power content moves to the numerator
    r2 = RationalFunction(Q**2, Q**3)
    assert r2.num == Q**-1
    assert r2.den == 1
    # denominator is monic
    r3 = RationalFunction(1, 2 * Q - 2)
    assert r3.den == Q - 1
    assert r3.num == LaurentPoly.const(Fraction(1, 2))


def test_rf_zero_denominator():
    with pytest.raises(ZeroDenominatorError):
        RationalFunction(1, LaurentPoly.zero())
    with pytest.raises(ZeroDenominatorError):
        RationalFunction(Q) / RationalFunction(LaurentPoly.zero())


def test_rf_field_axioms_random():
    for _ in range(250):
        a = RationalFunction(rand_poly(4), rand_nonzero(3))
        b = RationalFunction(rand_poly(4), rand_nonzero(3))
        c = RationalFunction(rand_poly(4), rand_nonzero(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a - a == RationalFunction(LaurentPoly.zero())
        if not b.is_zero:
            assert (a / b) * b == a
        assert 1 - a == RationalFunction(LaurentPoly.one()) - a


def test_rf_structural_equality_and_hash():
    a = RationalFunction(1 + Q, 1 - Q)
    b = RationalFunction((1 + Q) * (1 - Q**2), (1 - Q) * (1 - Q**2))
    assert a == b
    assert hash(a) == hash(b)
    assert a != RationalFunction(1 + Q)


def test_rf_evaluate_and_str():
    r = RationalFunction(1 - Q**2, 1 - Q)
    assert r.evaluate(Fraction(1, 2)) == Fraction(3, 2)
    assert "/" not in str(r)
    assert "/" in str(RationalFunction(1, 1 + Q))


def test_rf_json_roundtrip():
    for _ in range(60):
        r = RationalFunction(rand_poly(4), rand_nonzero(3))
        assert RationalFunction.from_json_obj(r.to_json_obj()) == r
