"""Unit tests for cyclotomic polynomials, q-integers, and q-Pochhammer products."""

import math

import pytest

from qcongr.polyring import LaurentPoly
from qcongr.qobjects import (
    PochSpec,
    cyclotomic,
    cyclotomic_mobius,
    gaussian_binomial,
    pochhammer,
    q_integer,
    qpoch,
)

Q = LaurentPoly.monomial(1)


def phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_cyclotomic_small_table():
    assert cyclotomic(1) == Q - 1
    assert cyclotomic(2) == Q + 1
    assert cyclotomic(3) == 1 + Q + Q**2
    assert cyclotomic(4) == Q**2 + 1
    assert cyclotomic(6) == Q**2 - Q + 1
    assert cyclotomic(8) == Q**4 + 1
    assert cyclotomic(12) == Q**4 - Q**2 + 1


def test_cyclotomic_input_validation():
    with pytest.raises(ValueError):
        cyclotomic(0)
    with pytest.raises(ValueError):
        cyclotomic_mobius(-3)


def test_cyclotomic_two_routes_agree():
    for n in range(1, 121):
        assert cyclotomic(n) == cyclotomic_mobius(n)


def test_cyclotomic_divisor_product():
    for n in range(1, 61):
        prod = LaurentPoly.one()
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == Q**n - 1


def test_cyclotomic_degree_is_totient():
    for n in range(1, 80):
        assert cyclotomic(n).degree == phi(n)


def test_cyclotomic_palindromic():
    for n in range(2, 80):
        p = cyclotomic(n)
        d = p.degree
        assert all(p.coeff(i) == p.coeff(d - i) for i in range(d + 1))


def test_cyclotomic_105_has_minus_two():
    p = cyclotomic(105)
    assert p.coeff(7) == -2
    assert min(c for _, c in p.terms()) == -2
    # smaller indices stay in {-1, 0, 1}
    for n in range(1, 105):
        assert all(c in (-1, 0, 1) for _, c in cyclotomic(n).terms())


def test_q_integer():
    assert q_integer(0).is_zero
    assert q_integer(1) == 1
    assert q_integer(7) == sum((Q**i for i in range(7)), LaurentPoly.zero())
    assert str(q_integer(7)) == "1 + q + q^2 + q^3 + q^4 + q^5 + q^6"
    assert q_integer(5).evaluate(1) == 5
    with pytest.raises(ValueError):
        q_integer(-1)


def test_pochhammer_empty_and_basic():
    assert pochhammer(PochSpec()) == 1
    assert qpoch(1, 1, 0) == 1
    assert qpoch(1, 1, 2) == (1 - Q) * (1 - Q**2)
    assert qpoch(1, 2, 3) == (1 - Q) * (1 - Q**3) * (1 - Q**5)
    assert qpoch(-1, 2, 2) == (1 - Q**-1) * (1 - Q)
    assert qpoch(1, 1, 3, coeff=-1) == (1 + Q) * (1 + Q**2) * (1 + Q**3)


def test_pochhammer_matches_qpoch():
    for a in (-1, 1, 3):
        for k in range(6):
            assert pochhammer(PochSpec(1, a, 2, k)) == qpoch(a, 2, k)


def test_pochhammer_step_property():
    # (q;q)_{m+1} = (q;q)_m (1 - q^{m+1})
    for m in range(8):
        assert qpoch(1, 1, m + 1) == qpoch(1, 1, m) * (1 - Q ** (m + 1))


def test_pochspec_validation():
    with pytest.raises(ValueError):
        PochSpec(step=0)
    with pytest.raises(ValueError):
        PochSpec(length=-1)


def test_gaussian_binomial_known():
    assert gaussian_binomial(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4
    assert str(gaussian_binomial(4, 2)) == "1 + q + 2 q^2 + q^3 + q^4"
    assert gaussian_binomial(5, 0) == 1
    assert gaussian_binomial(5, 5) == 1
    assert gaussian_binomial(6, 1) == q_integer(6)


def test_gaussian_binomial_symmetry_and_limit():
    for m in range(9):
        for k in range(m + 1):
            g = gaussian_binomial(m, k)
            assert g == gaussian_binomial(m, m - k)
            assert g.evaluate(1) == math.comb(m, k)
            assert all(c > 0 for _, c in g.terms())


def test_gaussian_binomial_pascal():
    # [m,k] = [m-1,k-1] + q^k [m-1,k]
    for m in range(1, 9):
        for k in range(1, m):
            lhs = gaussian_binomial(m, k)
            rhs = gaussian_binomial(m - 1, k - 1) + Q**k * gaussian_binomial(m - 1, k)
            assert lhs == rhs


def test_gaussian_binomial_validation():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)
    with pytest.raises(ValueError):
        gaussian_binomial(3, -1)
