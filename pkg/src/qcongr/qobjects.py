"""Classical q-objects: cyclotomic polynomials, q-integers, q-Pochhammer
products, and Gaussian binomial coefficients.

Everything is exact LaurentPoly arithmetic.  Cyclotomic polynomials are
produced by recursive exact division of q**n - 1 by the lower-order factors,
with a write-once memo cache; an independent Moebius-product construction is
also provided so the two routes can be cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import Coeff, LaurentPoly

_Q = LaurentPoly.monomial(1)

_cyclo_cache: dict[int, LaurentPoly] = {}


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    m = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            m = -m
        p += 1
    if n > 1:
        m = -m
    return m


def cyclotomic(n: int) -> LaurentPoly:
    """n-th cyclotomic polynomial, computed by recursive exact division."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    got = _cyclo_cache.get(n)
    if got is not None:
        return got
    poly = _Q**n - 1
    for d in _divisors(n):
        if d < n:
            poly = poly.divexact(cyclotomic(d))
    _cyclo_cache[n] = poly
    return poly


def cyclotomic_mobius(n: int) -> LaurentPoly:
    """Independent construction of the same polynomial via the Moebius product.

    Multiplies out prod over d | n of (q**(n/d) - 1)**mu(d), splitting the
    product into a numerator and denominator before one exact division.
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for d in _divisors(n):
        mu = _mobius(d)
        if mu == 1:
            num = num * (_Q ** (n // d) - 1)
        elif mu == -1:
            den = den * (_Q ** (n // d) - 1)
    return num.divexact(den)


def q_integer(n: int) -> LaurentPoly:
    """[n] = 1 + q + ... + q**(n-1)."""
    if n < 0:
        raise ValueError("q-integer index must be nonnegative")
    return LaurentPoly._raw({e: 1 for e in range(n)})


@dataclass(frozen=True)
class PochSpec:
    """Parameters of the product prod_{j=0}^{length-1} (1 - coeff * q**(base_exp + j*step))."""

    coeff: Coeff = 1
    base_exp: int = 1
    step: int = 1
    length: int = 0

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.length < 0:
            raise ValueError("length must be >= 0")


def pochhammer(spec: PochSpec) -> LaurentPoly:
    """Expand the finite q-Pochhammer product described by spec."""
    out = LaurentPoly.one()
    for j in range(spec.length):
        out = out * (1 - LaurentPoly.monomial(spec.base_exp + j * spec.step, spec.coeff))
    return out


def qpoch(base_exp: int, step: int, length: int, coeff: Coeff = 1) -> LaurentPoly:
    """Shorthand for pochhammer(PochSpec(coeff, base_exp, step, length))."""
    return pochhammer(PochSpec(coeff, base_exp, step, length))


def gaussian_binomial(m: int, k: int) -> LaurentPoly:
    """Gaussian binomial (m choose k)_q by exact division of factorial products.

    The quotient must come out as an ordinary polynomial with positive integer
    coefficients; anything else signals an arithmetic bug and raises.
    """
    if k < 0 or m < 0 or k > m:
        raise ValueError("need 0 <= k <= m")
    num = qpoch(1, 1, m)
    den = qpoch(1, 1, k) * qpoch(1, 1, m - k)
    out = num.divexact(den)
    for e, c in out._t.items():
        if e < 0 or not isinstance(c, int) or c <= 0:
            raise ArithmeticError("gaussian binomial failed its positivity check")
    return out
