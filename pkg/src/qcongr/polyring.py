"""Exact sparse arithmetic for Laurent polynomials and rational functions in q.

A Laurent polynomial is held as a dict mapping integer exponents (possibly
negative) to nonzero rational coefficients.  Coefficients are plain Python
ints whenever the value is an integer and fractions.Fraction otherwise, so
integer-only computations never pay Fraction overhead.  The zero polynomial
is the empty dict, and canonical form (no stored zeros, ints preferred over
integral Fractions) makes structural equality coincide with mathematical
equality.

A rational function is a reduced pair num/den where den is an ordinary
polynomial (no negative exponents) with nonzero constant term and leading
coefficient 1, and gcd(num cleared of its q-power, den) = 1.  Any q-power
factor of the original denominator is folded into the numerator, which may
therefore carry negative exponents.  The representation is unique, so
equality is again structural.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Coeff = int | Fraction


class NotDivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class ZeroDenominatorError(ZeroDivisionError):
    """Raised when a rational function is built over a zero denominator."""


def _norm_coeff(c: Coeff) -> Coeff:
    """Collapse integral Fractions to ints; leave everything else alone."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Sparse Laurent polynomial in q with exact rational coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        t = {}
        for e, c in items:
            c = _norm_coeff(c)
            if c:
                t[e] = t.get(e, 0) + c
                if not t[e]:
                    del t[e]
        self._t = t

    @classmethod
    def _raw(cls, d: dict) -> "LaurentPoly":
        """Wrap an already-canonical dict without copying.  Internal."""
        p = cls.__new__(cls)
        p._t = d
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def const(cls, c: Coeff) -> "LaurentPoly":
        c = _norm_coeff(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        coeff = _norm_coeff(coeff)
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def degree(self) -> int | None:
        """Highest exponent, or None for the zero polynomial."""
        return max(self._t) if self._t else None

    @property
    def valuation(self) -> int | None:
        """Lowest exponent, or None for the zero polynomial."""
        return min(self._t) if self._t else None

    def coeff(self, exp: int) -> Coeff:
        return self._t.get(exp, 0)

    def terms(self) -> list[tuple[int, Coeff]]:
        """Term list sorted by ascending exponent."""
        return sorted(self._t.items())

    @property
    def is_ordinary(self) -> bool:
        """True when no exponent is negative."""
        return not self._t or min(self._t) >= 0

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        t = dict(a)
        for e, c in b.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm_coeff(other)
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw(
                {e: _norm_coeff(c * other) for e, c in self._t.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) > len(b):
            a, b = b, a
        t: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = t.get(e, 0) + ca * cb
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return LaurentPoly._raw({e: _norm_coeff(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            if len(self._t) != 1:
                raise ValueError("negative powers exist only for monomials")
            ((e, c),) = self._t.items()
            return LaurentPoly.monomial(e * k, Fraction(1, 1) / c ** (-k))
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by q**exp."""
        if not exp:
            return self
        return LaurentPoly._raw({e + exp: c for e, c in self._t.items()})

    def subst_power(self, m: int) -> "LaurentPoly":
        """Substitute q -> q**m for a positive integer m."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        return LaurentPoly._raw({e * m: c for e, c in self._t.items()})

    def evaluate(self, x: Coeff) -> Coeff:
        """Evaluate at an exact rational point (x nonzero if negative exponents)."""
        if not self._t:
            return 0
        if not x:
            if min(self._t) < 0:
                raise ZeroDivisionError("negative exponent evaluated at zero")
            return _norm_coeff(self._t.get(0, 0))
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self._t.items():
            total += c * x**e
        return _norm_coeff(total)

    # -- exact division and gcd --------------------------------------------

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; NotDivisibleError if a remainder is left."""
        other = self._coerce(other)
        if other is None or other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return LaurentPoly._raw({})
        va, a = _dense(self)
        vb, b = _dense(other)
        q, r = _dense_divmod(a, b)
        if any(r):
            raise NotDivisibleError("polynomial division leaves a remainder")
        return _from_dense(va - vb, q)

    def __str__(self) -> str:
        return format_terms(self.terms(), "q")

    __repr__ = __str__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"terms": [[e, str(Fraction(c))] for e, c in self.terms()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        return cls((int(e), Fraction(c)) for e, c in obj["terms"])


def format_terms(terms: list[tuple[int, Coeff]], var: str) -> str:
    """Render sorted (exponent, coefficient) pairs as '-1 - q + q^3' style text."""
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            v = var if e == 1 else f"{var}^{e}"
            body = v if a == 1 else f"{a} {v}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def _dense(p: LaurentPoly) -> tuple[int, list[Coeff]]:
    """Nonzero p as (valuation, ascending coefficient list)."""
    v = min(p._t)
    d = max(p._t)
    out: list[Coeff] = [0] * (d - v + 1)
    for e, c in p._t.items():
        out[e - v] = c
    return v, out


def _from_dense(val: int, coeffs: list[Coeff]) -> LaurentPoly:
    return LaurentPoly._raw(
        {val + i: _norm_coeff(c) for i, c in enumerate(coeffs) if c}
    )


def _dense_divmod(a: list[Coeff], b: list[Coeff]) -> tuple[list, list]:
    """Long division of ascending coefficient lists over the rationals."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(r) - 1 < db:
        return [0], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        f = c if lead == 1 else _norm_coeff(Fraction(c, 1) / lead)
        q[i - db] = f
        r[i] = 0
        for j in range(db):
            if b[j]:
                r[i - db + j] = _norm_coeff(r[i - db + j] - f * b[j])
    return q, r


def _int_scale(coeffs: list[Coeff]) -> list[int]:
    """Scale a rational coefficient list to a primitive integer list."""
    denlcm = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            d = c.denominator
            denlcm = denlcm // int_gcd(denlcm, d) * d
    out = [int(c * denlcm) if isinstance(c, Fraction) else c * denlcm for c in coeffs]
    g = 0
    for c in out:
        g = int_gcd(g, abs(c))
        if g == 1:
            return out
    return [c // g for c in out] if g > 1 else out


def _trim(xs: list) -> list:
    while xs and not xs[-1]:
        xs.pop()
    return xs


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer lists, primitive-reduced at every step."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    _trim(r)
    while r and len(r) - 1 >= db:
        top = r[-1]
        shift = len(r) - 1 - db
        if lb != 1:
            r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] -= top * b[j]
        _trim(r)
        r = _primitive(r)
    return r


def _primitive(xs: list[int]) -> list[int]:
    g = 0
    for c in xs:
        g = int_gcd(g, abs(c))
        if g == 1:
            return xs
    return [c // g for c in xs] if g > 1 else xs


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic ordinary gcd of a and b with their q-power factors cleared.

    Monic means the coefficient of the highest exponent is 1, so for example
    the gcd of 1 - q**2 and 1 - q**3 comes back as q - 1.
    """
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    polys = []
    for p in (a, b):
        if not p.is_zero:
            _, dense = _dense(p)
            polys.append(_int_scale(dense))
    u = polys[0]
    v = polys[1] if len(polys) > 1 else []
    if len(u) < len(v):
        u, v = v, u
    while _trim(v):
        u, v = v, _primitive(_pseudo_rem(u, v))
    _trim(u)
    lead = u[-1]
    if lead != 1:
        u = [_norm_coeff(Fraction(c, lead)) for c in u]
    return _from_dense(0, u)


class RationalFunction:
    """Reduced quotient of Laurent polynomials; unique representation."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        n, d = _reduce_fraction(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _make(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        """Wrap an already-reduced pair.  Internal."""
        rf = cls.__new__(cls)
        object.__setattr__(rf, "num", num)
        object.__setattr__(rf, "den", den)
        return rf

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDenominatorError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def evaluate(self, x: Coeff) -> Coeff:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError("denominator vanishes at this point")
        n = self.num.evaluate(x)
        return _norm_coeff(Fraction(n) / Fraction(d))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalFunction":
        return cls(
            LaurentPoly.from_json_obj(obj["num"]), LaurentPoly.from_json_obj(obj["den"])
        )


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def _reduce_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero:
        raise ZeroDenominatorError("zero denominator")
    if num.is_zero:
        return LaurentPoly.zero(), LaurentPoly.one()
    tv = den.valuation
    if tv:
        den = den.shift(-tv)
        num = num.shift(-tv)
    sv = num.valuation
    if sv:
        num = num.shift(-sv)
    g = laurent_gcd(num, den)
    if g.degree:
        num = num.divexact(g)
        den = den.divexact(g)
    lead = den.coeff(den.degree)
    if lead != 1:
        inv = _norm_coeff(Fraction(1, 1) / lead)
        num = num * inv
        den = den * inv
    if sv:
        num = num.shift(sv)
    return num, den
