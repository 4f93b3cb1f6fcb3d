"""Residue arithmetic in Q[q] / (Phi_n(q)**e).

A Modulus packages the expanded power of a cyclotomic polynomial together
with a dense integer coefficient list and a precomputed representative of
1/q, so canonical representatives (degree below e * phi(n)) can be produced
quickly.  Negative q-exponents are folded in through powers of the inverse
of q before remaindering, so Laurent inputs are fine.

For e >= 2 the ring has nilpotents, so there is no field shortcut anywhere:
inverses come from the extended Euclidean algorithm against Phi_n followed
by exact Newton lifting to the full power, which yields the one and only
inverse in the quotient ring or proves there is none (the unit group mod
Phi_n**e is exactly the preimage of the unit group mod Phi_n).

Internally residues are dense ascending coefficient lists; entries are ints
until an inversion genuinely introduces denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .polyring import Coeff, LaurentPoly, _norm_coeff
from .qobjects import cyclotomic


class ModulusMismatchError(ValueError):
    """Raised when residues over different moduli are combined."""


class NonInvertibleError(ArithmeticError):
    """Raised when an element shares a factor with the modulus."""


def _trim(xs: list) -> list:
    while xs and not xs[-1]:
        xs.pop()
    return xs


def _poly_to_list(p: LaurentPoly) -> list:
    """Ordinary polynomial to dense ascending list (valuation >= 0 required)."""
    d = p.degree
    if d is None:
        return []
    out = [0] * (d + 1)
    for e, c in p._t.items():
        out[e] = c
    return out


def _list_to_poly(xs: list) -> LaurentPoly:
    return LaurentPoly._raw({i: _norm_coeff(c) for i, c in enumerate(xs) if c})


class Modulus:
    """The ring Q[q] / (Phi_n(q)**e), with cached helpers for fast reduction."""

    __slots__ = ("n", "e", "_m", "_nz", "_deg", "_phi", "_phinz", "_qinv")

    def __init__(self, n: int, e: int = 1):
        if n < 2:
            raise ValueError("modulus index n must be >= 2")
        if e < 1:
            raise ValueError("modulus power e must be >= 1")
        self.n = n
        self.e = e
        phi = _poly_to_list(cyclotomic(n))
        self._phi = phi
        self._phinz = [(i, c) for i, c in enumerate(phi[:-1]) if c]
        if e == 1:
            self._m = phi
        else:
            self._m = _poly_to_list(cyclotomic(n) ** e)
        self._deg = len(self._m) - 1
        self._nz = [(i, c) for i, c in enumerate(self._m[:-1]) if c]
        qinv = _ext_inverse([0, 1], self._m, self._nz)
        self._qinv = qinv

    @property
    def degree(self) -> int:
        """Canonical representatives live strictly below this degree."""
        return self._deg

    @property
    def poly(self) -> LaurentPoly:
        return _list_to_poly(self._m)

    @property
    def q_inverse(self) -> LaurentPoly:
        return _list_to_poly(self._qinv)

    def __eq__(self, other):
        if not isinstance(other, Modulus):
            return NotImplemented
        return self.n == other.n and self.e == other.e

    def __hash__(self):
        return hash((self.n, self.e))

    def __repr__(self):
        return f"Modulus(n={self.n}, e={self.e})"

    # -- dense-list plumbing (shared with the sweep engines) ----------------

    def _reduce_list(self, xs: list) -> list:
        """Remainder of an ascending dense list; trims and returns it."""
        deg = self._deg
        nz = self._nz
        for i in range(len(xs) - 1, deg - 1, -1):
            c = xs[i]
            if c:
                xs[i] = 0
                base = i - deg
                for j, mc in nz:
                    xs[base + j] -= c * mc
        del xs[deg:]
        return _trim(xs)

    def _mulmod(self, a: list, b: list) -> list:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        if len(a) > len(b):
            a, b = b, a
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return self._reduce_list(out)

    def _shift_reduce(self, xs: list, s: int) -> list:
        """q**s times xs, reduced; s must be >= 0."""
        if not xs:
            return []
        return self._reduce_list([0] * s + xs)

    def _qpow_list(self, j: int) -> list:
        """Canonical list for q**j, any sign of j.

        Uses q**n = 1 - u with u = 1 - q**n and u**e = 0 in this ring, so
        q**j = q**(j mod n) * (1 - u)**t truncates to e binomial terms.
        """
        n = self.n
        j0 = j % n
        t = (j - j0) // n
        if t == 0:
            return self._reduce_list([0] * j0 + [1])
        # (1 - u)**t = sum_{i<e} C(t, i) (-u)**i  with (-u)**i = (q**n - 1)**i
        acc = LaurentPoly.monomial(j0)
        total = LaurentPoly.zero()
        qn1 = LaurentPoly.monomial(n) - 1
        binom = 1
        power = acc
        for i in range(self.e):
            if i:
                binom = binom * (t - (i - 1)) // i
                power = power * qn1
            total = total + power * binom
        return self._reduce_list(_poly_to_list(total))

    def _invert_list(self, u: list) -> list | None:
        """Inverse of a canonical list, or None when not a unit."""
        if not u:
            return None
        if len(u) == 1:
            return [_norm_coeff(Fraction(1, 1) / u[0])]
        if self.e == 1:
            return _ext_inverse(u, self._phi, self._phinz)
        u1 = list(u)
        deg1 = len(self._phi) - 1
        for i in range(len(u1) - 1, deg1 - 1, -1):
            c = u1[i]
            if c:
                u1[i] = 0
                base = i - deg1
                for j, mc in self._phinz:
                    u1[base + j] -= c * mc
        del u1[deg1:]
        v = _ext_inverse(_trim(u1), self._phi, self._phinz)
        if v is None:
            return None
        prec = 1
        while prec < self.e:
            uv = self._mulmod(u, v)
            two_minus = [-c for c in uv]
            if two_minus:
                two_minus[0] += 2
            else:
                two_minus = [2]
            v = self._mulmod(v, two_minus)
            prec *= 2
        return [_norm_coeff(c) for c in v]

    # -- public construction ------------------------------------------------

    def reduce(self, p: LaurentPoly | int | Fraction) -> "Residue":
        """Canonical residue of a Laurent polynomial."""
        if isinstance(p, (int, Fraction)):
            p = LaurentPoly.const(p)
        v = p.valuation
        if v is None:
            return Residue(self, [])
        if v >= 0:
            out = [0] * (p.degree + 1)
            for e, c in p._t.items():
                out[e] = c
            return Residue(self, self._reduce_list(out))
        out = [0] * (p.degree - v + 1)
        for e, c in p._t.items():
            out[e - v] = c
        lst = self._reduce_list(out)
        return Residue(self, self._mulmod(lst, self._qpow_list(v)))

    def q_power(self, j: int) -> "Residue":
        """Canonical residue of q**j for a signed exponent j."""
        return Residue(self, self._qpow_list(j))

    def zero(self) -> "Residue":
        return Residue(self, [])

    def one(self) -> "Residue":
        return Residue(self, [1])


def make_modulus(n: int, e: int = 1) -> Modulus:
    return Modulus(n, e)


class Residue:
    """An element of Q[q] / (Phi_n**e) in canonical (lowest-degree) form."""

    __slots__ = ("modulus", "_l")

    def __init__(self, modulus: Modulus, coeffs: list):
        self.modulus = modulus
        self._l = coeffs

    @property
    def rep(self) -> LaurentPoly:
        """The canonical representative as a polynomial."""
        return _list_to_poly(self._l)

    @property
    def is_zero(self) -> bool:
        return not self._l

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(
                    f"{self.modulus!r} vs {other.modulus!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            c = _norm_coeff(other)
            return Residue(self.modulus, [c] if c else [])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._l, other._l
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Residue(self.modulus, _trim([_norm_coeff(c) for c in out]))

    __radd__ = __add__

    def __neg__(self):
        return Residue(self.modulus, [-c for c in self._l])

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
        out = self.modulus._mulmod(self._l, other._l)
        return Residue(self.modulus, [_norm_coeff(c) for c in out])

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        v = self.modulus._invert_list(self._l)
        if v is None:
            raise NonInvertibleError(
                "element shares a factor with the modulus"
            )
        return Residue(self.modulus, v)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._l == other._l

    def __hash__(self):
        return hash((self.modulus, tuple(self._l)))

    def __str__(self):
        return str(self.rep)

    __repr__ = __str__

    def to_json_obj(self) -> dict:
        obj = {"n": self.modulus.n, "e": self.modulus.e}
        obj.update(self.rep.to_json_obj())
        return obj


def _ext_inverse(u: list, m: list[int], m_nz=None) -> list | None:
    """Extended-Euclid inverse of u modulo the monic integer list m.

    Remainders are kept as primitive integer lists (pseudo-division), while
    the Bezout cofactor for u is carried along with exact rational scaling.
    Returns the canonical inverse list, or None when gcd(u, m) != 1.
    """
    u = _trim(list(u))
    if not u:
        return None
    # scale u to a primitive integer list: u = gamma * r1
    den_lcm = 1
    for c in u:
        if isinstance(c, Fraction):
            d = c.denominator
            den_lcm = den_lcm // int_gcd(den_lcm, d) * d
    ints = [int(c * den_lcm) if isinstance(c, Fraction) else c * den_lcm for c in u]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    gamma = Fraction(g if g else 1, den_lcm)
    r0, t0 = list(m), []
    r1, t1 = ints, [Fraction(1, 1) / gamma]
    while len(r1) > 1:
        lb = r1[-1]
        db = len(r1) - 1
        rem = list(r0)
        quo: list = [0] * (len(r0) - db)
        steps = 0
        while len(rem) - 1 >= db and rem:
            top = rem[-1]
            k = len(rem) - 1 - db
            if lb != 1:
                rem = [c * lb for c in rem]
                quo = [c * lb for c in quo]
                steps += 1
            for j in range(db):
                rem[k + j] -= top * r1[j]
            rem[k + db] = 0
            quo[k] += top
            _trim(rem)
        # lb**steps * r0 == quo * r1 + rem
        scale = lb**steps
        tr = [Fraction(c) * scale for c in t0] + [Fraction(0)] * max(
            0, len(quo) + len(t1) - 1 - len(t0)
        )
        for i, cq in enumerate(quo):
            if cq:
                for j, ct in enumerate(t1):
                    tr[i + j] -= cq * ct
        while tr and not tr[-1]:
            tr.pop()
        # make rem primitive, folding the factor into the cofactor
        g = 0
        for c in rem:
            g = int_gcd(g, abs(c))
            if g == 1:
                break
        if g > 1:
            rem = [c // g for c in rem]
            tr = [c / g for c in tr]
        r0, t0 = r1, t1
        r1, t1 = rem, tr
    if not r1:
        return None  # gcd is r0, which has positive degree here
    c = r1[0]
    inv = [_norm_coeff(Fraction(x) / c) for x in t1]
    # reduce the cofactor below the modulus degree
    deg = len(m) - 1
    if m_nz is None:
        m_nz = [(i, mc) for i, mc in enumerate(m[:-1]) if mc]
    for i in range(len(inv) - 1, deg - 1, -1):
        cc = inv[i]
        if cc:
            inv[i] = 0
            base = i - deg
            for j, mc in m_nz:
                inv[base + j] -= cc * mc
    del inv[deg:]
    return [_norm_coeff(c) for c in _trim(inv)]
