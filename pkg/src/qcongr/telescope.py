"""Telescoping machinery for q-hypergeometric sums.

A term family is described by its ratio: F(k)/F(k-1) = S(k)/T(k), where S
and T are Laurent polynomials in q and x = q^k.  Given the pair (S, T) the
module computes the summand weight R = T - shift_k(S) and certifies the
resulting boundary identity

    sum_{k=0}^{n} R(k) F(k)  =  F(0) T(0) - F(n) S(n+1)

exactly, together with the ratio identity and a small set of closed
summation identities that the four built-in families produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polyring import Coeff, LaurentPoly, RationalFunction, _norm_coeff


class ZeroRatioDenominator(ZeroDivisionError):
    """T(k) instantiated to zero at some k where the recurrence divides by it."""


def _fmt_bi(terms: dict[tuple[int, int], Coeff]) -> str:
    if not terms:
        return "0"
    parts: list[str] = []
    for (eq, ex), c in sorted(terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        factors = []
        if eq == 1:
            factors.append("q")
        elif eq != 0:
            factors.append(f"q^{eq}")
        if ex == 1:
            factors.append("x")
        elif ex != 0:
            factors.append(f"x^{ex}")
        body = "*".join(factors)
        if not body:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = body
        else:
            piece = f"{abs(c)}*{body}"
        if not parts:
            parts.append(piece if c > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if c > 0 else f"- {piece}")
    return " ".join(parts)


class BiLaurent:
    """Laurent polynomial in q and x, with x standing for q^k.

    Terms map an exponent pair (e_q, e_x) to a nonzero rational
    coefficient; for example q^{2k-3} is the single term {(-3, 2): 1}.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: dict[tuple[int, int], Coeff] | None = None):
        t: dict[tuple[int, int], Coeff] = {}
        if terms:
            for (eq, ex), c in terms.items():
                c = _norm_coeff(c)
                if c:
                    t[(int(eq), int(ex))] = c
        self._t = t

    @classmethod
    def zero(cls) -> "BiLaurent":
        return cls()

    @classmethod
    def one(cls) -> "BiLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, e_q: int, e_x: int, coeff: Coeff = 1) -> "BiLaurent":
        return cls({(e_q, e_x): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> list[tuple[int, int, Coeff]]:
        return sorted((eq, ex, c) for (eq, ex), c in self._t.items())

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        t = dict(self._t)
        for k, c in other._t.items():
            s = _norm_coeff(t.get(k, 0) + c)
            if s:
                t[k] = s
            elif k in t:
                del t[k]
        r = BiLaurent.__new__(BiLaurent)
        r._t = t
        return r

    def __neg__(self) -> "BiLaurent":
        r = BiLaurent.__new__(BiLaurent)
        r._t = {k: -c for k, c in self._t.items()}
        return r

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return self + (-other)

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        t: dict[tuple[int, int], Coeff] = {}
        for (aq, ax), ac in self._t.items():
            for (bq, bx), bc in other._t.items():
                k = (aq + bq, ax + bx)
                s = _norm_coeff(t.get(k, 0) + ac * bc)
                if s:
                    t[k] = s
                elif k in t:
                    del t[k]
        r = BiLaurent.__new__(BiLaurent)
        r._t = t
        return r

    def shift_k(self) -> "BiLaurent":
        """Substitute k -> k+1, i.e. x -> q*x."""
        r = BiLaurent.__new__(BiLaurent)
        r._t = {(eq + ex, ex): c for (eq, ex), c in self._t.items()}
        return r

    def instantiate(self, k: int) -> LaurentPoly:
        """Substitute x = q^k, collapsing to a univariate Laurent polynomial."""
        acc: dict[int, Coeff] = {}
        for (eq, ex), c in self._t.items():
            e = eq + ex * k
            s = _norm_coeff(acc.get(e, 0) + c)
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        return LaurentPoly._raw(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __str__(self) -> str:
        return _fmt_bi(self._t)

    def __repr__(self) -> str:
        return f"BiLaurent({self._t!r})"

    def to_json_obj(self) -> list[list]:
        return [[eq, ex, str(Fraction(c))] for eq, ex, c in self.terms()]

    @classmethod
    def from_json_obj(cls, obj: list) -> "BiLaurent":
        terms: dict[tuple[int, int], Coeff] = {}
        for eq, ex, c in obj:
            terms[(int(eq), int(ex))] = Fraction(c)
        return cls(terms)


def shift_k(b: BiLaurent) -> BiLaurent:
    return b.shift_k()


def weight(s: BiLaurent, t: BiLaurent) -> BiLaurent:
    """Summand weight R = T - shift_k(S) of the ratio S/T."""
    return t - s.shift_k()


@dataclass(frozen=True)
class ClosedForm:
    """Product formula q^{qk_exp * k} * prod_{j<k} (1 - q^{head_base + head_step*j}) / (q;q)_k."""

    head_base: int
    head_step: int
    qk_exp: int


@dataclass(frozen=True)
class TermFamily:
    name: str
    F0: RationalFunction
    S: BiLaurent
    T: BiLaurent
    closed_form: ClosedForm | None = None

    def weight(self) -> BiLaurent:
        return weight(self.S, self.T)

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "F0": self.F0.to_json_obj(),
            "S": self.S.to_json_obj(),
            "T": self.T.to_json_obj(),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TermFamily":
        f0 = obj.get("F0", 1)
        if isinstance(f0, dict):
            F0 = RationalFunction.from_json_obj(f0)
        else:
            F0 = RationalFunction(LaurentPoly.const(Fraction(str(f0))))
        return cls(
            name=str(obj["name"]),
            F0=F0,
            S=BiLaurent.from_json_obj(obj["S"]),
            T=BiLaurent.from_json_obj(obj["T"]),
        )


_ONE_RF = RationalFunction(LaurentPoly.one())
_T_STANDARD = BiLaurent({(0, 0): 1, (0, 1): -1})  # 1 - x

BUILTIN_FAMILIES: dict[str, TermFamily] = {
    "F1": TermFamily(
        "F1",
        _ONE_RF,
        BiLaurent({(1, 0): 1, (-2, 2): -1}),  # q - q^{2k-2}
        _T_STANDARD,
        ClosedForm(-1, 2, 1),
    ),
    "F2": TermFamily(
        "F2",
        _ONE_RF,
        BiLaurent({(0, 0): 1, (-3, 2): -1}),  # 1 - q^{2k-3}
        _T_STANDARD,
        ClosedForm(-1, 2, 0),
    ),
    "G1": TermFamily(
        "G1",
        _ONE_RF,
        BiLaurent({(1, 0): 1, (0, 2): -1}),  # q - q^{2k}
        _T_STANDARD,
        ClosedForm(1, 2, 1),
    ),
    "G2": TermFamily(
        "G2",
        _ONE_RF,
        BiLaurent({(0, 0): 1, (-1, 2): -1}),  # 1 - q^{2k-1}
        _T_STANDARD,
        ClosedForm(1, 2, 0),
    ),
}


def term_values(family: TermFamily, up_to: int) -> list[RationalFunction]:
    """F(0..up_to) by the forward recurrence F(k) = F(k-1) S(k)/T(k).

    Every value is a reduced RationalFunction.  Intended for modest ranges;
    the certificate routines below avoid building these for large n.
    """
    values = [family.F0]
    for k in range(1, up_to + 1):
        tk = family.T.instantiate(k)
        if tk.is_zero:
            raise ZeroRatioDenominator(f"T({k}) = 0 for family {family.name}")
        sk = family.S.instantiate(k)
        values.append(values[-1] * RationalFunction(sk, tk))
    return values


def closed_term_values(family: TermFamily, up_to: int) -> list[RationalFunction]:
    """F(0..up_to) from the registered product formula (built-in families only)."""
    cf = family.closed_form
    if cf is None:
        raise ValueError(f"family {family.name} has no closed form registered")
    values = []
    head = LaurentPoly.one()
    den = LaurentPoly.one()
    for k in range(up_to + 1):
        if k:
            head = head - head.shift(cf.head_base + cf.head_step * (k - 1))
            den = den - den.shift(k)
        values.append(RationalFunction(head.shift(cf.qk_exp * k), den))
    return values


@dataclass(frozen=True)
class BoundaryCertificate:
    """Outcome of a boundary-identity check with the compared sides as witness.

    Both sides are recorded after clearing the common denominator
    prod_{j=1..n} T(j) and the common factor F(0); the identity is linear
    in F(0), so equality of the cleared sides is equivalent whenever the
    recurrence is defined.
    """

    family: str
    n: int
    ok: bool
    lhs: LaurentPoly
    rhs: LaurentPoly


def verify_boundary_identity(family: TermFamily, n: int) -> BoundaryCertificate:
    """Certify sum_{k=0}^{n} R(k) F(k) = F(0) T(0) - F(n) S(n+1) at this n."""
    r = family.weight()
    # With N_k = prod_{j<=k} S(j) and D_k = prod_{j<=k} T(j), the cleared
    # left side is sum_k R(k) N_k D_n/D_k, accumulated backwards so that
    # only one growing polynomial is carried.
    h = r.instantiate(0)
    nprod = LaurentPoly.one()
    dprod = LaurentPoly.one()
    for k in range(1, n + 1):
        tk = family.T.instantiate(k)
        if tk.is_zero:
            raise ZeroRatioDenominator(f"T({k}) = 0 for family {family.name}")
        nprod = nprod * family.S.instantiate(k)
        h = h * tk + r.instantiate(k) * nprod
        dprod = dprod * tk
    rhs = family.T.instantiate(0) * dprod - nprod * family.S.instantiate(n + 1)
    return BoundaryCertificate(family.name, n, h == rhs, h, rhs)


def verify_ratio_identity(family: TermFamily, k_max: int) -> bool:
    """Check F(k) T(k) = F(k-1) S(k) for 1 <= k <= k_max via the closed form.

    Writing F(k) = head_k q^{ck} / (q;q)_k, both sides are cleared by
    (q;q)_k, using (q;q)_k = (q;q)_{k-1} (1 - q^k).
    """
    cf = family.closed_form
    if cf is None:
        raise ValueError(f"family {family.name} has no closed form registered")
    head_prev = LaurentPoly.one()
    for k in range(1, k_max + 1):
        head = head_prev - head_prev.shift(cf.head_base + cf.head_step * (k - 1))
        tk = family.T.instantiate(k)
        sk = family.S.instantiate(k)
        step = LaurentPoly.one() - LaurentPoly.monomial(k)
        lhs = head.shift(cf.qk_exp * k) * tk
        rhs = head_prev.shift(cf.qk_exp * (k - 1)) * sk * step
        if lhs != rhs:
            return False
        head_prev = head
    return True


def verify_summed_recurrence(family: TermFamily, n: int) -> bool:
    """Check sum_{k=0}^{n-1} (S(k+1) - T(k)) F(k) = S(n) F(n-1).

    This is the boundary identity at n-1 for a family with T(0) = 0,
    checked here in the form the summed recurrence produces directly.
    Cleared by (q;q)_{n-1} and evaluated with one forward accumulator.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cf = family.closed_form
    if cf is None:
        raise ValueError(f"family {family.name} has no closed form registered")
    num = LaurentPoly.one()  # head_k q^{ck}
    acc = (family.S.instantiate(1) - family.T.instantiate(0)) * num
    for m in range(1, n):
        num = num - num.shift(cf.head_base + cf.head_step * (m - 1))
        num = num.shift(cf.qk_exp)
        acc = acc - acc.shift(m)
        acc = acc + (family.S.instantiate(m + 1) - family.T.instantiate(m)) * num
    return acc == family.S.instantiate(n) * num


@dataclass(frozen=True)
class LemmaReport:
    """Results of the four closed summation identities at a given n.

    Each identity is labelled by the family whose recurrence drives it.
    """

    n: int
    results: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def verify_lemma_identities(n: int) -> LemmaReport:
    """Check the four closed summation identities at this n.

    F1:  sum (q;q^2)_k/(q;q)_k q^k
           + 1/(1-q) sum (q^{-1};q^2)_k/(q;q)_k q^k (1-q^k)
           = (q;q^2)_{n-1}/(q;q)_{n-1} q^{n-1}
    F2:  1/(1-q) sum (q^{-1};q^2)_k/(q;q)_k q^k (q-q^k)
           = -(q;q^2)_{n-1}/(q;q)_{n-1}
    G1:  (1-q) sum (q^3;q^2)_k/(q;q)_k q^k
           - 1/q sum (q;q^2)_k/(q;q)_k q^k (1-q^k)
           = (q^3;q^2)_{n-1}/(q;q)_{n-1} (q^{n-1}-q^n)
    G2:  sum (q;q^2)_k/(q;q)_k q^k (1-q^{k+1})
           = (1-q) (q^3;q^2)_{n-1}/(q;q)_{n-1}

    All sums run over 0 <= k <= n-1.  Each identity is verified after
    clearing (q;q)_{n-1} together with the stray 1/(1-q) or 1/q factor,
    with the partial sums maintained by one forward recurrence each:
    multiplying an accumulated sum by (1 - q^m) converts its cleared
    denominator from (q;q)_{m-1} to (q;q)_m.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = LaurentPoly.one()  # (q;q^2)_m q^m
    c = LaurentPoly.one()  # (q^{-1};q^2)_m q^m
    e = LaurentPoly.one()  # (q^3;q^2)_m q^m
    one = LaurentPoly.one()
    acc1 = one - one.shift(1)         # (1-q) a_0 + c_0 (1-q^0)
    acc2 = one.shift(1) - one         # c_0 (q - q^0)
    acc3 = one.shift(1) - one.shift(2)  # q(1-q) e_0 - a_0 (1-q^0)
    acc4 = one - one.shift(1)         # a_0 (1-q^{0+1})
    for m in range(1, n):
        a = a.shift(1) - a.shift(2 * m)
        c = c.shift(1) - c.shift(2 * m - 2)
        e = e.shift(1) - e.shift(2 * m + 2)
        acc1 = (acc1 - acc1.shift(m)) + (a - a.shift(1)) + (c - c.shift(m))
        acc2 = (acc2 - acc2.shift(m)) + (c.shift(1) - c.shift(m))
        acc3 = (acc3 - acc3.shift(m)) + (e.shift(1) - e.shift(2)) - (a - a.shift(m))
        acc4 = (acc4 - acc4.shift(m)) + (a - a.shift(m + 1))
    results = {
        "F1": acc1 == a - a.shift(1),
        "F2": acc2 == a.shift(2 - n) - a.shift(1 - n),
        "G1": acc3 == e.shift(1) - e.shift(2),
        "G2": acc4 == e.shift(1 - n) - e.shift(2 - n),
    }
    return LemmaReport(n, results)
