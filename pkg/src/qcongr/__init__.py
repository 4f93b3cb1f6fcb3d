"""Exact arithmetic workbench for q-congruences.

Laurent polynomials and rational functions over the rationals, cyclotomic
residue rings, telescoping certificates for hypergeometric-style sums, a
catalog of named congruence checks, and the prime-power specializations
on the integer side.  Everything is exact; no floating point anywhere.
"""

from .padic import (
    CapExceededError,
    PadicResult,
    check_coro_1_1,
    check_coro_1_2,
    check_st,
    exact_residue,
)
from .polyring import (
    LaurentPoly,
    NotDivisibleError,
    RationalFunction,
    ZeroDenominatorError,
)
from .qobjects import (
    PochSpec,
    cyclotomic,
    cyclotomic_mobius,
    gaussian_binomial,
    pochhammer,
    q_integer,
    qpoch,
)
from .residue import Modulus, ModulusMismatchError, NonInvertibleError, Residue
from .telescope import (
    BUILTIN_FAMILIES,
    BiLaurent,
    BoundaryCertificate,
    TermFamily,
    ZeroRatioDenominator,
    term_values,
    verify_boundary_identity,
    verify_lemma_identities,
    verify_ratio_identity,
    weight,
)
from .verify import (
    CATALOG,
    CheckResult,
    CongruenceCheck,
    CongruenceReport,
    check,
    rhs_value,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_FAMILIES",
    "BiLaurent",
    "BoundaryCertificate",
    "CATALOG",
    "CapExceededError",
    "CheckResult",
    "CongruenceCheck",
    "CongruenceReport",
    "LaurentPoly",
    "Modulus",
    "ModulusMismatchError",
    "NonInvertibleError",
    "NotDivisibleError",
    "PadicResult",
    "PochSpec",
    "RationalFunction",
    "Residue",
    "TermFamily",
    "ZeroDenominatorError",
    "ZeroRatioDenominator",
    "check",
    "check_coro_1_1",
    "check_coro_1_2",
    "check_st",
    "cyclotomic",
    "cyclotomic_mobius",
    "exact_residue",
    "gaussian_binomial",
    "pochhammer",
    "q_integer",
    "qpoch",
    "rhs_value",
    "sweep",
    "term_values",
    "verify_boundary_identity",
    "verify_lemma_identities",
    "verify_ratio_identity",
    "weight",
]
