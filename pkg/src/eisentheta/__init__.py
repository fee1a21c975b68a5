"""Exact three-variable Eisenstein theta series and their cubic identities."""

from .eisenstein import LAMBDA, OMEGA, ONE, ZERO, EisInt, EisRat, UnitPower
from .series import (
    FirstDiff,
    Monomial,
    SubstitutionSpec,
    SubstitutionError,
    TriSeries,
    TruncationError,
)
from .builders import (
    LatticePoint,
    build_a,
    build_b,
    build_c,
    build_one_var,
    enumerate_norm_le,
    enumerate_shifted,
    oracle_two_variable,
)
from .cosets import (
    CheckReport,
    CosetLabel,
    LatticeMembershipError,
    Transform,
    Triple,
    apply,
    coset_of,
    coset_sum,
    phi,
    triple_norm,
)
from .identities import (
    BuilderSet,
    VerificationReport,
    check_corollary1,
    check_corollary2,
    check_lemma_symmetries,
    check_special_cases_w1,
    check_theorem1,
    check_theorem2,
    oracle_equivalence_reports,
    run_all,
)

__all__ = [
    "EisInt",
    "EisRat",
    "UnitPower",
    "ZERO",
    "ONE",
    "OMEGA",
    "LAMBDA",
    "Monomial",
    "TriSeries",
    "SubstitutionSpec",
    "SubstitutionError",
    "TruncationError",
    "FirstDiff",
    "LatticePoint",
    "enumerate_norm_le",
    "enumerate_shifted",
    "build_a",
    "build_b",
    "build_c",
    "build_one_var",
    "oracle_two_variable",
    "Triple",
    "CosetLabel",
    "Transform",
    "CheckReport",
    "LatticeMembershipError",
    "apply",
    "coset_of",
    "coset_sum",
    "phi",
    "triple_norm",
    "BuilderSet",
    "VerificationReport",
    "check_lemma_symmetries",
    "check_theorem1",
    "check_corollary1",
    "check_theorem2",
    "check_corollary2",
    "check_special_cases_w1",
    "oracle_equivalence_reports",
    "run_all",
]
