"""Exact Leavitt algebra computation with lp operator-norm estimates.

The symbolic layer works with exact Gaussian-rational coefficients in a
canonical graded form, the numeric layer produces certified enclosures
of lp -> lp operator norms, and the invariants layer decides the UHF
classification questions. See the README for a tour.
"""

from .elements import (
    LeavittElement,
    add,
    equals,
    gen_s,
    gen_t,
    monomial,
    mul,
    one,
    scalar_element,
    star,
    zero,
)
from .errors import (
    AlphabetMismatchError,
    ExprSyntaxError,
    LeavittError,
    LevelError,
    NotInCoreError,
    WitnessBoundError,
)
from .exprparse import format_element, parse
from .gauge import gauge_act, project, shift_endo
from .invariants import (
    AlgebraDescriptor,
    GeneratorSequence,
    SupernaturalNumber,
    classify_iso,
    hom_obstruction,
    k0_contains,
    r_d,
    sn_equal,
    supernatural_of,
)
from .kernels import BACKEND
from .pnorm import (
    NormConfig,
    NormInterval,
    PExponent,
    elem_norm,
    embed,
    kron,
    opnorm,
    opnorm_exact,
    permute_factors,
)
from .scalars import GaussianRational
from .uhf import (
    CoreMatrix,
    SignedPermMatrix,
    expect_to_level,
    group_average,
    identity_matrix,
    matrix_unit,
    phi,
    phi_inv,
    signed_perm_group,
    trace,
)
from .witness import WitnessPair, annihilating_word, core_witness, sigma_word, witness
from .words import Word, empty_word, mono_mul, word_concat

__version__ = "0.1.0"

__all__ = [
    "AlgebraDescriptor",
    "AlphabetMismatchError",
    "BACKEND",
    "CoreMatrix",
    "ExprSyntaxError",
    "GaussianRational",
    "GeneratorSequence",
    "LeavittElement",
    "LeavittError",
    "LevelError",
    "NormConfig",
    "NormInterval",
    "NotInCoreError",
    "PExponent",
    "SignedPermMatrix",
    "SupernaturalNumber",
    "WitnessBoundError",
    "WitnessPair",
    "Word",
    "add",
    "annihilating_word",
    "classify_iso",
    "core_witness",
    "elem_norm",
    "embed",
    "empty_word",
    "equals",
    "expect_to_level",
    "format_element",
    "gauge_act",
    "gen_s",
    "gen_t",
    "group_average",
    "hom_obstruction",
    "identity_matrix",
    "k0_contains",
    "kron",
    "matrix_unit",
    "mono_mul",
    "monomial",
    "mul",
    "one",
    "opnorm",
    "opnorm_exact",
    "parse",
    "permute_factors",
    "phi",
    "phi_inv",
    "project",
    "r_d",
    "scalar_element",
    "shift_endo",
    "sigma_word",
    "signed_perm_group",
    "sn_equal",
    "star",
    "supernatural_of",
    "trace",
    "witness",
    "word_concat",
    "zero",
]
