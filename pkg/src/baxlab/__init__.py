"""Exact combinatorics of Baxter permutations, path triples, and histories."""

from .bijections import (
    MalformedMiddleError,
    NotBaxterError,
    NotInImageError,
    gamma,
    gamma_inverse,
    gamma_prime,
    gamma_prime_inverse,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .harness import Check, Report, SUITE_NAMES, render_ascii, run_suite
from .laguerre import (
    LaguerreHistory,
    MalformedHistoryError,
    Validity,
    enumerate_histories,
    height_profile,
    is_motzkin_word,
    psi_fv,
    psi_fv_inverse,
    validate,
)
from .paths import (
    LatticePath,
    PathTriple,
    decode_path,
    encode_set,
    enumerate_tlp,
    expected_endpoints,
    is_nonintersecting,
    tlp_parameters,
)
from .perm import (
    InvalidPermutationError,
    LetterClass,
    Perm,
    ShapeFlags,
    StatProfile,
    all_permutations,
    as_permutation,
    classify_letters,
    generate_baxter,
    identity,
    inverse,
    is_baxter,
    is_baxter_bruteforce,
    shape_flags,
    stat_profile,
)
from .qseries import (
    InexactDivisionError,
    QPoly,
    TQPoly,
    baxter_number,
    baxter_polynomial_lhs,
    baxter_polynomial_rhs,
    catalan,
    exact_div,
    q_binomial,
    tlp_count_formula,
)

__version__ = "0.1.0"

__all__ = [
    "Check",
    "InexactDivisionError",
    "InvalidPermutationError",
    "LaguerreHistory",
    "LatticePath",
    "LetterClass",
    "MalformedHistoryError",
    "MalformedMiddleError",
    "NotBaxterError",
    "NotInImageError",
    "PathTriple",
    "Perm",
    "QPoly",
    "Report",
    "SUITE_NAMES",
    "ShapeFlags",
    "StatProfile",
    "TQPoly",
    "Validity",
    "all_permutations",
    "as_permutation",
    "baxter_number",
    "baxter_polynomial_lhs",
    "baxter_polynomial_rhs",
    "catalan",
    "classify_letters",
    "decode_path",
    "encode_set",
    "enumerate_histories",
    "enumerate_tlp",
    "exact_div",
    "expected_endpoints",
    "gamma",
    "gamma_inverse",
    "gamma_prime",
    "gamma_prime_inverse",
    "generate_baxter",
    "height_profile",
    "identity",
    "inverse",
    "is_baxter",
    "is_baxter_bruteforce",
    "is_motzkin_word",
    "is_nonintersecting",
    "phi",
    "phi_inverse",
    "psi",
    "psi_fv",
    "psi_fv_inverse",
    "psi_inverse",
    "q_binomial",
    "render_ascii",
    "run_suite",
    "shape_flags",
    "stat_profile",
    "tlp_count_formula",
    "tlp_parameters",
    "validate",
]
