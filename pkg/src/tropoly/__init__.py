"""Exact min-plus polynomial arithmetic, Newton diagrams, factorization
search, residuation, tropical matrix tools, and the satisfiability
encodings built on top of them."""

from .divlcm import LcmReport, divides, gcd, lcm, least_superquotient
from .factor import (
    ChoiceProfile,
    DegreeSplit,
    FactorizationCertificate,
    boolean_triple_test,
    candidate_degree_splits,
    choice_profile,
    factor_bnb,
    factor_boolean_bnb,
    factor_convex,
    irreducible_by_chord,
    is_irreducible,
    round_to_integer_factorization,
)
from .linprog import DifferenceSystem, linear_feasible
from .matrix import (
    AssignmentResult,
    TropMatrix,
    common_factor_obstruction,
    eliminant,
    is_nonsingular,
    min_assignment,
    tropical_rank,
    two_value_rank_full,
)
from .newton import NewtonDiagram, is_strictly_above_chord, lower_hull, merge_hulls
from .poly import (
    BoolPoly,
    BoolPoly2,
    TropPoly,
    bool2_mul,
    bool_mul,
    evaluate,
    normalize_content,
    trop_add,
    trop_mul,
    trop_pow,
)
from .reductions import (
    GadgetError,
    GadgetLayout,
    SatInstance,
    assignment_to_factors,
    build_gadget,
    factors_to_assignment,
    minimal_gadget_n,
    normalize_factor_window,
    sat_to_poly,
    trop_to_bool2,
)
from .scalar import INF, as_scalar, is_finite, oplus, otimes
from .textio import (
    ParseError,
    format_bool,
    format_bool2,
    format_matrix,
    format_poly,
    format_scalar,
    parse_bool,
    parse_bool2,
    parse_dimacs,
    parse_matrix,
    parse_poly,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AssignmentResult",
    "BoolPoly",
    "BoolPoly2",
    "ChoiceProfile",
    "DegreeSplit",
    "DifferenceSystem",
    "FactorizationCertificate",
    "GadgetError",
    "GadgetLayout",
    "LcmReport",
    "NewtonDiagram",
    "ParseError",
    "SatInstance",
    "TropMatrix",
    "TropPoly",
    "as_scalar",
    "assignment_to_factors",
    "bool2_mul",
    "bool_mul",
    "boolean_triple_test",
    "build_gadget",
    "candidate_degree_splits",
    "choice_profile",
    "common_factor_obstruction",
    "divides",
    "eliminant",
    "evaluate",
    "factor_bnb",
    "factor_boolean_bnb",
    "factor_convex",
    "factors_to_assignment",
    "format_bool",
    "format_bool2",
    "format_matrix",
    "format_poly",
    "format_scalar",
    "gcd",
    "irreducible_by_chord",
    "is_finite",
    "is_irreducible",
    "is_nonsingular",
    "is_strictly_above_chord",
    "lcm",
    "least_superquotient",
    "linear_feasible",
    "lower_hull",
    "merge_hulls",
    "min_assignment",
    "minimal_gadget_n",
    "normalize_content",
    "normalize_factor_window",
    "oplus",
    "otimes",
    "parse_bool",
    "parse_bool2",
    "parse_dimacs",
    "parse_matrix",
    "parse_poly",
    "round_to_integer_factorization",
    "sat_to_poly",
    "trop_add",
    "trop_mul",
    "trop_pow",
    "trop_to_bool2",
    "tropical_rank",
    "two_value_rank_full",
]
