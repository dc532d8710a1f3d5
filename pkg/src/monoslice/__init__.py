"""Slice-based computation of maximal standard monomials, irreducible
decompositions, Alexander duals and component optimization for monomial
ideals."""

from .decomposition import (
    COMPRESSION_THRESHOLD,
    ExponentCompression,
    IrreducibleComponent,
    ZERO_COMPONENT,
    alexander_dual,
    components_to_dual,
    irreducible_decomposition,
    make_artinian,
    maximal_standard_monomials,
    msm,
    msm_to_component,
    stream_decomposition,
    stream_msm,
)
from .engine import (
    EngineStats,
    compute_content,
    compute_content_checked,
)
from .formats import (
    ParseError,
    format_ideal,
    format_row,
    parse_ideal,
)
from .ideal import MonomialIdeal, minimize_gens
from .idp import (
    BestRecord,
    BoundGuard,
    IdpResult,
    LinearObjective,
    codimension,
    optimize_components,
    slice_bound,
    solve_linear_idp,
)
from .monomial import (
    Monomial,
    divides,
    is_square_free,
    mono_colon,
    mono_gcd,
    mono_lcm,
    mono_mul,
    one,
    projection,
    radical,
    support,
    total_degree,
    variable_power,
)
from .oracle import (
    brute_force_decomposition,
    brute_force_msm,
    brute_force_slice_content,
)
from .random_ideals import random_ideal
from .slices import (
    Slice,
    SplitDecision,
    apply_lower_bound,
    base_case_content,
    content_lower_bound,
    independence_partition,
    initial_slice,
    is_base_case,
    label_split,
    normalize,
    pivot_split,
    prune_double_maximal,
    prune_subtract,
    simplify,
)
from .strategies import DEFAULT_STRATEGY, STRATEGY_IDS, make_selector

__version__ = "0.1.0"

__all__ = [
    "COMPRESSION_THRESHOLD",
    "BestRecord",
    "BoundGuard",
    "DEFAULT_STRATEGY",
    "EngineStats",
    "ExponentCompression",
    "IdpResult",
    "IrreducibleComponent",
    "LinearObjective",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "STRATEGY_IDS",
    "Slice",
    "SplitDecision",
    "ZERO_COMPONENT",
    "alexander_dual",
    "apply_lower_bound",
    "base_case_content",
    "brute_force_decomposition",
    "brute_force_msm",
    "brute_force_slice_content",
    "codimension",
    "components_to_dual",
    "compute_content",
    "compute_content_checked",
    "content_lower_bound",
    "divides",
    "format_ideal",
    "format_row",
    "independence_partition",
    "initial_slice",
    "irreducible_decomposition",
    "is_base_case",
    "is_square_free",
    "label_split",
    "make_artinian",
    "make_selector",
    "maximal_standard_monomials",
    "minimize_gens",
    "mono_colon",
    "mono_gcd",
    "mono_lcm",
    "mono_mul",
    "msm",
    "msm_to_component",
    "normalize",
    "one",
    "optimize_components",
    "parse_ideal",
    "pivot_split",
    "projection",
    "prune_double_maximal",
    "prune_subtract",
    "radical",
    "random_ideal",
    "simplify",
    "slice_bound",
    "solve_linear_idp",
    "stream_decomposition",
    "stream_msm",
    "support",
    "total_degree",
    "variable_power",
]
