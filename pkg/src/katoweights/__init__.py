"""Exact refined Kato constants for SO(n)/Spin(n) gradient operators.

The package splits R^n (x) V_lambda into irreducible summands with their
conformal weights, classifies which sums of generalized gradients are
injectively elliptic, and evaluates the optimal refined Kato constant of
each elliptic sum in exact rational arithmetic.  A numerical oracle builds
explicit tensor representations and confirms the symbolic results.
"""

from .scalars import (
    HalfInt,
    elementary_symmetric,
    format_rational,
    power_sum,
    sqrt_string,
)
from .weights import DominantWeight, WeightProfile, is_properly_half_integral, parse_weight, profile, validate
from .decomposition import (
    Component,
    Decomposition,
    VirtualWeight,
    decompose,
    to_json_dict,
    translated_weights,
    virtual_weights,
)
from .casimir import (
    CasimirReport,
    casimir_number,
    casimir_report,
    charpoly_partial_trace,
    conformal_weight,
    partial_trace_powers,
    relative_dimension,
    virtual_power_sum,
    weyl_dimension,
)
from .ellipticity import (
    EllipticityReport,
    branch_so_n_minus_1,
    check_nonelliptic_necessary,
    is_elliptic,
    maximal_non_elliptic_sets,
    minimal_elliptic_sets,
    ne_sets,
)
from .kato import (
    EqualityCase,
    KatoResult,
    PlusMinusConstants,
    SharpenedConstants,
    VertexPoint,
    closed_form,
    coordinate_bounds,
    half_integral_sharp_constants,
    kato_constant,
    plus_minus_constants,
    vertex_point,
    vertex_points,
)
from .tables import dim3_table, dim3_weight, dim4_table, dim4_weight

__version__ = "0.1.0"

__all__ = [
    "HalfInt",
    "elementary_symmetric",
    "power_sum",
    "format_rational",
    "sqrt_string",
    "DominantWeight",
    "WeightProfile",
    "validate",
    "parse_weight",
    "profile",
    "is_properly_half_integral",
    "VirtualWeight",
    "Component",
    "Decomposition",
    "virtual_weights",
    "decompose",
    "translated_weights",
    "to_json_dict",
    "CasimirReport",
    "casimir_number",
    "casimir_report",
    "conformal_weight",
    "weyl_dimension",
    "relative_dimension",
    "virtual_power_sum",
    "partial_trace_powers",
    "charpoly_partial_trace",
    "EllipticityReport",
    "minimal_elliptic_sets",
    "ne_sets",
    "maximal_non_elliptic_sets",
    "is_elliptic",
    "branch_so_n_minus_1",
    "check_nonelliptic_necessary",
    "VertexPoint",
    "EqualityCase",
    "KatoResult",
    "SharpenedConstants",
    "PlusMinusConstants",
    "vertex_point",
    "vertex_points",
    "kato_constant",
    "closed_form",
    "half_integral_sharp_constants",
    "plus_minus_constants",
    "coordinate_bounds",
    "dim3_weight",
    "dim4_weight",
    "dim3_table",
    "dim4_table",
    "__version__",
]
