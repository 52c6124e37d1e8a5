"""Exact position marginals of random permutations with a fixed
Robinson-Schensted shape.

Conditioning a uniform permutation on its RS shape being a hook, a
two-row shape, or a rectangle leaves the probability P(sigma(i) = j)
computable in closed form.  This package evaluates those marginal
matrices in exact rational arithmetic, cross-checks them against a
brute-force enumeration for small n, and ships a CLI (``rsm``) for
matrices, heat maps, generating-polynomial grids, and fixed-point
trace tables.
"""

from .marginals import (
    CountMatrix,
    GenPoly,
    ProbMatrix,
    ShapeFamily,
    UnsupportedShape,
    classify,
    count_matrix,
    gen_poly_rect,
    hook_entry,
    marginal_matrix,
    rect_Z,
    support_predicate,
    tworow_entry,
)
from .rs import lis_length, shape_of, viennot_rs
from .stats import convergence_table, expected_fixed_points, hook_trace, tworow_trace
from .young import (
    StandardTableau,
    conjugate,
    f_syt,
    format_partition,
    parse_partition,
)

__version__ = "1.0.0"

__all__ = [
    "CountMatrix",
    "GenPoly",
    "ProbMatrix",
    "ShapeFamily",
    "StandardTableau",
    "UnsupportedShape",
    "classify",
    "conjugate",
    "convergence_table",
    "count_matrix",
    "expected_fixed_points",
    "f_syt",
    "format_partition",
    "gen_poly_rect",
    "hook_entry",
    "hook_trace",
    "lis_length",
    "marginal_matrix",
    "parse_partition",
    "rect_Z",
    "shape_of",
    "support_predicate",
    "tworow_entry",
    "tworow_trace",
    "viennot_rs",
]
