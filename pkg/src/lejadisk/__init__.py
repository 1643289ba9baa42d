"""Leja nodes on the complex unit disk.

Exact closed-form construction of the node sequence, Lagrange interpolation
and the (quadratic) Lebesgue functions, boundary suprema, greedy selection
on point clouds, and an exact dyadic recursion that certifies the sharp
bounds on the Lebesgue constants.
"""

from .core import (
    BinaryExpansion,
    DyadicAngle,
    DyadicRational,
    LejaSection,
    binary_expand,
)
from .disk import (
    SymmetryReport,
    check_symmetry_relations,
    doubling_section,
    explicit_leja_point,
    explicit_section,
)
from .extrema import (
    ExtremumReport,
    lebesgue_constant,
    lebesgue_constants_sweep,
    lebesgue_sharp_bound,
    quadratic_lebesgue_constant,
    quadratic_sharp_bound,
    sup_on_circle,
)
from .greedy import (
    DiscretizedCompact,
    circle_grid,
    find_rotation_match,
    greedy_extend,
    greedy_section,
    transfinite_diameter_diagnostic,
)
from .interp import LagrangeBasis, halving_identity_check
from .recursion import (
    MajorantSequence,
    closed_form_check,
    defect_expansion_sum,
    defect_reduction_check,
    defect_value,
    defect_zero_indices,
    majorant_value,
    predicted_zero_defect_indices,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryExpansion",
    "DyadicAngle",
    "DyadicRational",
    "LejaSection",
    "binary_expand",
    "SymmetryReport",
    "check_symmetry_relations",
    "doubling_section",
    "explicit_leja_point",
    "explicit_section",
    "ExtremumReport",
    "lebesgue_constant",
    "lebesgue_constants_sweep",
    "lebesgue_sharp_bound",
    "quadratic_lebesgue_constant",
    "quadratic_sharp_bound",
    "sup_on_circle",
    "DiscretizedCompact",
    "circle_grid",
    "find_rotation_match",
    "greedy_extend",
    "greedy_section",
    "transfinite_diameter_diagnostic",
    "LagrangeBasis",
    "halving_identity_check",
    "MajorantSequence",
    "closed_form_check",
    "defect_expansion_sum",
    "defect_reduction_check",
    "defect_value",
    "defect_zero_indices",
    "majorant_value",
    "predicted_zero_defect_indices",
]
