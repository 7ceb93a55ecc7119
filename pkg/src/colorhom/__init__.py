"""colorhom: exact cohomology of left-symmetric color algebras.

Scalars live in cyclotomic fields, gradings in finite abelian groups, and
every rank that decides a cohomology dimension is computed over exact
rational arithmetic.  See the README for the CLI and file formats.
"""

from .algebra import (
    AlgebraError,
    ColorAlgebra,
    LieColorAlgebra,
    algebra_from_json,
    commutator_algebra,
    epsilon_derivations,
    left_mult_nilpotent,
    lie_from_brackets,
    validate_left_symmetric,
    validate_lie_color,
)
from .bimodule import (
    Bimodule,
    BimoduleError,
    LieModule,
    cochain_module_action,
    cochain_space,
    hom_bimodule,
    lie_module_from_bimodule,
    module_from_json,
    natural_bimodule,
    tensor_bimodule,
    trivial_bimodule,
    validate_bimodule,
    validate_left_module,
)
from .cohomology import (
    CochainComplex,
    CohomologyError,
    NonComplexWarning,
    build_lie_complex,
    build_lsca_complex,
    cohomology_table,
    invariant_subspace,
    lie_cochain_basis,
    lie_coboundary,
    lie_side_coefficients,
    lsca_cochain_basis,
    lsca_coboundary,
    naive_oracle_table,
    phi_matrix,
    table_lookup,
    verify_main_theorem,
)
from .glinalg import (
    GradedMap,
    GradedSpace,
    exact_kernel,
    exact_rank,
    exterior_basis,
    hom_space,
    straighten,
    tensor_space,
)
from .grading import (
    Bicharacter,
    BicharacterError,
    Degree,
    GradingError,
    GradingGroup,
    bichar_from_form,
    bichar_from_json,
    bichar_from_table,
    group_from_json,
    trivial_bicharacter,
)
from .scalars import (
    CycScalar,
    cyc_arith,
    cyc_make,
    cyclotomic_polynomial,
    parse_scalar,
    root_of_unity,
    scalar_to_json,
)
from .variety import (
    FamilySpec,
    VarietyError,
    allowed_products,
    family_from_json,
    identity_residual,
    parse_grid,
    scan_csv,
    scan_family,
)

__all__ = [
    "AlgebraError",
    "Bicharacter",
    "BicharacterError",
    "Bimodule",
    "BimoduleError",
    "CochainComplex",
    "CohomologyError",
    "ColorAlgebra",
    "CycScalar",
    "Degree",
    "FamilySpec",
    "GradedMap",
    "GradedSpace",
    "GradingError",
    "GradingGroup",
    "LieColorAlgebra",
    "LieModule",
    "NonComplexWarning",
    "VarietyError",
    "algebra_from_json",
    "allowed_products",
    "bichar_from_form",
    "bichar_from_json",
    "bichar_from_table",
    "build_lie_complex",
    "build_lsca_complex",
    "cochain_module_action",
    "cochain_space",
    "cohomology_table",
    "commutator_algebra",
    "cyc_arith",
    "cyc_make",
    "cyclotomic_polynomial",
    "epsilon_derivations",
    "exact_kernel",
    "exact_rank",
    "exterior_basis",
    "family_from_json",
    "group_from_json",
    "hom_bimodule",
    "hom_space",
    "identity_residual",
    "invariant_subspace",
    "left_mult_nilpotent",
    "lie_cochain_basis",
    "lie_coboundary",
    "lie_from_brackets",
    "lie_module_from_bimodule",
    "lie_side_coefficients",
    "lsca_cochain_basis",
    "lsca_coboundary",
    "module_from_json",
    "naive_oracle_table",
    "natural_bimodule",
    "parse_grid",
    "parse_scalar",
    "phi_matrix",
    "root_of_unity",
    "scalar_to_json",
    "scan_csv",
    "scan_family",
    "straighten",
    "table_lookup",
    "tensor_bimodule",
    "tensor_space",
    "trivial_bicharacter",
    "trivial_bimodule",
    "validate_bimodule",
    "validate_left_module",
    "validate_left_symmetric",
    "validate_lie_color",
    "verify_main_theorem",
]

__version__ = "0.1.0"
