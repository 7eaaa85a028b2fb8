"""Exact computer algebra for finite-dimensional Hopf algebras.

Structure maps are exact matrices (:class:`LinMap`) over Q or a cyclotomic
field; every axiom is checked as an equality of matrices.
"""

from .builders import (
    CayleyTable,
    cyclic_group,
    dihedral_group,
    function_algebra,
    group_algebra,
    preset,
    symmetric3,
    symmetric_group,
    taft,
    trivial,
)
from .doubles import (
    QuasiTriangularData,
    check_quasitriangular,
    double_iso_check,
    drinfeld_double,
    drinfeld_r_matrix,
    red_double,
    red_r_matrix,
    rho_iso,
    yang_baxter_check,
)
from .errors import (
    AntipodeOneSided,
    DegeneratePairing,
    DimensionMismatch,
    FieldMismatch,
    HopfError,
    InternalInconsistency,
    InvalidForm,
    NoAntipode,
    NotAGroup,
    NotCoinvertible,
    NotRankOne,
    ParseError,
    Singular,
    SnakeFailure,
)
from .hopfcore import (
    BialgebraData,
    HopfData,
    Report,
    antipode_order,
    check_bialgebra,
    check_hopf,
    convolution,
    dual_hopf,
    op_variant,
    sigma_variant,
    solve_antipode,
)
from .hopffrobenius import (
    HopfFrobeniusData,
    build_hf,
    element_from_form,
    form_from_element,
    green_transpose,
    rescale,
    scalar_equivalence,
    verify_hf,
)
from .integrals import (
    IntegralPair,
    antipode_inverse_formula,
    check_nondegenerate,
    cointegral_space,
    equaliser_dimension_check,
    frobenius_condition,
    integral_morphism,
    integral_space,
)
from .scalars import CycloScalar, Field, cyclotomic_poly, invert, primitive_root
from .tensorlin import (
    LinMap,
    compose,
    identity,
    invert_matrix,
    kernel_basis,
    kron,
    permute_factors,
    rank_one_factor,
    swap,
)

__version__ = "0.1.0"
