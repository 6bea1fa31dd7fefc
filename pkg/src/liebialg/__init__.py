"""Exact Lie bialgebra duality: cocommutators, dual homogeneous spaces and their geometry."""
from .scalar import ParameterMismatch, Scalar, SubstitutionError
from .lie import (
    LieAlgebra,
    NotASubalgebra,
    SubalgebraSplitting,
    adjoint_matrix,
    bracket,
    is_subalgebra,
    jacobi_defect,
    reductive_check,
    symmetric_check,
)
from .tensor import (
    AntisymmetryError,
    Bivector,
    BlockProfile,
    Trivector,
    ad_invariance_defect,
    ad_on_bivector,
    block_components,
    block_profile,
    schouten_square,
    wedge,
)
from .bialgebra import (
    CocycleError,
    Cocommutator,
    CoJacobiError,
    LieBialgebra,
    coboundary_cocommutator,
    co_jacobi_defect,
    cocycle_defect,
    dual_bracket,
    dual_cocommutator,
    make_bialgebra,
)
from .duality import (
    Classification,
    ConditionVerdict,
    classify,
    coisotropy_check,
    coreductivity_check,
    cosymmetry_check,
    dual_inclusions,
    dual_splitting,
    generic_r_analysis,
)
from .geometry import (
    GeometryReport,
    MetricSolutionSpace,
    NotReductive,
    canonical_curvature,
    canonical_torsion,
    geometry_report,
    invariant_metric_space,
    ricci,
)
from .catalog import CatalogEntry, fixtures, get_entry, lorentzian_2plus1, lorentzian_3plus1, run_fixtures
from .problem import ProblemDocument, ProblemError, parse_expression, parse_problem, serialize

__version__ = "0.1.0"
