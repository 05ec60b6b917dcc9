"""Split-quaternion (Cl(1,1)) algebra, regularity analysis and left-regular generators."""

from .algebra import (
    ComplexCl,
    Matrix2,
    NullElement,
    SplitQuaternion,
    conjugate,
    from_matrix,
    idempotent,
    inverse,
    multiply,
    quadratic_form,
    to_matrix,
)
from .polynomial import CliffordPolyMap, NullForm, Poly4, from_null_coordinates, to_null_coordinates
from .syntax import ParseError, format_element, format_map, format_poly, parse_element, parse_function, parse_poly
from .operators import (
    RegularityReport,
    apply_D,
    apply_operator,
    check_differentiable,
    check_regularity,
    is_ultrahyperbolic,
    laplacian,
)
from .generators import (
    AffineSpec,
    NotUltrahyperbolic,
    OneClassSpec,
    VariableViolation,
    affine,
    ck_extend_2d,
    ck_extend_3d,
    grad_ultrahyperbolic,
    oneclass_construct,
    oneclass_detect,
)
from .cauchy import (
    ConfigError,
    NotLeftRegular,
    QuadratureConfig,
    QuadratureEstimate,
    contour_estimate,
    integral_estimate,
)

__version__ = "0.1.0"
