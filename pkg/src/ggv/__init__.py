"""Generalized gyrovector spaces with an executable verification suite.

The package provides the gyrogroup and scalar-action calculus, four concrete
models (real normed space, Einstein and Mobius balls, and a transplanted-line
model whose unit norm is the real number 1), the gyrometric and gyromidpoint
machinery with its linearized metric, and seeded numerical experiments that
exercise the Mazur-Ulam property of gyrometric-preserving maps.
"""

from .errors import (
    BoundaryClampWarning,
    ConfigError,
    DomainError,
    GgvError,
    MapConstructionError,
    PreconditionError,
)
from .gyrogroup import (
    GyroGroupOps,
    GyroPoint,
    coplus,
    gyr_apply,
    gyr_via_composition,
    ominus,
    oplus,
)
from .isometry import (
    DecompositionReport,
    DefectTrace,
    GyroMap,
    MidpointReport,
    ambient_rotation,
    compose_maps,
    decompose_mazur_ulam,
    defect_experiment,
    identity_map,
    left_translation,
    map_preservation_residual,
    point_reflection,
    random_isometry,
    random_isometry_between,
    random_rotation_matrix,
    require_gyrometric_preserving,
    transport,
    verify_midpoint_preservation,
)
from .models import (
    KINDS,
    ModelConfig,
    make_model,
    make_point,
    path_Phi,
    path_Phi_inv,
    path_T,
    path_T_inv,
)
from .space import (
    GgvModel,
    NormValue,
    NormValueSpace,
    delinearize,
    gnorm,
    gyrometric,
    gyromidpoint,
    linearize,
    metric_distance,
    nv_add,
    nv_le_nonneg,
    nv_smul,
    otimes,
)
from .verify import GROUPS, VerificationReport, run_all, run_check, run_group

__version__ = "0.1.0"

__all__ = [
    "BoundaryClampWarning",
    "ConfigError",
    "DecompositionReport",
    "DefectTrace",
    "DomainError",
    "GROUPS",
    "GgvError",
    "GgvModel",
    "GyroGroupOps",
    "GyroMap",
    "GyroPoint",
    "KINDS",
    "MapConstructionError",
    "MidpointReport",
    "ModelConfig",
    "NormValue",
    "NormValueSpace",
    "PreconditionError",
    "VerificationReport",
    "ambient_rotation",
    "compose_maps",
    "coplus",
    "decompose_mazur_ulam",
    "defect_experiment",
    "delinearize",
    "gnorm",
    "gyr_apply",
    "gyr_via_composition",
    "gyrometric",
    "gyromidpoint",
    "identity_map",
    "left_translation",
    "linearize",
    "make_model",
    "make_point",
    "map_preservation_residual",
    "metric_distance",
    "nv_add",
    "nv_le_nonneg",
    "nv_smul",
    "ominus",
    "oplus",
    "otimes",
    "path_Phi",
    "path_Phi_inv",
    "path_T",
    "path_T_inv",
    "point_reflection",
    "random_isometry",
    "random_isometry_between",
    "random_rotation_matrix",
    "require_gyrometric_preserving",
    "run_all",
    "run_check",
    "run_group",
    "transport",
    "verify_midpoint_preservation",
]
