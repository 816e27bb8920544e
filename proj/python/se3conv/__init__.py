"""SE(3) group convolution and tensor field network primitives."""

from ._se3conv import (
    BadZernikeIndex,
    IndexOutOfRange,
    NotARotation,
    Se3convError,
    ShapeMismatch,
    TriangleViolation,
    cg_scalar,
    cg_tensor_real,
    cli,
    exact_euler_grid,
    fps_rotations,
    icosahedral_group,
    real_spherical_harmonics,
    rotation_from_euler,
    verify,
    wigner_D_real,
    zernike_radial_coeffs,
)

__all__ = [
    "BadZernikeIndex",
    "IndexOutOfRange",
    "NotARotation",
    "Se3convError",
    "ShapeMismatch",
    "TriangleViolation",
    "cg_scalar",
    "cg_tensor_real",
    "cli",
    "exact_euler_grid",
    "fps_rotations",
    "icosahedral_group",
    "real_spherical_harmonics",
    "rotation_from_euler",
    "verify",
    "wigner_D_real",
    "zernike_radial_coeffs",
]
