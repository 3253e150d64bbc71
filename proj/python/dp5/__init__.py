"""Integral points of bounded log-anticanonical height on the split quintic del Pezzo surface."""

from ._core import (
    HeightSet,
    alpha_exact,
    archimedean_density,
    blow_down,
    canonicalize_orbit,
    chart_lift,
    coprimality_check,
    count_direct,
    count_series,
    count_torsor,
    euler_local_factor,
    euler_product,
    ff_surface_count,
    gcd_identity_check,
    height_cox,
    height_projective,
    is_integral,
    leading_constant,
    padic_density_check,
    pluecker_residuals,
)

__all__ = [
    "HeightSet",
    "alpha_exact",
    "archimedean_density",
    "blow_down",
    "canonicalize_orbit",
    "chart_lift",
    "coprimality_check",
    "count_direct",
    "count_series",
    "count_torsor",
    "euler_local_factor",
    "euler_product",
    "ff_surface_count",
    "gcd_identity_check",
    "height_cox",
    "height_projective",
    "is_integral",
    "leading_constant",
    "padic_density_check",
    "pluecker_residuals",
]
