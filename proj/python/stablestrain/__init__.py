"""Floating-point stable finite-strain kinematics and hyperelastic stresses."""

from ._core import (
    InadmissibleState,
    axial,
    expm1mx,
    green_euler,
    green_lagrange,
    jm1,
    log1pmx,
    mooney_rivlin_stress,
    neo_hookean_stress,
    sweep,
    sweep_models,
)

__all__ = [
    "InadmissibleState",
    "axial",
    "expm1mx",
    "green_euler",
    "green_lagrange",
    "jm1",
    "log1pmx",
    "mooney_rivlin_stress",
    "neo_hookean_stress",
    "sweep",
    "sweep_models",
]
