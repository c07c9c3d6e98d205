"""Closed-form scaling predictions and fitting utilities."""

from .cft import CftParams, cft_renyi1_zero_t, cft_renyi2n_interval, thermal_plateau
from .fermi import (
    chiral_halfline,
    disk_d,
    halfline_full,
    halfspace,
    midpoint_1d,
)
from .fitting import FitResult, fit_plateau, fit_power_law

__all__ = [
    "CftParams",
    "cft_renyi1_zero_t",
    "cft_renyi2n_interval",
    "thermal_plateau",
    "chiral_halfline",
    "disk_d",
    "halfline_full",
    "halfspace",
    "midpoint_1d",
    "FitResult",
    "fit_plateau",
    "fit_power_law",
]
