"""Free-fermion scaling predictions for the one-point Renyi-1 correlator."""

from __future__ import annotations

import math


def _check_ell(ell):
    if ell <= 0:
        raise ValueError("distance must be positive")


def chiral_halfline(ell):
    """Single chiral branch, insertion at distance ell from a half-line end."""
    _check_ell(ell)
    return 1.0 / (4.0 * math.pi * ell)


def halfline_full(ell):
    """Both branches of a 1d metal on a half-line: twice the chiral value."""
    _check_ell(ell)
    return 1.0 / (2.0 * math.pi * ell)


def midpoint_1d(ell):
    """1d metal, insertion centered in an interval of half-width ell."""
    _check_ell(ell)
    return 1.0 / (math.pi * ell)


def disk_d(ell, fs_area, d):
    """d-dimensional ball of radius ell: fs_area / ((2 pi)^d ell)."""
    _check_ell(ell)
    if fs_area <= 0:
        raise ValueError("Fermi-surface area must be positive")
    return fs_area / ((2.0 * math.pi) ** d * ell)


def halfspace(ell, fs_integral, d):
    """Half-space at insertion depth ell.

    ``fs_integral`` is the Fermi-surface integral of |vhat . nhat| with nhat
    the boundary normal; the prediction is fs_integral / ((2 pi)^{d-1} 4 pi ell).
    In d = 1 the integral counts Fermi points, recovering halfline_full.
    """
    _check_ell(ell)
    if fs_integral <= 0:
        raise ValueError("Fermi-surface integral must be positive")
    return fs_integral / ((2.0 * math.pi) ** (d - 1) * 4.0 * math.pi * ell)
