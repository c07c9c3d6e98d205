"""Fermi-surface geometry from dispersion grids via marching squares."""

from __future__ import annotations

import numpy as np
from skimage import measure


def square_dispersion_grid(n, hopping=1.0):
    """Dispersion -2 t (cos kx + cos ky) on an (n+1)^2 grid over [-pi, pi]^2.

    Returns (kx, ky, eps) with kx, ky 1d axes; both endpoints are included
    so level sets close across the zone boundary.
    """
    k = np.linspace(-np.pi, np.pi, n + 1)
    kx, ky = np.meshgrid(k, k, indexing="ij")
    eps = -2.0 * hopping * (np.cos(kx) + np.cos(ky))
    return k, k, eps


def chemical_potential(eps, filling):
    """Grid quantile: the level below which a ``filling`` fraction of modes sit."""
    if not 0.0 < filling < 1.0:
        raise ValueError("filling must lie strictly inside (0, 1)")
    return float(np.quantile(eps.reshape(-1), filling))


def _contours(eps, level):
    segs = measure.find_contours(eps, level)
    if not segs:
        raise ValueError("level set is empty at this filling")
    return segs


def fermi_surface_area(eps, filling, dk):
    """Total length (d=2 surface measure) of the eps = mu level set.

    ``dk`` is the grid spacing in momentum units; contour coordinates from
    marching squares are index-valued and are scaled by dk.
    """
    mu = chemical_potential(eps, filling)
    total = 0.0
    for seg in _contours(eps, mu):
        diffs = np.diff(seg, axis=0) * dk
        total += float(np.sum(np.linalg.norm(diffs, axis=1)))
    return total


def _bilinear(grid, r, c):
    r0 = min(max(int(np.floor(r)), 0), grid.shape[0] - 2)
    c0 = min(max(int(np.floor(c)), 0), grid.shape[1] - 2)
    fr, fc = r - r0, c - c0
    return (
        grid[r0, c0] * (1 - fr) * (1 - fc)
        + grid[r0 + 1, c0] * fr * (1 - fc)
        + grid[r0, c0 + 1] * (1 - fr) * fc
        + grid[r0 + 1, c0 + 1] * fr * fc
    )


def fs_normal_flux(eps, filling, normal, dk):
    """integral over the Fermi surface of |vhat(k) . nhat| dS.

    The group velocity is the dispersion gradient on the grid, sampled at
    segment midpoints by bilinear interpolation.
    """
    mu = chemical_potential(eps, filling)
    vx, vy = np.gradient(eps, dk)
    nrm = np.asarray(normal, dtype=float)
    nrm = nrm / np.linalg.norm(nrm)
    total = 0.0
    for seg in _contours(eps, mu):
        for a, b in zip(seg[:-1], seg[1:]):
            mid = (a + b) / 2.0
            v = np.array([_bilinear(vx, *mid), _bilinear(vy, *mid)])
            speed = np.linalg.norm(v)
            if speed == 0.0:
                continue
            ds = float(np.linalg.norm((b - a) * dk))
            total += abs(float(v @ nrm)) / speed * ds
    return total
