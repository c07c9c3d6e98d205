"""Lattice geometries (lattice constant 1) and region selectors.

Regions are returned as sorted integer index arrays into the geometry's
site list.  Distances use the minimum-image convention under periodic
boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LatticeGeometry:
    """Sites with real coordinates in d dimensions.

    ``extents`` gives the box lengths used for minimum-image wrapping when
    ``periodic`` is set.
    """

    dimension: int
    extents: tuple
    coords: np.ndarray
    periodic: bool = True

    def __post_init__(self):
        if self.coords.shape[1] != self.dimension:
            raise ValueError("coordinate dimension mismatch")
        if len(self.extents) != self.dimension:
            raise ValueError("extents dimension mismatch")

    @property
    def n_sites(self):
        return self.coords.shape[0]


def chain_geometry(length, periodic=True):
    coords = np.arange(length, dtype=float)[:, None]
    return LatticeGeometry(1, (float(length),), coords, periodic)


def square_geometry(lx, ly, periodic=True):
    xs, ys = np.meshgrid(np.arange(lx), np.arange(ly), indexing="ij")
    coords = np.stack([xs.reshape(-1), ys.reshape(-1)], axis=1).astype(float)
    return LatticeGeometry(2, (float(lx), float(ly)), coords, periodic)


def minimum_image_displacement(geo, r_from, r_to):
    """Displacement vector(s) r_to - r_from, wrapped into the box if periodic."""
    d = np.atleast_2d(r_to) - np.atleast_1d(r_from)
    if geo.periodic:
        ext = np.array(geo.extents)
        d = d - ext * np.round(d / ext)
    return d


def _distances_from(geo, center_index):
    disp = minimum_image_displacement(geo, geo.coords[center_index], geo.coords)
    return np.linalg.norm(disp, axis=1)


def interval_region(geo, center_index, ell):
    """1d sites within distance ell of the center (a symmetric interval)."""
    if geo.dimension != 1:
        raise ValueError("interval regions require a 1d geometry")
    dist = _distances_from(geo, center_index)
    return np.flatnonzero(dist <= ell + 1e-9)


def disk_region(geo, center_index, ell):
    """Sites within Euclidean (minimum-image) distance ell of the center."""
    dist = _distances_from(geo, center_index)
    return np.flatnonzero(dist <= ell + 1e-9)


def halfspace_region(geo, normal, offset):
    """Sites r with normal . r <= offset (normal need not be normalized)."""
    nrm = np.asarray(normal, dtype=float)
    proj = geo.coords @ nrm / np.linalg.norm(nrm)
    return np.flatnonzero(proj <= offset + 1e-9)


def rectangle_region(geo, corner, shape):
    """Axis-aligned rectangle [corner, corner + shape) in coordinate units."""
    lo = np.asarray(corner, dtype=float)
    hi = lo + np.asarray(shape, dtype=float)
    ok = np.all((geo.coords >= lo - 1e-9) & (geo.coords < hi - 1e-9), axis=1)
    return np.flatnonzero(ok)


def central_site(geo):
    """Index of the site closest to the box center (ties break to lowest index)."""
    target = np.array(geo.extents) / 2.0
    dist = np.linalg.norm(geo.coords - target, axis=1)
    return int(np.argmin(dist))


def boundary_distance(geo, region, site_index):
    """Distance from a site to the nearest site outside the region."""
    inside = np.zeros(geo.n_sites, dtype=bool)
    inside[region] = True
    if inside.all():
        return float("inf")
    outside = np.flatnonzero(~inside)
    disp = minimum_image_displacement(geo, geo.coords[site_index], geo.coords[outside])
    return float(np.min(np.linalg.norm(disp, axis=1)))
