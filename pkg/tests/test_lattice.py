"""Geometry builders, minimum-image distances, and region selectors."""

import numpy as np
import pytest

from mixsym.gaussfermi.lattice import (
    LatticeGeometry,
    boundary_distance,
    central_site,
    chain_geometry,
    disk_region,
    halfspace_region,
    interval_region,
    minimum_image_displacement,
    rectangle_region,
    square_geometry,
)


def test_chain_geometry_basic():
    geo = chain_geometry(10)
    assert geo.n_sites == 10
    assert geo.dimension == 1
    assert geo.coords.shape == (10, 1)
    assert geo.extents == (10.0,)


def test_square_geometry_is_x_major():
    geo = square_geometry(3, 4)
    assert geo.n_sites == 12
    # index x * ly + y
    assert tuple(geo.coords[1 * 4 + 2]) == (1.0, 2.0)


def test_geometry_validation():
    with pytest.raises(ValueError):
        LatticeGeometry(2, (4.0, 4.0), np.zeros((4, 1)))
    with pytest.raises(ValueError):
        LatticeGeometry(1, (4.0, 4.0), np.zeros((4, 1)))


def test_minimum_image_wraps_periodic():
    geo = chain_geometry(10)
    d = minimum_image_displacement(geo, geo.coords[9], geo.coords[0])
    assert abs(d[0, 0] - 1.0) < 1e-12
    open_geo = chain_geometry(10, periodic=False)
    d = minimum_image_displacement(open_geo, open_geo.coords[9], open_geo.coords[0])
    assert abs(d[0, 0] + 9.0) < 1e-12


def test_interval_region_center_and_wrap():
    geo = chain_geometry(10)
    assert list(interval_region(geo, 5, 2)) == [3, 4, 5, 6, 7]
    # periodic wrap picks up sites from the far end
    assert list(interval_region(geo, 0, 2)) == [0, 1, 2, 8, 9]
    open_geo = chain_geometry(10, periodic=False)
    assert list(interval_region(open_geo, 0, 2)) == [0, 1, 2]


def test_interval_region_needs_1d():
    with pytest.raises(ValueError):
        interval_region(square_geometry(3, 3), 4, 1)


def test_disk_region_radii():
    geo = square_geometry(7, 7, periodic=False)
    center = 3 * 7 + 3
    assert len(disk_region(geo, center, 1)) == 5
    assert len(disk_region(geo, center, 1.5)) == 9
    assert len(disk_region(geo, center, 2)) == 13


def test_disk_region_wraps_periodic():
    geo = square_geometry(7, 7, periodic=True)
    idx = disk_region(geo, 0, 1)
    coords = {tuple(geo.coords[i]) for i in idx}
    assert coords == {(0.0, 0.0), (1.0, 0.0), (6.0, 0.0), (0.0, 1.0), (0.0, 6.0)}


def test_halfspace_region_scale_invariant_normal():
    geo = chain_geometry(10, periodic=False)
    a = halfspace_region(geo, (1.0,), 4.5)
    b = halfspace_region(geo, (2.0,), 4.5)
    assert list(a) == [0, 1, 2, 3, 4]
    assert list(a) == list(b)


def test_rectangle_region_half_open():
    geo = square_geometry(5, 5, periodic=False)
    idx = rectangle_region(geo, (1, 1), (2, 3))
    coords = {tuple(geo.coords[i]) for i in idx}
    assert coords == {(x, y) for x in (1.0, 2.0) for y in (1.0, 2.0, 3.0)}
    assert len(rectangle_region(geo, (0, 0), (5, 5))) == 25


def test_central_site():
    assert central_site(chain_geometry(10)) == 5
    geo = square_geometry(4, 4)
    assert tuple(geo.coords[central_site(geo)]) == (2.0, 2.0)


def test_boundary_distance():
    geo = chain_geometry(10, periodic=False)
    region = np.arange(3, 8)
    assert boundary_distance(geo, region, 5) == 3.0
    assert boundary_distance(geo, region, 3) == 1.0
    assert boundary_distance(geo, np.arange(10), 5) == float("inf")
