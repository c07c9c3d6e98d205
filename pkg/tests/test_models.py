"""Hopping-model builders: spectra, fluxes, disorder, random-matrix limits."""

import numpy as np
import pytest

from mixsym.gaussfermi.lattice import chain_geometry
from mixsym.gaussfermi.models import (
    QuadraticHamiltonian,
    anderson_2d,
    fermi_chain_1d,
    goe_hamiltonian,
    pi_flux_2d,
    plaquette_fluxes,
    square_lattice_2d,
)


def test_periodic_chain_cosine_spectrum():
    length = 12
    ham = fermi_chain_1d(length)
    got = np.sort(np.linalg.eigvalsh(ham.matrix))
    want = np.sort(-2.0 * np.cos(2.0 * np.pi * np.arange(length) / length))
    assert np.max(np.abs(got - want)) < 1e-10


def test_open_chain_cosine_spectrum():
    length = 9
    ham = fermi_chain_1d(length, periodic=False)
    got = np.sort(np.linalg.eigvalsh(ham.matrix))
    want = np.sort(-2.0 * np.cos(np.pi * np.arange(1, length + 1) / (length + 1)))
    assert np.max(np.abs(got - want)) < 1e-10


def test_periodic_square_spectrum():
    lx = ly = 4
    ham = square_lattice_2d(lx, ly)
    kx = 2.0 * np.pi * np.arange(lx) / lx
    ky = 2.0 * np.pi * np.arange(ly) / ly
    want = np.sort((-2.0 * (np.cos(kx)[:, None] + np.cos(ky)[None, :])).reshape(-1))
    got = np.sort(np.linalg.eigvalsh(ham.matrix))
    assert np.max(np.abs(got - want)) < 1e-10


def test_square_plaquette_fluxes_trivial():
    for ham in (square_lattice_2d(4, 4), square_lattice_2d(5, 4, periodic=False)):
        fluxes = plaquette_fluxes(ham)
        assert all(abs(f - 1.0) < 1e-12 for f in fluxes)
    assert len(plaquette_fluxes(square_lattice_2d(5, 4, periodic=False))) == 4 * 3


def test_pi_flux_plaquettes():
    fluxes = plaquette_fluxes(pi_flux_2d(4, 4))
    assert len(fluxes) == 16
    assert all(abs(f + 1.0) < 1e-12 for f in fluxes)
    # open boundaries allow odd extents
    fluxes = plaquette_fluxes(pi_flux_2d(5, 5, periodic=False))
    assert all(abs(f + 1.0) < 1e-12 for f in fluxes)


def test_pi_flux_rejects_odd_periodic():
    with pytest.raises(ValueError):
        pi_flux_2d(5, 4)


def test_anderson_zero_disorder_is_clean():
    dirty = anderson_2d(6, 0.0, seed=3)
    clean = square_lattice_2d(6, 6)
    assert np.array_equal(dirty.matrix, clean.matrix)


def test_anderson_disorder_properties():
    w = 3.0
    a = anderson_2d(6, w, seed=0)
    b = anderson_2d(6, w, seed=0)
    c = anderson_2d(6, w, seed=1)
    assert np.array_equal(a.matrix, b.matrix)
    assert not np.array_equal(a.matrix, c.matrix)
    diag = np.diag(a.matrix)
    assert np.all(np.abs(diag) <= w / 2.0)
    off = a.matrix - np.diag(diag)
    assert np.array_equal(off, square_lattice_2d(6, 6).matrix)
    with pytest.raises(ValueError):
        anderson_2d(6, -1.0, seed=0)


def test_goe_symmetric_and_seeded():
    a = goe_hamiltonian(40, 1.0, seed=5)
    assert np.max(np.abs(a.matrix - a.matrix.T)) == 0.0
    assert np.array_equal(a.matrix, goe_hamiltonian(40, 1.0, seed=5).matrix)
    assert not np.array_equal(a.matrix, goe_hamiltonian(40, 1.0, seed=6).matrix)
    scaled = goe_hamiltonian(40, 2.0, seed=5)
    assert np.max(np.abs(scaled.matrix - 2.0 * a.matrix)) < 1e-12


def test_goe_semicircle_spectrum():
    # Kolmogorov distance to the semicircle CDF of radius 2J
    n = 600
    ev = np.sort(np.linalg.eigvalsh(goe_hamiltonian(n, 1.0, seed=0).matrix))
    x = np.clip(ev / 2.0, -1.0, 1.0)
    cdf = 0.5 + (x * np.sqrt(1.0 - x**2) + np.arcsin(x)) / np.pi
    emp_hi = np.arange(1, n + 1) / n
    emp_lo = np.arange(0, n) / n
    ks = max(np.max(np.abs(emp_hi - cdf)), np.max(np.abs(emp_lo - cdf)))
    assert ks < 0.02


def test_hamiltonian_validation():
    geo = chain_geometry(3, periodic=False)
    bad = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]])
    with pytest.raises(ValueError):
        QuadraticHamiltonian(geo, bad, "bad")
    with pytest.raises(ValueError):
        QuadraticHamiltonian(geo, np.zeros((4, 4)), "bad")
