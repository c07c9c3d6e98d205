"""Quadratic (hopping) Hamiltonian builders on labeled geometries."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lattice import LatticeGeometry, chain_geometry, square_geometry

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class QuadraticHamiltonian:
    """Single-particle matrix J of H = sum_ij J_ij c_i^dag c_j."""

    geometry: LatticeGeometry
    matrix: np.ndarray
    name: str
    params: dict = field(default_factory=dict)
    seed: int = None

    def __post_init__(self):
        dev = np.max(np.abs(self.matrix - self.matrix.conj().T))
        if dev > HERMITICITY_TOL:
            raise ValueError(f"hopping matrix not Hermitian: deviation {dev:.3e}")
        if self.matrix.shape[0] != self.geometry.n_sites:
            raise ValueError("matrix size does not match geometry")

    @property
    def n_sites(self):
        return self.geometry.n_sites


def fermi_chain_1d(length, periodic=True):
    """Uniform chain with hopping amplitude -1."""
    geo = chain_geometry(length, periodic)
    j = np.zeros((length, length))
    for i in range(length - 1):
        j[i, i + 1] = j[i + 1, i] = -1.0
    if periodic and length > 2:
        j[length - 1, 0] = j[0, length - 1] = -1.0
    return QuadraticHamiltonian(geo, j, "fermi_chain_1d", {"length": length, "periodic": periodic})


def _square_index(lx, ly):
    def idx(x, y):
        return x * ly + y

    return idx


def square_lattice_2d(lx, ly, periodic=True):
    """Square lattice with nearest-neighbor hopping -1."""
    geo = square_geometry(lx, ly, periodic)
    n = lx * ly
    j = np.zeros((n, n))
    idx = _square_index(lx, ly)
    for x in range(lx):
        for y in range(ly):
            a = idx(x, y)
            if x + 1 < lx or periodic:
                b = idx((x + 1) % lx, y)
                j[a, b] = j[b, a] = -1.0
            if y + 1 < ly or periodic:
                b = idx(x, (y + 1) % ly)
                j[a, b] = j[b, a] = -1.0
    return QuadraticHamiltonian(
        geo, j, "square_lattice_2d", {"lx": lx, "ly": ly, "periodic": periodic}
    )


def pi_flux_2d(lx, ly, periodic=True):
    """Square lattice with flux pi per plaquette.

    Gauge: horizontal hopping -1, vertical hopping -(-1)^x.  Periodic
    boundaries require even extents so the flux pattern closes.
    """
    if periodic and (lx % 2 or ly % 2):
        raise ValueError("periodic flux pattern requires even extents")
    geo = square_geometry(lx, ly, periodic)
    n = lx * ly
    j = np.zeros((n, n))
    idx = _square_index(lx, ly)
    for x in range(lx):
        for y in range(ly):
            a = idx(x, y)
            if x + 1 < lx or periodic:
                b = idx((x + 1) % lx, y)
                j[a, b] = j[b, a] = -1.0
            if y + 1 < ly or periodic:
                b = idx(x, (y + 1) % ly)
                amp = -((-1.0) ** x)
                j[a, b] = j[b, a] = amp
    return QuadraticHamiltonian(geo, j, "pi_flux_2d", {"lx": lx, "ly": ly, "periodic": periodic})


def anderson_2d(length, disorder, seed, periodic=True):
    """Square lattice plus iid uniform[-W/2, W/2] on-site potentials."""
    if disorder < 0:
        raise ValueError("disorder strength must be nonnegative")
    base = square_lattice_2d(length, length, periodic)
    rng = np.random.default_rng(seed)
    eps = rng.uniform(-disorder / 2.0, disorder / 2.0, size=base.n_sites)
    j = base.matrix + np.diag(eps)
    return QuadraticHamiltonian(
        base.geometry,
        j,
        "anderson_2d",
        {"length": length, "disorder": disorder, "periodic": periodic},
        seed,
    )


def goe_hamiltonian(n, coupling, seed):
    """Random symmetric matrix: off-diagonal variance J^2/N, diagonal 2J^2/N.

    The empirical spectral density approaches a semicircle of radius 2J.
    """
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    j = (a + a.T) * (coupling / np.sqrt(2.0 * n))
    coords = np.arange(n, dtype=float)[:, None]
    geo = LatticeGeometry(1, (float(n),), coords, periodic=False)
    return QuadraticHamiltonian(geo, j, "goe", {"n": n, "coupling": coupling}, seed)


def plaquette_fluxes(ham):
    """Product of hopping signs around every unit plaquette of a square model."""
    params = ham.params
    lx = params.get("lx", params.get("length"))
    ly = params.get("ly", params.get("length"))
    periodic = params.get("periodic", True)
    idx = _square_index(lx, ly)
    j = ham.matrix
    out = []
    xs = range(lx) if periodic else range(lx - 1)
    ys = range(ly) if periodic else range(ly - 1)
    for x in xs:
        for y in ys:
            a = idx(x, y)
            b = idx((x + 1) % lx, y)
            c = idx((x + 1) % lx, (y + 1) % ly)
            d = idx(x, (y + 1) % ly)
            flux = j[a, b] * j[b, c] * j[c, d] * j[d, a]
            out.append(np.sign(flux))
    return np.array(out)
