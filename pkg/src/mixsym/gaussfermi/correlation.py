"""Correlation matrices of Gaussian states and their local diagnostics.

A Gaussian (free-fermion) state is fully specified by C(x, y) = <c_x^dag c_y>.
Restricted to a region A, the eigenpairs (lambda_a, phi_a) of C_A give every
local quantity used here:

    renyi1(x)    = sum_a |phi_a(x)|^2 sqrt(lambda_a (1 - lambda_a))
    moment_q(x)  = [C_A^q (1 - C_A)^q]_{xx}
    escape(x)    = sum_{y not in A} |C(x, y)|^2   (ground states)
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from ..densemix.states import DensityMatrix

SPECTRUM_SLACK = 1e-6
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class CorrelationMatrix:
    """Hermitian matrix with spectrum in [0, 1], indexed by retained sites.

    ``indices`` records the original lattice index of each row/column, and
    ``coords`` the matching coordinates, so restrictions keep their geometry.
    """

    matrix: np.ndarray
    indices: np.ndarray
    coords: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.matrix.shape[0]
        if self.matrix.shape != (n, n):
            raise ValueError("correlation matrix must be square")
        if len(self.indices) != n or self.coords.shape[0] != n:
            raise ValueError("site bookkeeping does not match matrix size")
        dev = np.max(np.abs(self.matrix - self.matrix.conj().T)) if n else 0.0
        if dev > 1e-9:
            raise ValueError(f"correlation matrix not Hermitian: deviation {dev:.3e}")

    @property
    def n_sites(self):
        return self.matrix.shape[0]

    def position_of(self, lattice_index):
        hits = np.flatnonzero(self.indices == lattice_index)
        if len(hits) != 1:
            raise KeyError(f"lattice index {lattice_index} not in this restriction")
        return int(hits[0])


def ground_state_correlation(ham, filling):
    """Fill the lowest round(filling * N) single-particle modes.

    A degenerate Fermi level (within 1e-10) is filled in ascending
    eigenvalue-label order and flagged with a warning; the result is still
    deterministic for a fixed input matrix.
    """
    if not 0.0 <= filling <= 1.0:
        raise ValueError("filling must lie in [0, 1]")
    n = ham.n_sites
    k = int(round(filling * n))
    w, v = np.linalg.eigh(ham.matrix)
    if 0 < k < n and abs(w[k] - w[k - 1]) < DEGENERACY_TOL:
        warnings.warn(
            "degenerate Fermi level: filling the shell in ascending label order",
            stacklevel=2,
        )
    occ = v[:, :k]
    c = occ.conj() @ occ.T
    return CorrelationMatrix(
        c,
        np.arange(n),
        ham.geometry.coords.copy(),
        {"model": ham.name, "filling": filling, "seed": ham.seed},
    )


def restrict(c, region):
    """Principal submatrix on the (nonempty) region index set."""
    region = np.asarray(region, dtype=int)
    if region.size == 0:
        raise ValueError("empty region")
    sub = c.matrix[np.ix_(region, region)]
    return CorrelationMatrix(
        np.ascontiguousarray(sub),
        c.indices[region].copy(),
        c.coords[region].copy(),
        dict(c.meta),
    )


def _clipped_spectrum(c_a):
    w, v = np.linalg.eigh(c_a.matrix)
    if w[0] < -SPECTRUM_SLACK or w[-1] > 1.0 + SPECTRUM_SLACK:
        raise ValueError(
            f"correlation spectrum [{w[0]:.3e}, {w[-1]:.3e}] escapes [0, 1]"
        )
    return np.clip(w, 0.0, 1.0), v


def gaussian_renyi1(c_a, lattice_index):
    """[sqrt(C_A (1 - C_A))]_{xx}: the one-point Renyi-1 correlator."""
    x = c_a.position_of(lattice_index)
    w, v = _clipped_spectrum(c_a)
    amp = np.abs(v[x, :]) ** 2
    return float(np.sum(amp * np.sqrt(w * (1.0 - w))))


def replicated_moment(c_a, lattice_index, q):
    """[C_A^q (1 - C_A)^q]_{xx} for positive (half-)integer or real q."""
    if q <= 0:
        raise ValueError("replica power q must be positive")
    x = c_a.position_of(lattice_index)
    w, v = _clipped_spectrum(c_a)
    amp = np.abs(v[x, :]) ** 2
    return float(np.sum(amp * w**q * (1.0 - w) ** q))


def escape_integral(c_full, region, lattice_index):
    """sum_{y not in A} |C(x, y)|^2 for a ground-state (projector) C."""
    region = np.asarray(region, dtype=int)
    x = c_full.position_of(lattice_index)
    row = c_full.matrix[x]
    total = float(np.sum(np.abs(row) ** 2))
    inside = float(np.sum(np.abs(row[region]) ** 2))
    return total - inside


def jw_annihilation(n_sites, x):
    """Dense annihilation operator on qubit x of n: Z-string times |0><1|."""
    z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    lower = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    out = np.array([[1.0 + 0j]])
    for j in range(n_sites):
        if j < x:
            out = np.kron(out, z)
        elif j == x:
            out = np.kron(out, lower)
        else:
            out = np.kron(out, np.eye(2, dtype=complex))
    return out


def dense_oracle(c_a, max_sites=10):
    """Exact many-body density matrix of the Gaussian state on <= 10 sites.

    Builds prod_a [(1 - lambda_a)(1 - n_a) + lambda_a n_a] with mode number
    operators n_a from the eigenvectors of C_A, in the fermion-to-qubit
    encoding fixed by site order.  Two-point functions of the output match
    C_A, which the caller can verify independently.
    """
    n = c_a.n_sites
    if n > max_sites:
        raise ValueError(f"dense construction capped at {max_sites} sites")
    w, v = _clipped_spectrum(c_a)
    dim = 2**n
    cs = [jw_annihilation(n, x) for x in range(n)]
    rho = np.eye(dim, dtype=complex)
    for a in range(n):
        f_dag = np.zeros((dim, dim), dtype=complex)
        for x in range(n):
            f_dag += np.conj(v[x, a]) * cs[x].conj().T
        n_op = f_dag @ f_dag.conj().T
        rho = rho @ ((1.0 - w[a]) * (np.eye(dim) - n_op) + w[a] * n_op)
    rho = (rho + rho.conj().T) / 2.0
    rho /= np.trace(rho).real
    sites = tuple((int(i), 2) for i in c_a.indices)
    return DensityMatrix(sites, rho)
