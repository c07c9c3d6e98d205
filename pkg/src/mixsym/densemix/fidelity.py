"""Fidelity-based order parameters for mixed states.

The fidelity between positive semidefinite matrices is computed as the
nuclear norm of sqrt(rho) sqrt(sigma).  This route is numerically much more
accurate near rank deficiency than taking eigenvalues of
sqrt(rho) sigma sqrt(rho): singular values perturb linearly in the matrix
error, whereas square roots of clipped near-zero eigenvalues lose half the
digits.
"""

from __future__ import annotations

import numpy as np

from .operators import dagger, embed_operator, operator_product, supports_disjoint
from .states import DensityMatrix

PSD_TOL = 1e-10


def _as_matrix(state):
    if isinstance(state, DensityMatrix):
        return state.data
    return np.asarray(state, dtype=complex)


def sqrt_psd(m, tol=PSD_TOL):
    """Hermitian square root with spectral clipping.

    Eigenvalues in [-tol, 0) are treated as roundoff and clipped to zero;
    anything below -tol is a genuine violation and rejected.
    """
    w, v = np.linalg.eigh(m)
    if w[0] < -tol * max(1.0, float(w[-1])):
        raise ValueError(f"matrix is not PSD: min eigenvalue {w[0]:.3e}")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def fidelity(rho, sigma):
    """Tr sqrt(sqrt(rho) sigma sqrt(rho)), evaluated as ||sqrt(rho)sqrt(sigma)||_1.

    ``sigma`` may be subnormalized (any finite trace).  Returns a value in
    [0, 1] when both arguments are unit trace.
    """
    a = _as_matrix(rho)
    b = _as_matrix(sigma)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    sa = sqrt_psd(a)
    sb = sqrt_psd(b)
    sv = np.linalg.svd(sa @ sb, compute_uv=False)
    return float(np.sum(sv))


def lfc_one_point(rho_a, op):
    """Local fidelity correlator F(rho_A, O rho_A O^dag), unrenormalized."""
    m = embed_operator(op, rho_a.sites)
    sigma = m @ rho_a.data @ m.conj().T
    return fidelity(rho_a.data, sigma)


def two_point_fidelity(rho, op_x, op_y):
    """F(rho, Ox Oy^dag rho Oy Ox^dag) for disjointly supported operators."""
    if not supports_disjoint(op_x, op_y):
        raise ValueError("two-point correlator requires disjoint supports")
    prod = operator_product(op_x, op_y, dagger_b=True)
    return lfc_one_point(rho, prod)


def connected_fidelity_matrix(rho, ops):
    """Matrix F(rho; Ox Oy^dag) - F(rho; Ox) F(rho; Oy^dag).

    Diagonal entries use Ox Ox^dag.  Supports may overlap; products are
    formed on the union support.
    """
    n = len(ops)
    one_pt = np.array([lfc_one_point(rho, o) for o in ops])
    one_pt_dag = np.array([lfc_one_point(rho, dagger(o)) for o in ops])
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            prod = operator_product(ops[i], ops[j], dagger_b=True)
            out[i, j] = lfc_one_point(rho, prod) - one_pt[i] * one_pt_dag[j]
    return out


def averaged_one_two_check(rho_a, ops):
    """Both sides of the averaged two-point vs one-point inequality.

    Returns (avg_two_point, avg_one_point_squared) where the two-point
    average runs over all ordered pairs including the diagonal.
    """
    n = len(ops)
    one = np.array([lfc_one_point(rho_a, o) for o in ops])
    total = 0.0
    for i in range(n):
        for j in range(n):
            prod = operator_product(ops[i], ops[j], dagger_b=True)
            total += lfc_one_point(rho_a, prod)
    avg_two = total / n**2
    avg_one_sq = float(np.mean(one)) ** 2
    return avg_two, avg_one_sq
