"""Renyi-alpha correlators via a single eigendecomposition.

With rho = V diag(w) V^dag and Ot = V^dag O V,

    Tr(rho^{a/2} O rho^{a/2} O^dag) = sum_ij w_i^{a/2} w_j^{a/2} |Ot_ij|^2,

so the correlator costs one eigh plus one basis rotation.  Zero eigenvalues
drop out of numerator and denominator alike, which implements fractional
powers on the support subspace of rank-deficient states.
"""

from __future__ import annotations

import numpy as np

from .operators import dagger, embed_operator, operator_product, supports_disjoint
from .fidelity import PSD_TOL


def _renyi_from_matrix(rho_mat, op_mat, alpha):
    w, v = np.linalg.eigh(rho_mat)
    if w[0] < -PSD_TOL:
        raise ValueError(f"state is not PSD: min eigenvalue {w[0]:.3e}")
    w = np.clip(w, 0.0, None)
    ot = v.conj().T @ op_mat @ v
    half = w ** (alpha / 2.0)
    num = float(np.einsum("i,j,ij->", half, half, np.abs(ot) ** 2).real)
    den = float(np.sum(w**alpha))
    return num / den


def renyi_one_point(rho_a, op, alpha):
    """Tr(rho^{a/2} O rho^{a/2} O^dag) / Tr(rho^a) for the embedded operator."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    m = embed_operator(op, rho_a.sites)
    return _renyi_from_matrix(rho_a.data, m, alpha)


def two_point_renyi(rho, op_x, op_y, alpha):
    """Renyi correlator of Ox Oy^dag for disjointly supported operators."""
    if not supports_disjoint(op_x, op_y):
        raise ValueError("two-point correlator requires disjoint supports")
    prod = operator_product(op_x, op_y, dagger_b=True)
    return renyi_one_point(rho, prod, alpha)


def connected_renyi_matrix(rho, ops, alpha):
    """Matrix R(rho; Ox Oy^dag) - R(rho; Ox) R(rho; Oy^dag) at fixed alpha."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    n = len(ops)
    one = np.array([renyi_one_point(rho, o, alpha) for o in ops])
    one_dag = np.array([renyi_one_point(rho, dagger(o), alpha) for o in ops])
    out = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            prod = operator_product(ops[i], ops[j], dagger_b=True)
            out[i, j] = renyi_one_point(rho, prod, alpha) - one[i] * one_dag[j]
    return out
