"""Finite symmetry actions on registers: sectors, disorder operators, multiplets.

A SymmetryAction stores one single-site unitary per group element, applied
uniformly at every site; the region action is the tensor product over the
region.  Cyclic groups additionally expose character labels k with
lambda_k(g_j) = exp(2 pi i j k / n), which drive the isotypic decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fidelity import fidelity, lfc_one_point
from .operators import LocalOperator, embed_operator
from .states import DensityMatrix

UNITARY_TOL = 1e-10
WEAK_SYM_TOL = 1e-8
SECTOR_FLOOR = 1e-12


@dataclass(frozen=True)
class SymmetryAction:
    """Uniform on-site action of a finite group.

    ``onsite`` holds one unitary per group element (element 0 must be the
    identity).  ``order`` is the cyclic order n for cyclic groups and None
    for non-Abelian ones; ``local_dim`` is the site dimension.
    """

    name: str
    onsite: tuple
    order: int = None
    local_dim: int = 2

    def __post_init__(self):
        for u in self.onsite:
            if u.shape != (self.local_dim, self.local_dim):
                raise ValueError("onsite unitary has wrong dimension")
            dev = np.max(np.abs(u @ u.conj().T - np.eye(self.local_dim)))
            if dev > UNITARY_TOL:
                raise ValueError(f"onsite matrix not unitary: deviation {dev:.3e}")
        if self.order is not None:
            if self.order != len(self.onsite):
                raise ValueError("cyclic order must match number of elements")
            g = self.onsite[1] if self.order > 1 else self.onsite[0]
            acc = np.eye(self.local_dim, dtype=complex)
            for _ in range(self.order):
                acc = acc @ g
            if np.max(np.abs(acc - np.eye(self.local_dim))) > UNITARY_TOL:
                raise ValueError("generator does not close at the declared order")

    @property
    def n_elements(self):
        return len(self.onsite)


def z2_parity_symmetry():
    """Z2 generated by on-site X."""
    x = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    return SymmetryAction("z2_parity", (np.eye(2, dtype=complex), x), order=2)


def cyclic_phase_symmetry(n):
    """Z_n generated by on-site diag(1, omega), omega = exp(2 pi i / n)."""
    omega = np.exp(2j * np.pi / n)
    elems = tuple(np.diag([1.0, omega**j]).astype(complex) for j in range(n))
    return SymmetryAction(f"z{n}_phase", elems, order=n)


def s3_qubit_symmetry():
    """The six elements of the symmetric group S3 in its 2d irrep on a qubit.

    Generators: c = diag(omega, omega^2) of order 3 and s = X of order 2,
    with s c s = c^2.  Element order: e, c, c^2, s, sc, sc^2.
    """
    omega = np.exp(2j * np.pi / 3)
    c = np.diag([omega, omega**2]).astype(complex)
    s = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    elems = (np.eye(2, dtype=complex), c, c @ c, s, s @ c, s @ c @ c)
    return SymmetryAction("s3_doublet", elems, order=None)


def region_unitary(sym, sites, region, element):
    """Dense unitary of group element ``element`` acting on ``region`` sites."""
    u = sym.onsite[element]
    labels = [s[0] for s in sites]
    for lab in region:
        if lab not in labels:
            raise KeyError(f"region site {lab!r} not in register")
    mats = []
    for lab, d in sites:
        if lab in set(region):
            if d != sym.local_dim:
                raise ValueError(f"local dimension mismatch at site {lab!r}")
            mats.append(u)
        else:
            mats.append(np.eye(d, dtype=complex))
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def is_weakly_symmetric(rho, sym, tol=WEAK_SYM_TOL):
    """max_g || U_g rho U_g^dag - rho || (entrywise) <= tol."""
    labels = rho.labels
    for g in range(sym.n_elements):
        u = region_unitary(sym, rho.sites, labels, g)
        if np.max(np.abs(u @ rho.data @ u.conj().T - rho.data)) > tol:
            return False
    return True


def twirl(rho, sym):
    """Group average (1/|G|) sum_g U_g rho U_g^dag: a weakly symmetric state."""
    labels = rho.labels
    acc = np.zeros_like(rho.data)
    for g in range(sym.n_elements):
        u = region_unitary(sym, rho.sites, labels, g)
        acc += u @ rho.data @ u.conj().T
    return DensityMatrix(rho.sites, acc / sym.n_elements)


def charge_decompose(rho_r, sym):
    """Isotypic decomposition of a weakly symmetric state of a cyclic group.

    Returns a list of (k, p_k, rho_k) for the sectors with weight
    p_k = Tr(rho Pi_k) > 1e-12, where Pi_k is the projector onto the
    character lambda_k(g_j) = omega^{jk}.  Each rho_k is strongly symmetric:
    U rho_k = omega^k rho_k.
    """
    if sym.order is None:
        raise ValueError("sector decomposition requires a cyclic symmetry")
    if not is_weakly_symmetric(rho_r, sym):
        raise ValueError("state is not weakly symmetric within tolerance")
    n = sym.order
    labels = rho_r.labels
    us = [region_unitary(sym, rho_r.sites, labels, g) for g in range(n)]
    omega = np.exp(2j * np.pi / n)
    out = []
    for k in range(n):
        proj = np.zeros_like(rho_r.data)
        for j in range(n):
            proj += np.conj(omega ** (j * k)) * us[j]
        proj /= n
        p = float(np.trace(proj @ rho_r.data).real)
        if p > SECTOR_FLOOR:
            sector = proj @ rho_r.data @ proj / p
            out.append((k, p, DensityMatrix(rho_r.sites, sector)))
    total = sum(p for _, p, _ in out)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"sector weights sum to {total}, expected 1")
    return out


def disorder_parameter(rho_a, sym, element, region=None):
    """Expectation Tr(rho U_region(g)); region defaults to the full register."""
    if region is None:
        region = rho_a.labels
    u = region_unitary(sym, rho_a.sites, region, element)
    return complex(np.trace(rho_a.data @ u))


def order_disorder_check(rho_a, op, sym, element=1, region=None):
    """Both sides of the order-disorder tradeoff for a charged unitary O.

    Returns (lhs, bound) with lhs = F(rho; O)^2 + |<U_region(g)>|^2 and
    bound = 1.  ``region`` defaults to the support of O, the choice that
    saturates the bound on product thermal states.  Non-unitary O is
    rejected; decompose it into an average of two unitaries first
    (see unitary_decompose).
    """
    u_dev = np.max(np.abs(op.data @ op.data.conj().T - np.eye(op.data.shape[0])))
    if u_dev > 1e-9:
        raise ValueError(
            "order-disorder bound needs a unitary operator; use "
            "unitary_decompose to write a general contraction as an average "
            "of two unitaries"
        )
    if region is None:
        region = op.support
    f = lfc_one_point(rho_a, op)
    dis = disorder_parameter(rho_a, sym, element, region)
    return f**2 + abs(dis) ** 2, 1.0


@dataclass(frozen=True)
class OperatorMultiplet:
    """Operators on a common support transforming in an irrep of ``sym``.

    ``dmats`` holds one irrep matrix D(g) per group element, aligned with
    ``sym.onsite``: U_g O^a U_g^dag = sum_b D_ab(g) O^b.
    """

    components: tuple
    dmats: tuple
    sym: SymmetryAction

    def __post_init__(self):
        supports = {tuple(o.support) for o in self.components}
        if len(supports) != 1:
            raise ValueError("multiplet components must share a support")
        if len(self.dmats) != self.sym.n_elements:
            raise ValueError("need one representation matrix per group element")
        n = len(self.components)
        for d in self.dmats:
            if d.shape != (n, n):
                raise ValueError("representation matrix has wrong dimension")

    @property
    def n_components(self):
        return len(self.components)


def multiplet_covariance_defect(mult, sites):
    """max_g,a || U_g O^a U_g^dag - sum_b D_ab(g) O^b || on a register."""
    ops = [embed_operator(o, sites) for o in mult.components]
    labels = mult.components[0].support
    worst = 0.0
    for g in range(mult.sym.n_elements):
        u = region_unitary(mult.sym, tuple(sites), labels, g)
        for a in range(mult.n_components):
            lhs = u @ ops[a] @ u.conj().T
            rhs = sum(mult.dmats[g][a, b] * ops[b] for b in range(mult.n_components))
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def s3_doublet(site):
    """The doublet {|0><1|, |1><0|} under s3_qubit_symmetry on one qubit."""
    sym = s3_qubit_symmetry()
    omega = np.exp(2j * np.pi / 3)
    up = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    dn = up.conj().T
    comps = (
        LocalOperator((site,), up, (2,), None),
        LocalOperator((site,), dn, (2,), None),
    )
    flip = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    dmats = (
        np.eye(2, dtype=complex),
        np.diag([omega**2, omega]).astype(complex),
        np.diag([omega, omega**2]).astype(complex),
        flip,
        np.diag([omega**2, omega]).astype(complex) @ flip,
        np.diag([omega, omega**2]).astype(complex) @ flip,
    )
    return OperatorMultiplet(comps, dmats, sym)


def nonabelian_lfc_channel(rho_a, mult):
    """F(rho, tau_O[rho]) with tau_O = (1/n) sum_a O^a rho O^a dag."""
    n = mult.n_components
    acc = np.zeros_like(rho_a.data)
    for o in mult.components:
        m = embed_operator(o, rho_a.sites)
        acc += m @ rho_a.data @ m.conj().T
    return fidelity(rho_a.data, acc / n)


def _lfc_of_combination(rho_a, mats, v):
    m = sum(vi * mi for vi, mi in zip(v, mats))
    return fidelity(rho_a.data, m @ rho_a.data @ m.conj().T)


def nonabelian_lfc_maxv(rho_a, mult, grid_resolution=1000, ascent_steps=50, seed=0):
    """max over unit vectors v of F(rho, (v.O) rho (v.O)^dag).

    Coarse search over ``grid_resolution`` quasi-uniform points on the
    complex unit sphere (plus the basis vectors), then local ascent with a
    shrinking step.
    """
    n = mult.n_components
    mats = [embed_operator(o, rho_a.sites) for o in mult.components]
    rng = np.random.default_rng(seed)
    cands = list(np.eye(n, dtype=complex))
    raw = rng.normal(size=(grid_resolution, n)) + 1j * rng.normal(size=(grid_resolution, n))
    cands.extend(raw / np.linalg.norm(raw, axis=1)[:, None])
    best_v, best = None, -1.0
    for v in cands:
        val = _lfc_of_combination(rho_a, mats, v)
        if val > best:
            best, best_v = val, v
    step = 0.3
    for _ in range(ascent_steps):
        improved = False
        for _ in range(8):
            d = rng.normal(size=n) + 1j * rng.normal(size=n)
            trial = best_v + step * d / np.linalg.norm(d)
            trial = trial / np.linalg.norm(trial)
            val = _lfc_of_combination(rho_a, mats, trial)
            if val > best:
                best, best_v, improved = val, trial, True
        if not improved:
            step *= 0.7
    return float(best)


def unitary_decompose(m):
    """Write a contraction M (operator norm <= 1) as an average of 2 unitaries.

    Via the singular value decomposition M = U diag(s) V^dag:
    U_{1,2} = U diag(s +- i sqrt(1 - s^2)) V^dag, so (U_1 + U_2)/2 = M.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[0] != m.shape[1]:
        raise ValueError("square matrix required")
    u, s, vh = np.linalg.svd(m)
    if s[0] > 1.0 + 1e-12:
        raise ValueError(f"operator norm {s[0]} exceeds 1")
    s = np.clip(s, 0.0, 1.0)
    phase = 1j * np.sqrt(1.0 - s**2)
    u1 = (u * (s + phase)) @ vh
    u2 = (u * (s - phase)) @ vh
    return u1, u2
