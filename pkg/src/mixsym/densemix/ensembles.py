"""Named state families: parity-sector states, paramagnets, Gibbs states, dimers."""

from __future__ import annotations

import math

import numpy as np

from .operators import LocalOperator, PAULI_X, PAULI_Z, embed_operator
from .renyi import renyi_one_point
from .states import DensityMatrix, density_matrix, random_density_matrix
from .entropy import Tripartition

_HAD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)


def _hadamard_all(n):
    out = np.array([[1.0 + 0j]])
    for _ in range(n):
        out = np.kron(out, _HAD)
    return out


def _parity_weight_table(n):
    """For each computational index s, the sum of (+1/-1) site values.

    Bit 0 maps to value +1 (the |+> state after the Hadamard rotation).
    """
    idx = np.arange(2**n)
    pop = np.zeros(2**n, dtype=np.int64)
    for b in range(n):
        pop += (idx >> b) & 1
    return n - 2 * pop


def fixed_sector_infinite_temp(n):
    """Maximally mixed state of the even parity sector: (I + prod X)/2^n."""
    prod_x = np.array([[1.0 + 0j]])
    for _ in range(n):
        prod_x = np.kron(prod_x, PAULI_X)
    data = (np.eye(2**n, dtype=complex) + prod_x) / 2**n
    return DensityMatrix(tuple((i, 2) for i in range(n)), data)


def gibbs_paramagnet(n, beta):
    """Product state exp(beta sum X) / Z: weakly but not strongly symmetric."""
    single = (
        np.cosh(beta) * np.eye(2, dtype=complex) + np.sinh(beta) * PAULI_X
    ) / (2.0 * np.cosh(beta))
    data = np.array([[1.0 + 0j]])
    for _ in range(n):
        data = np.kron(data, single)
    return DensityMatrix(tuple((i, 2) for i in range(n)), data)


def sector_paramagnet(n, beta, sector=+1):
    """Thermal paramagnet projected to a fixed parity sector of prod X.

    Diagonal in the X basis with weights proportional to exp(beta * sum b)
    restricted to prod b = sector; strongly symmetric by construction.
    """
    if sector not in (+1, -1):
        raise ValueError("sector must be +1 or -1")
    spin_sum = _parity_weight_table(n)
    parity = np.where((n - spin_sum) // 2 % 2 == 0, 1, -1)
    w = np.exp(beta * spin_sum.astype(float))
    w[parity != sector] = 0.0
    w /= w.sum()
    h = _hadamard_all(n)
    data = (h * w) @ h.conj().T
    return DensityMatrix(tuple((i, 2) for i in range(n)), data)


def gibbs_state(hamiltonian, beta, sites=None):
    """exp(-beta H)/Z with a spectral shift guarding against overflow."""
    ham = np.asarray(hamiltonian, dtype=complex)
    d = ham.shape[0]
    if sites is None:
        n = int(round(math.log2(d)))
        if 2**n == d:
            sites = [(i, 2) for i in range(n)]
        else:
            sites = [(0, d)]
    w, v = np.linalg.eigh(ham)
    boltz = np.exp(-beta * (w - w[0]))
    boltz /= boltz.sum()
    data = (v * boltz) @ v.conj().T
    return density_matrix(data, sites, validate=False)


def thermal_renyi1_check(hamiltonian, beta, op, sites=None):
    """(R1 correlator of the Gibbs state, imaginary-time split correlator).

    The second entry is Tr(exp(-beta H/2) O exp(-beta H/2) O^dag) / Z; the two
    must agree since sqrt of the Gibbs state is the half-temperature kernel.
    """
    rho = gibbs_state(hamiltonian, beta, sites)
    lhs = renyi_one_point(rho, op, alpha=1.0)
    ham = np.asarray(hamiltonian, dtype=complex)
    w, v = np.linalg.eigh(ham)
    half = np.exp(-0.5 * beta * (w - w[0]))
    z = float(np.sum(half**2))
    a = (v * half) @ v.conj().T
    o = embed_operator(op, rho.sites)
    rhs = float(np.trace(a @ o @ a @ o.conj().T).real) / z
    return lhs, rhs


def transverse_field_chain(n, coupling=1.0, field=1.0, periodic=False):
    """Dense H = -J sum Z_i Z_{i+1} - h sum X_i on n qubits."""
    sites = tuple((i, 2) for i in range(n))
    d = 2**n
    ham = np.zeros((d, d), dtype=complex)
    for i in range(n):
        x = LocalOperator((i,), PAULI_X.copy(), (2,), None)
        ham -= field * embed_operator(x, sites)
    bonds = [(i, i + 1) for i in range(n - 1)]
    if periodic and n > 2:
        bonds.append((n - 1, 0))
    for i, j in bonds:
        zz = LocalOperator((i, j), np.kron(PAULI_Z, PAULI_Z), (2, 2), None)
        ham -= coupling * embed_operator(zz, sites)
    return ham


def markov_product_state(n_a, n_b, n_c, seed=None):
    """rho_AB (x) rho_C: an exactly zero-CMI state, with its tripartition."""
    rng = np.random.default_rng(seed)
    labels = list(range(n_a + n_b + n_c))
    rho_ab = random_density_matrix(labels[: n_a + n_b], seed=rng.integers(2**32))
    rho_c = random_density_matrix(labels[n_a + n_b :], seed=rng.integers(2**32))
    data = np.kron(rho_ab.data, rho_c.data)
    rho = DensityMatrix(tuple((i, 2) for i in labels), data)
    part = Tripartition(
        tuple(labels[:n_a]),
        tuple(labels[n_a : n_a + n_b]),
        tuple(labels[n_a + n_b :]),
    )
    return rho, part


_SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
_SINGLET_PROJ = np.outer(_SINGLET, _SINGLET).astype(complex)


def _dimer_branch(labels, parity):
    """Product over the window: complete (s, s+1) pairs with s = parity mod 2
    become singlet projectors, cut pairs leave maximally mixed single sites."""
    data = np.array([[1.0 + 0j]])
    i = 0
    while i < len(labels):
        s = labels[i]
        if s % 2 == parity and i + 1 < len(labels) and labels[i + 1] == s + 1:
            data = np.kron(data, _SINGLET_PROJ)
            i += 2
        else:
            data = np.kron(data, np.eye(2, dtype=complex) / 2.0)
            i += 1
    return data


def dimer_window_state(n, family="A", tagged=True):
    """Equal mixture of the two dimerization branches on a finite window.

    Window family "A" spans sites [-2n, 2n+1]; family "B" spans
    [-2n-1, 2n].  One branch pairs (even, even+1) sites, the other
    (odd, odd+1); whichever branch is cut by the window boundary leaves
    maximally mixed edge sites.

    With ``tagged=True`` a trailing ancilla qubit records the branch,
    making the two ensemble members exactly orthogonal; this realizes the
    large-window limit where the branch overlap (which decays as 16^-n)
    has already vanished.  ``tagged=False`` gives the literal mixture.
    """
    if n < 1:
        raise ValueError("window index n must be >= 1")
    if family == "A":
        labels = list(range(-2 * n, 2 * n + 2))
    elif family == "B":
        labels = list(range(-2 * n - 1, 2 * n + 1))
    else:
        raise ValueError("family must be 'A' or 'B'")
    even = _dimer_branch(labels, 0)
    odd = _dimer_branch(labels, 1)
    if tagged:
        p0 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
        p1 = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)
        data = 0.5 * np.kron(even, p0) + 0.5 * np.kron(odd, p1)
        sites = tuple((lab, 2) for lab in labels) + (("tag", 2),)
    else:
        data = 0.5 * (even + odd)
        sites = tuple((lab, 2) for lab in labels)
    return DensityMatrix(sites, data)


def dimer_order_operator():
    """X (x) X on sites (0, 1): the charged probe for the dimer windows."""
    return LocalOperator((0, 1), np.kron(PAULI_X, PAULI_X), (2, 2), None)
