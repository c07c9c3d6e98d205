"""Gauge-orbit route to the dephased-state probabilities.

Each mixing unit (internal edge or boundary leg) either fires or not; a
pattern u of fired units produces the string s = M u over GF(2), where M is
the site/unit incidence matrix.  Therefore

    p_s = sum over {u : M u = s} of p^{|u|} (1-p)^{U-|u|},

a sum over one coset of ker(M): a particular solution u0(s) plus the cycle
space of the region graph (legs grounded to a common virtual node).  This is
the bond-disorder representation of the distribution: u0 fixes a sign
pattern on the bonds and the kernel enumerates its gauge orbit.  Exponential
in dim ker(M), so intended for small validation regions only.
"""

from __future__ import annotations

import numpy as np

from .probs import XBasisDistribution

KERNEL_CAP = 14

_POP_TAB = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def _popcount(arr):
    return _POP_TAB[arr.view(np.uint8).reshape(arr.size, 8)].sum(axis=1).astype(np.int64)


def _incidence(region):
    """Site x unit GF(2) incidence matrix; units are edges then legs."""
    n = region.n_sites
    units = []
    for i, j in region.internal_edges:
        units.append((1 << i) | (1 << j))
    for i in region.boundary_legs:
        units.append(1 << i)
    m = np.zeros((n, len(units)), dtype=np.uint8)
    for col, mask in enumerate(units):
        for row in range(n):
            if mask >> row & 1:
                m[row, col] = 1
    return m


def _row_reduce(m):
    """GF(2) elimination; returns (reduced, transform, pivot_cols)."""
    r = m.copy()
    n, u = r.shape
    t = np.eye(n, dtype=np.uint8)
    pivots = []
    row = 0
    for col in range(u):
        hit = None
        for rr in range(row, n):
            if r[rr, col]:
                hit = rr
                break
        if hit is None:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
            t[[row, hit]] = t[[hit, row]]
        for rr in range(n):
            if rr != row and r[rr, col]:
                r[rr] ^= r[row]
                t[rr] ^= t[row]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return r, t, pivots


def gauge_probabilities(region, p):
    """p_s via the coset sum over the unit-pattern kernel.

    Independent of the XOR-convolution route; exponential in the kernel
    dimension (cycle count), so capped for validation-size regions.
    """
    if not 0.0 < p < 1.0:
        raise ValueError("flip probability must lie strictly inside (0, 1)")
    n = region.n_sites
    m = _incidence(region)
    n_units = m.shape[1]
    red, transform, pivots = _row_reduce(m)
    rank = len(pivots)
    kdim = n_units - rank
    if kdim > KERNEL_CAP:
        raise ValueError(f"kernel dimension {kdim} exceeds validation cap {KERNEL_CAP}")
    pivot_row = {col: r for r, col in enumerate(pivots)}
    free_cols = [c for c in range(n_units) if c not in pivot_row]
    basis = []
    for c in free_cols:
        vec = 1 << c
        for r, col in enumerate(pivots):
            if red[r, c]:
                vec |= 1 << col
        basis.append(vec)
    kernel = np.zeros(1, dtype=np.uint64)
    for b in basis:
        kernel = np.concatenate([kernel, kernel ^ np.uint64(b)])
    log_p = np.log(p)
    log_q = np.log1p(-p)
    out = np.zeros(2**n)
    for s in range(2**n):
        sv = np.array([(s >> r) & 1 for r in range(n)], dtype=np.uint8)
        rhs = transform @ sv % 2
        if np.any(rhs[rank:]):
            continue  # unreachable string (conserved parity)
        u0 = 0
        for r, col in enumerate(pivots):
            if rhs[r]:
                u0 |= 1 << col
        pops = _popcount(kernel ^ np.uint64(u0))
        out[s] = float(np.sum(np.exp(pops * log_p + (n_units - pops) * log_q)))
    return XBasisDistribution(out, n)
