"""Classical Ising magnetization on a region graph with boundary field.

The statistical weight is exp(2K [sum_edges eta_i eta_j + sum_legs eta_i]):
the doubled coupling and the leg field realize the two-replica reduction of
the dephased state, so <eta_x> here equals the k=1 replica correlator.
"""

from __future__ import annotations

import numpy as np

EXACT_CAP = 20


def _spin_table(n):
    """(2^n, n) array of +-1 spins; bit 0 maps to +1."""
    idx = np.arange(2**n)
    bits = (idx[:, None] >> np.arange(n)[None, :]) & 1
    return 1.0 - 2.0 * bits


def ising_magnetization_exact(region, coupling, site_index):
    """<eta_x> by full enumeration under weight exp(2K [edges + legs])."""
    n = region.n_sites
    if n > EXACT_CAP:
        raise ValueError(f"exact enumeration capped at {EXACT_CAP} spins")
    eta = _spin_table(n)
    energy = np.zeros(2**n)
    for i, j in region.internal_edges:
        energy += eta[:, i] * eta[:, j]
    for i in region.boundary_legs:
        energy += eta[:, i]
    w = np.exp(2.0 * coupling * (energy - energy.max()))
    z = float(w.sum())
    return float(np.sum(w * eta[:, site_index]) / z)


def ising_magnetization_mc(
    region, coupling, site_index, sweeps=10_000, therm=1_000, seed=0, batches=20
):
    """Single-spin Metropolis estimate of <eta_x> with batch-means errors.

    Runs ``therm`` thermalization sweeps then ``sweeps`` measurement sweeps
    (one measurement per sweep); the standard error comes from ``batches``
    batch means.
    """
    n = region.n_sites
    rng = np.random.default_rng(seed)
    neighbors = [[] for _ in range(n)]
    for i, j in region.internal_edges:
        neighbors[i].append(j)
        neighbors[j].append(i)
    field = np.zeros(n)
    for i in region.boundary_legs:
        field[i] += 1.0
    eta = rng.choice([-1.0, 1.0], size=n)
    samples = np.empty(sweeps)

    def sweep():
        for i in rng.integers(0, n, size=n):
            local = field[i] + sum(eta[j] for j in neighbors[i])
            delta = 4.0 * coupling * eta[i] * local
            if delta <= 0.0 or rng.random() < np.exp(-delta):
                eta[i] = -eta[i]

    for _ in range(therm):
        sweep()
    for t in range(sweeps):
        sweep()
        samples[t] = eta[site_index]
    means = samples[: sweeps - sweeps % batches].reshape(batches, -1).mean(axis=1)
    mean = float(means.mean())
    stderr = float(means.std(ddof=1) / np.sqrt(batches))
    return mean, stderr
