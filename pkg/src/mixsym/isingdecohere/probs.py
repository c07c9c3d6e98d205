"""Exact X-basis probability vectors of the edge-dephased paramagnet.

Starting from the all-|+> state (bit string 0), each internal edge flips its
two endpoint bits with probability p, and each boundary leg flips its single
endpoint with probability p.  The resulting diagonal distribution p_s is
built by exact XOR convolution, one mixing unit at a time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SIZE_CAP = 22


@dataclass(frozen=True)
class XBasisDistribution:
    """Probability vector over 2^n X-basis strings (bit 0 means |+>)."""

    probs: np.ndarray
    n_sites: int

    def __post_init__(self):
        if self.probs.shape != (2**self.n_sites,):
            raise ValueError("probability vector has wrong length")
        if np.any(self.probs < -1e-15):
            raise ValueError("negative probability")
        if abs(float(self.probs.sum()) - 1.0) > 1e-12:
            raise ValueError("probabilities must sum to 1")


def xbasis_probabilities(region, p):
    """Exact distribution after all edge and leg flips of the region graph."""
    if region.n_sites > SIZE_CAP:
        raise ValueError(f"exact enumeration capped at {SIZE_CAP} sites")
    if not 0.0 <= p <= 1.0:
        raise ValueError("flip probability must lie in [0, 1]")
    n = region.n_sites
    vec = np.zeros(2**n)
    vec[0] = 1.0
    idx = np.arange(2**n)
    for i, j in region.internal_edges:
        mask = (1 << i) | (1 << j)
        vec = (1.0 - p) * vec + p * vec[idx ^ mask]
    for i in region.boundary_legs:
        mask = 1 << i
        vec = (1.0 - p) * vec + p * vec[idx ^ mask]
    return XBasisDistribution(vec, n)


def fidelity_from_probs(dist, site_index):
    """sum_s sqrt(p_s p_{s xor e_x}): the local fidelity of the diagonal state."""
    mask = 1 << site_index
    idx = np.arange(len(dist.probs))
    return float(np.sum(np.sqrt(dist.probs * dist.probs[idx ^ mask])))


def renyi2k_from_probs(dist, site_index, k):
    """sum_s p_s^k p_{s xor e_x}^k / sum_s p_s^{2k} for integer k >= 1."""
    if int(k) != k or k < 1:
        raise ValueError("replica half-count k must be a positive integer")
    mask = 1 << site_index
    idx = np.arange(len(dist.probs))
    p = dist.probs
    num = float(np.sum(p**k * p[idx ^ mask] ** k))
    den = float(np.sum(p ** (2 * k)))
    return num / den


@dataclass(frozen=True)
class NishimoriParams:
    """Consistent (p, beta, K) triple: exp(-2 beta) = p/(1-p), exp(-2K) = tanh beta."""

    p: float
    beta: float
    dual_coupling: float

    def __post_init__(self):
        if not 0.0 < self.p < 0.5:
            raise ValueError("error rate must lie strictly inside (0, 1/2)")
        if abs(math.exp(-2.0 * self.beta) - self.p / (1.0 - self.p)) > 1e-12:
            raise ValueError("beta inconsistent with p")
        if abs(math.exp(-2.0 * self.dual_coupling) - math.tanh(self.beta)) > 1e-12:
            raise ValueError("dual coupling inconsistent with beta")


def nishimori_params(p):
    """Map an error rate to its matching temperature and dual coupling."""
    if not 0.0 < p < 0.5:
        raise ValueError("error rate must lie strictly inside (0, 1/2)")
    beta = 0.5 * math.log((1.0 - p) / p)
    dual = -0.5 * math.log(math.tanh(beta))
    return NishimoriParams(p, beta, dual)
