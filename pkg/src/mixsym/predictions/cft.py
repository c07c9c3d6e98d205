"""Conformal closed forms for the interval correlator of a primary insertion."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CftParams:
    """Interval (u, v), insertion x inside it, inverse temperature beta
    (math.inf allowed), scaling dimension delta, replica half-count n."""

    u: float
    v: float
    x: float
    beta: float
    delta: float
    n: float

    def __post_init__(self):
        if not self.u < self.x < self.v:
            raise ValueError("need u < x < v")
        if self.delta <= 0:
            raise ValueError("scaling dimension must be positive")
        if self.n <= 0:
            raise ValueError("replica half-count must be positive")
        if not (self.beta > 0):
            raise ValueError("inverse temperature must be positive")


def _log_sinh(z):
    """log(sinh z) for z > 0 without overflow."""
    return z + math.log1p(-math.exp(-2.0 * z)) - math.log(2.0)


def cft_renyi2n_interval(params):
    """[ (pi/(4 n beta)) sinh(pi(v-u)/beta) / (sinh(pi(x-u)/beta) sinh(pi(v-x)/beta)) ]^{2 delta}.

    beta = inf uses the analytic sinh -> linear limit
    (v-u) / (4 n (x-u)(v-x)), avoiding large-argument overflow.
    """
    u, v, x, beta, delta, n = (
        params.u,
        params.v,
        params.x,
        params.beta,
        params.delta,
        params.n,
    )
    if math.isinf(beta):
        base_log = math.log(v - u) - math.log(4.0 * n * (x - u) * (v - x))
    else:
        base_log = (
            math.log(math.pi / (4.0 * n * beta))
            + _log_sinh(math.pi * (v - u) / beta)
            - _log_sinh(math.pi * (x - u) / beta)
            - _log_sinh(math.pi * (v - x) / beta)
        )
    return math.exp(2.0 * delta * base_log)


def cft_renyi1_zero_t(ell_left, ell_right, delta):
    """((1/ell_L + 1/ell_R)/2)^{2 delta}: zero-temperature two-sided form."""
    if ell_left <= 0 or ell_right <= 0:
        raise ValueError("distances to the interval ends must be positive")
    return ((1.0 / ell_left + 1.0 / ell_right) / 2.0) ** (2.0 * delta)


def thermal_plateau(beta, delta):
    """(pi/beta)^{2 delta}: the v-u -> infinity limit at fixed temperature."""
    if beta <= 0:
        raise ValueError("inverse temperature must be positive")
    return (math.pi / beta) ** (2.0 * delta)
