"""Dephased Ising paramagnet: exact distributions and classical mappings."""

from .region import RegionGraph, rectangle_region, torus_region
from .probs import (
    NishimoriParams,
    XBasisDistribution,
    fidelity_from_probs,
    nishimori_params,
    renyi2k_from_probs,
    xbasis_probabilities,
)
from .ising import ising_magnetization_exact, ising_magnetization_mc
from .rbim import gauge_probabilities

__all__ = [
    "RegionGraph",
    "rectangle_region",
    "torus_region",
    "NishimoriParams",
    "XBasisDistribution",
    "fidelity_from_probs",
    "nishimori_params",
    "renyi2k_from_probs",
    "xbasis_probabilities",
    "ising_magnetization_exact",
    "ising_magnetization_mc",
    "gauge_probabilities",
]
