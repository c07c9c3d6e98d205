"""Region graphs, exact x-basis distributions, and the two-replica reduction."""

import math

import numpy as np
import pytest

from mixsym.isingdecohere.ising import ising_magnetization_exact, ising_magnetization_mc
from mixsym.isingdecohere.probs import (
    NishimoriParams,
    fidelity_from_probs,
    nishimori_params,
    renyi2k_from_probs,
    xbasis_probabilities,
)
from mixsym.isingdecohere.rbim import gauge_probabilities
from mixsym.isingdecohere.region import RegionGraph, rectangle_region, torus_region


def single_leg_region():
    return RegionGraph(((0, 0),), (), (0,))


def test_rectangle_counts():
    reg = rectangle_region(3, 2)
    assert reg.n_sites == 6
    assert len(reg.internal_edges) == 3 * 1 + 2 * 2
    assert len(reg.boundary_legs) == 2 * (3 + 2)
    # corners carry two legs
    corner = reg.site_index((0, 0))
    assert reg.boundary_legs.count(corner) == 2
    with pytest.raises(ValueError):
        rectangle_region(0, 2)


def test_torus_counts():
    reg = torus_region(3, 3)
    assert reg.n_sites == 9
    assert len(reg.internal_edges) == 2 * 9
    assert reg.boundary_legs == ()
    # doubled edges on extent 2 collapse to one
    assert len(torus_region(2, 2).internal_edges) == 4


def test_region_validation_and_lookup():
    with pytest.raises(ValueError):
        RegionGraph(((0, 0), (0, 0)), (), ())
    with pytest.raises(ValueError):
        RegionGraph(((0, 0), (1, 0)), ((0, 2),), ())
    with pytest.raises(ValueError):
        RegionGraph(((0, 0),), (), (1,))
    reg = rectangle_region(3, 3)
    assert reg.center_index() == reg.site_index((1, 1))
    with pytest.raises(KeyError):
        reg.site_index((9, 9))


def test_xbasis_distribution_properties():
    reg = rectangle_region(3, 2)
    dist = xbasis_probabilities(reg, 0.2)
    assert abs(float(dist.probs.sum()) - 1.0) < 1e-12
    assert float(dist.probs.min()) >= 0.0
    # no noise leaves the all-plus string
    clean = xbasis_probabilities(reg, 0.0)
    assert clean.probs[0] == 1.0
    with pytest.raises(ValueError):
        xbasis_probabilities(reg, 1.2)
    with pytest.raises(ValueError):
        xbasis_probabilities(rectangle_region(5, 5), 0.1)


def test_single_leg_closed_forms():
    # one site, one leg: p_0 = 1 - p, p_1 = p
    p = 0.23
    dist = xbasis_probabilities(single_leg_region(), p)
    assert np.allclose(dist.probs, [1.0 - p, p])
    f = fidelity_from_probs(dist, 0)
    assert abs(f - 2.0 * math.sqrt(p * (1.0 - p))) < 1e-12
    r2 = renyi2k_from_probs(dist, 0, 1)
    assert abs(r2 - 2.0 * p * (1.0 - p) / (p**2 + (1.0 - p) ** 2)) < 1e-12
    with pytest.raises(ValueError):
        renyi2k_from_probs(dist, 0, 0)


def test_pure_edge_fidelity_vanishes():
    # a single edge with no legs keeps the state pure on the parity sector
    reg = RegionGraph(((0, 0), (1, 0)), ((0, 1),), ())
    dist = xbasis_probabilities(reg, 0.3)
    assert fidelity_from_probs(dist, 0) == 0.0


def test_gauge_route_matches_convolution():
    for reg in (rectangle_region(3, 2), torus_region(2, 3)):
        for p in (0.1, 0.35):
            a = xbasis_probabilities(reg, p).probs
            b = gauge_probabilities(reg, p).probs
            assert np.max(np.abs(a - b)) < 1e-12
    with pytest.raises(ValueError):
        gauge_probabilities(rectangle_region(3, 2), 0.0)
    # the 4x4 torus has too many independent cycles for the coset sum
    with pytest.raises(ValueError):
        gauge_probabilities(torus_region(4, 4), 0.2)


def test_nishimori_parameters():
    for p in (0.05, 0.2, 0.4):
        par = nishimori_params(p)
        assert abs(math.exp(-2.0 * par.beta) - p / (1.0 - p)) < 1e-12
        assert abs(math.exp(-2.0 * par.dual_coupling) - math.tanh(par.beta)) < 1e-12
    with pytest.raises(ValueError):
        nishimori_params(0.5)
    with pytest.raises(ValueError):
        nishimori_params(0.0)
    with pytest.raises(ValueError):
        NishimoriParams(0.2, 1.0, 1.0)


def test_replica_reduction_identity():
    # sum_s p_s^k p_{s+e}^k / sum p^2k at k=1 equals the Ising magnetization
    # at the dual coupling with doubled weights
    for reg in (rectangle_region(3, 3), rectangle_region(2, 4)):
        for p in (0.1, 0.25):
            dist = xbasis_probabilities(reg, p)
            x = reg.center_index()
            r2 = renyi2k_from_probs(dist, x, 1)
            mag = ising_magnetization_exact(reg, nishimori_params(p).dual_coupling, x)
            assert abs(r2 - mag) < 1e-10


def test_magnetization_exact_cap():
    with pytest.raises(ValueError):
        ising_magnetization_exact(rectangle_region(7, 3), 0.5, 0)


def test_magnetization_mc_agrees_with_exact():
    reg = rectangle_region(3, 3)
    coupling = nishimori_params(0.15).dual_coupling
    x = reg.center_index()
    exact = ising_magnetization_exact(reg, coupling, x)
    mean, err = ising_magnetization_mc(reg, coupling, x, sweeps=4000, therm=500, seed=1)
    assert err > 0.0
    assert abs(mean - exact) < 3.0 * err


def test_renyi2k_decreases_with_replica_count():
    reg = rectangle_region(3, 3)
    dist = xbasis_probabilities(reg, 0.2)
    x = reg.center_index()
    vals = [renyi2k_from_probs(dist, x, k) for k in (1, 2, 3)]
    assert vals[0] > vals[1] > vals[2]
