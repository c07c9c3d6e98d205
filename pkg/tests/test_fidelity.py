"""Uhlmann fidelity kernel and the one- and two-point fidelity correlators."""

import numpy as np
import pytest

from mixsym.densemix import (
    local_operator,
    maximally_mixed,
    partial_trace,
    pauli_on,
    product_density,
    pure_density,
    random_density_matrix,
    random_pure_state,
)
from mixsym.densemix.fidelity import (
    fidelity,
    lfc_one_point,
    sqrt_psd,
    two_point_fidelity,
)


def eig_route_fidelity(rho, sigma):
    """Independent route: F = sum_i sqrt(w_i) with w = eig(sqrt(rho) sigma sqrt(rho))."""
    r = sqrt_psd(rho.data)
    w = np.linalg.eigvalsh(r @ sigma.data @ r)
    return float(np.sum(np.sqrt(np.clip(w, 0.0, None))))


def test_sqrt_psd_squares_back():
    rng = np.random.default_rng(0)
    g = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    m = g @ g.conj().T
    r = sqrt_psd(m)
    assert np.max(np.abs(r @ r - m)) < 1e-10 * np.abs(m).max()


def test_sqrt_psd_rejects_indefinite():
    with pytest.raises(ValueError):
        sqrt_psd(np.diag([1.0, -0.5]))


def test_fidelity_identity_and_symmetry():
    for seed in range(6):
        rho = random_density_matrix(range(2), seed=seed)
        sig = random_density_matrix(range(2), seed=seed + 100)
        assert abs(fidelity(rho, rho) - 1.0) < 1e-12
        assert abs(fidelity(rho, sig) - fidelity(sig, rho)) < 1e-12
        assert -1e-12 < fidelity(rho, sig) < 1.0 + 1e-12


def test_fidelity_pure_states_overlap():
    rng = np.random.default_rng(5)
    for _ in range(5):
        u = rng.normal(size=4) + 1j * rng.normal(size=4)
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        u /= np.linalg.norm(u)
        v /= np.linalg.norm(v)
        rho = pure_density(u, (0, 1))
        sig = pure_density(v, (0, 1))
        assert abs(fidelity(rho, sig) - abs(np.vdot(u, v))) < 1e-10


def test_fidelity_multiplicative_on_products():
    a1 = random_density_matrix((0,), seed=1)
    a2 = random_density_matrix((1,), seed=2)
    b1 = random_density_matrix((0,), seed=3)
    b2 = random_density_matrix((1,), seed=4)
    lhs = fidelity(product_density([a1, a2]), product_density([b1, b2]))
    rhs = fidelity(a1, b1) * fidelity(a2, b2)
    assert abs(lhs - rhs) < 1e-12


def test_fidelity_matches_eigendecomposition_route():
    # frozen oracle: the nuclear-norm route agrees with the sqrt-sandwich route
    worst = 0.0
    for seed in range(20):
        rho = random_density_matrix(range(3), seed=seed)
        sig = random_density_matrix(range(3), rank=4, seed=seed + 50)
        worst = max(worst, abs(fidelity(rho, sig) - eig_route_fidelity(rho, sig)))
    assert worst < 1e-7


def test_fidelity_monotone_under_partial_trace():
    # tracing out a subsystem can only increase fidelity
    for seed in range(8):
        rho = random_density_matrix(range(3), seed=seed)
        sig = random_density_matrix(range(3), seed=seed + 30)
        full = fidelity(rho, sig)
        red = fidelity(partial_trace(rho, (0, 1)), partial_trace(sig, (0, 1)))
        assert red >= full - 1e-10


def test_lfc_uses_unnormalized_conjugation():
    # for unitary O the conjugated state is normalized, F in [0, 1]
    rho = random_density_matrix(range(2), seed=9)
    z = pauli_on("Z", 0)
    val = lfc_one_point(rho, z)
    assert -1e-12 < val < 1.0 + 1e-12

    # for a contraction the conjugated argument keeps its reduced weight
    half = local_operator((0,), 0.5 * np.eye(2))
    assert abs(lfc_one_point(rho, half) - 0.5) < 1e-12


def test_lfc_on_symmetric_state_is_one():
    # if O commutes with rho the correlator saturates
    rho = maximally_mixed((0, 1))
    assert abs(lfc_one_point(rho, pauli_on("X", 1)) - 1.0) < 1e-12


def test_lfc_vanishes_on_charged_pure_state():
    # |00><00| vs Z flips nothing; X maps it to an orthogonal state
    rho = pure_density(np.array([1.0, 0, 0, 0]), (0, 1))
    assert abs(lfc_one_point(rho, pauli_on("X", 0))) < 1e-8


def test_two_point_fidelity_requires_disjoint_supports():
    rho = random_density_matrix(range(2), seed=2)
    with pytest.raises(ValueError):
        two_point_fidelity(rho, pauli_on("Z", 0), pauli_on("Z", 0))


def test_two_point_bounded_by_one_point():
    # ||O_y|| F(rho_A; O_x) >= F(rho; O_x O_y^dag), A = {0}
    rng = np.random.default_rng(21)
    for seed in range(10):
        rho = random_density_matrix(range(2), seed=seed)
        g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        g /= np.linalg.svd(g, compute_uv=False)[0]
        op_x = pauli_on("Z", 0)
        op_y = local_operator((1,), g)
        two = two_point_fidelity(rho, op_x, op_y)
        one = lfc_one_point(partial_trace(rho, (0,)), op_x)
        assert one >= two - 1e-10
