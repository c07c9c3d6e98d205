"""Named invariant suites with measured slack per check.

Checks call the library through module attributes (``fidelity.fidelity``,
not a bound import), so monkeypatching a routine is visible here; a seeded
mutation of the fidelity kernel must fail the sandwich check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from ..densemix import ensembles
from ..densemix import renyi
from ..densemix.fidelity import lfc_one_point
from ..densemix import symmetry
from ..densemix.operators import local_operator, pauli_on
from ..densemix.states import partial_trace, random_density_matrix
from ..gaussfermi import correlation, fermisurface, lattice, models
from ..isingdecohere import ising, probs
from ..isingdecohere import region as ising_region
from ..predictions import CftParams, cft, fitting
from ..series import ScalingSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    slack: float
    tolerance: float
    detail: str = ""

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "slack": self.slack,
            "tolerance": self.tolerance,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _result(name, slack, tolerance, detail=""):
    return CheckResult(name, bool(slack <= tolerance), float(slack), float(tolerance), detail)


def _densemix_checks(seed):
    out = []

    slack = 0.0
    for i in range(25):
        rho = random_density_matrix(range(3), seed=seed + i)
        op = pauli_on("X", 1)
        f = lfc_one_point(rho, op)
        r1 = renyi.renyi_one_point(rho, op, 1.0)
        slack = max(slack, f * f - r1, r1 - op.norm_inf * f)
    out.append(_result("fidelity-renyi1-sandwich", slack, 1e-9, "F^2 <= R1 <= |O| F"))

    slack = 0.0
    for i in range(10):
        rho = random_density_matrix(range(4), seed=1000 + seed + i)
        op = pauli_on("X", 1)
        prev = None
        for keep in [(1,), (0, 1), (0, 1, 2), (0, 1, 2, 3)]:
            val = lfc_one_point(partial_trace(rho, keep), op)
            if prev is not None:
                slack = max(slack, val - prev)
            prev = val
    out.append(_result("fidelity-region-monotone", slack, 1e-9, "nested regions"))

    slack = 0.0
    for i in range(8):
        rho = random_density_matrix(range(3), seed=2000 + seed + i)
        ops = [pauli_on("X", j) for j in range(3)]
        mat = renyi.connected_renyi_matrix(rho, ops, 2.0)
        slack = max(slack, -float(np.linalg.eigvalsh(mat)[0]))
    out.append(_result("connected-renyi-psd", slack, 1e-9, "alpha=2"))

    sym = symmetry.z2_parity_symmetry()
    slack = 0.0
    for i in range(10):
        rho = symmetry.twirl(random_density_matrix(range(4), seed=3000 + seed + i), sym)
        lhs, bound = symmetry.order_disorder_check(rho, pauli_on("X", 1), sym)
        slack = max(slack, lhs - bound)
    for beta in (0.4, 1.0, 2.0):
        rho = ensembles.gibbs_paramagnet(5, beta)
        lhs, bound = symmetry.order_disorder_check(rho, pauli_on("Z", 2), sym)
        slack = max(slack, lhs - bound)
    out.append(_result("order-disorder-bound", slack, 1e-9, "F^2 + |<U>|^2 <= 1"))

    n, beta = 6, 0.7
    t = math.tanh(beta)
    rho = ensembles.sector_paramagnet(n, beta)
    slack = 0.0
    for size in (2, 3, 4):
        rho_a = partial_trace(rho, tuple(range(size)))
        got = lfc_one_point(rho_a, pauli_on("Z", 0))
        want = math.sqrt(1.0 - t ** (2 * (n - size))) / (1.0 + t**n) / math.cosh(beta)
        slack = max(slack, abs(got - want))
    out.append(_result("paramagnet-closed-form", slack, 1e-8, f"n={n} beta={beta}"))

    return out


def _gaussfermi_checks(seed):
    out = []

    ham = models.fermi_chain_1d(120)
    corr = correlation.ground_state_correlation(ham, 0.3)
    center = lattice.central_site(ham.geometry)
    sub = correlation.restrict(corr, lattice.interval_region(ham.geometry, center, 15))
    w = np.linalg.eigvalsh(sub.matrix)
    slack = max(0.0, -float(w[0]), float(w[-1]) - 1.0)
    out.append(_result("correlation-spectrum-unit-interval", slack, 1e-8))

    ham = models.fermi_chain_1d(12)
    corr = correlation.ground_state_correlation(ham, 1.0 / 3.0)
    region = np.arange(3, 9)
    sub = correlation.restrict(corr, region)
    x = 5
    got = correlation.gaussian_renyi1(sub, x)
    rho = correlation.dense_oracle(sub)
    pos = int(np.flatnonzero(region == x)[0])
    jw = correlation.jw_annihilation(len(region), pos)
    op = local_operator(rho.labels, jw)
    want = renyi.renyi_one_point(rho, op, 1.0)
    out.append(_result("gaussian-dense-oracle", abs(got - want), 1e-8, "6-site window"))

    ham = models.fermi_chain_1d(60)
    corr = correlation.ground_state_correlation(ham, 0.25)
    center = lattice.central_site(ham.geometry)
    region = lattice.interval_region(ham.geometry, center, 8)
    lhs = correlation.replicated_moment(correlation.restrict(corr, region), center, 1)
    rhs = correlation.escape_integral(corr, region, center)
    out.append(_result("replicated-q1-escape", abs(lhs - rhs), 1e-10))

    _, _, eps = fermisurface.square_dispersion_grid(128)
    area = fermisurface.fermi_surface_area(eps, 0.5, 2.0 * np.pi / 128)
    want = 4.0 * math.sqrt(2.0) * math.pi
    out.append(_result("fs-diamond-area", abs(area - want), 1e-8, "half filling"))

    return out


def _isingdecohere_checks(seed):
    out = []

    reg = ising_region.rectangle_region(4, 3)
    dist = probs.xbasis_probabilities(reg, 0.2)
    slack = max(abs(float(dist.probs.sum()) - 1.0), -float(dist.probs.min()))
    out.append(_result("xbasis-normalized", slack, 1e-12))

    from ..isingdecohere import rbim

    small = ising_region.rectangle_region(3, 2)
    xor = probs.xbasis_probabilities(small, 0.15).probs
    gauge = rbim.gauge_probabilities(small, 0.15).probs
    out.append(_result("gauge-route-match", float(np.max(np.abs(xor - gauge))), 1e-12))

    reg = ising_region.rectangle_region(3, 3)

    p = 0.2
    dist = probs.xbasis_probabilities(reg, p)
    x = reg.center_index()
    r2 = probs.renyi2k_from_probs(dist, x, 1)
    mag = ising.ising_magnetization_exact(reg, probs.nishimori_params(p).dual_coupling, x)
    out.append(_result("replica-identity", abs(r2 - mag), 1e-10, "k=1 on 3x3"))

    slack = 0.0
    for p in (0.05, 0.15, 0.25, 0.35, 0.45):
        par = probs.nishimori_params(p)
        slack = max(
            slack,
            abs(math.exp(-2.0 * par.beta) - p / (1.0 - p)),
            abs(math.exp(-2.0 * par.dual_coupling) - math.tanh(par.beta)),
        )
    out.append(_result("duality-relations", slack, 1e-12))

    prev = None
    slack = 0.0
    for p in (0.05, 0.15, 0.25, 0.35, 0.45):
        val = probs.fidelity_from_probs(probs.xbasis_probabilities(reg, p), x)
        if prev is not None:
            slack = max(slack, prev - val)
        prev = val
    out.append(_result("lfc-grows-with-noise", slack, 1e-12, "3x3 exact grid"))

    return out


def _predictions_checks(seed):
    out = []

    rng = np.random.default_rng(seed)
    slack = 0.0
    for _ in range(20):
        u = rng.uniform(-3.0, 0.0)
        v = rng.uniform(1.0, 4.0)
        x = rng.uniform(u + 0.3, v - 0.3)
        delta = rng.uniform(0.1, 2.0)
        a = cft.cft_renyi2n_interval(CftParams(u=u, v=v, x=x, beta=math.inf, delta=delta, n=0.5))
        b = cft.cft_renyi1_zero_t(x - u, v - x, delta)
        slack = max(slack, abs(a - b) / abs(b))
    out.append(_result("cft-zero-temperature-limit", slack, 1e-9))

    val = cft.cft_renyi2n_interval(CftParams(u=-200.0, v=200.0, x=0.0, beta=2.0, delta=0.5, n=0.5))
    plat = cft.thermal_plateau(2.0, 0.5)
    out.append(_result("cft-thermal-plateau", abs(val - plat) / plat, 1e-6))

    ell = np.arange(10.0, 60.0, 5.0)
    series = ScalingSeries(
        ell=tuple(ell),
        values=tuple(3.0 * ell**-2.0),
        errors=tuple(0.0 for _ in ell),
        meta={},
    )
    fit = fitting.fit_power_law(series, (10.0, 55.0))
    slack = max(abs(fit.exponent - 2.0), abs(fit.prefactor - 3.0))
    out.append(_result("fit-exponent-recovery", slack, 1e-9))

    return out


_SUITES = {
    "densemix": (_densemix_checks,),
    "gaussfermi": (_gaussfermi_checks,),
    "isingdecohere": (_isingdecohere_checks,),
    "predictions": (_predictions_checks,),
}
_SUITES["all"] = (
    _densemix_checks,
    _gaussfermi_checks,
    _isingdecohere_checks,
    _predictions_checks,
)


def run_verify(suite, seed=0):
    """Run a named invariant suite; raises ValueError on an unknown name."""
    if suite not in _SUITES:
        known = ", ".join(sorted(_SUITES))
        raise ValueError(f"unknown suite {suite!r} (known: {known})")
    checks = []
    for fn in _SUITES[suite]:
        checks.extend(fn(seed))
    return VerifyReport(suite=suite, checks=tuple(checks))
