"""Covering sweeps: build regions of growing size, evaluate, aggregate.

Work decomposes into one task per seed (the expensive step is the model
diagonalization, shared by every region size).  Tasks are pure functions of
(config, seed), so the pool may run them in any order; the reduction sorts
by seed and is therefore independent of worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..densemix import ensembles
from ..densemix import renyi as dense_renyi
from ..densemix.fidelity import lfc_one_point
from ..densemix.operators import pauli_on
from ..densemix.states import partial_trace
from ..gaussfermi import correlation, lattice, models
from ..isingdecohere import probs as ising_probs
from ..isingdecohere import region as ising_region
from ..predictions import fit_plateau, fit_power_law
from ..series import ScalingSeries
from .config import ConfigError, model_class, validate_config

MONOTONE_SLACK = 1e-9
_MONOTONE_KINDS = {"fidelity", "gaussian_renyi1", "ising_fidelity"}


class MonotonicityError(RuntimeError):
    """A fidelity-kind series increased beyond statistical tolerance."""


def _is_monotone_kind(estimator):
    if estimator["kind"] in _MONOTONE_KINDS:
        return True
    return estimator["kind"] == "renyi" and abs(estimator.get("alpha", 0.0) - 1.0) < 1e-12


def _build_gaussian(model_cfg, seed):
    mid = model_cfg["id"]
    par = model_cfg.get("params", {})
    if mid == "fermi_chain_1d":
        ham = models.fermi_chain_1d(par["length"], par.get("periodic", True))
    elif mid == "square_lattice_2d":
        ham = models.square_lattice_2d(par["lx"], par["ly"], par.get("periodic", True))
    elif mid == "pi_flux_2d":
        ham = models.pi_flux_2d(par["lx"], par["ly"], par.get("periodic", True))
    elif mid == "anderson_2d":
        ham = models.anderson_2d(par["length"], par["disorder"], seed, par.get("periodic", True))
    elif mid == "goe":
        ham = models.goe_hamiltonian(par["n"], par.get("coupling", 1.0), seed)
    else:
        raise ConfigError(f"unknown gaussian model {mid!r}")
    return ham.geometry, correlation.ground_state_correlation(ham, par["filling"])


def _gaussian_region(geo, region_cfg, center, ell):
    family = region_cfg["family"]
    if family == "interval":
        return lattice.interval_region(geo, center, ell)
    if family == "disk":
        return lattice.disk_region(geo, center, ell)
    if family == "halfspace":
        normal = np.asarray(
            region_cfg.get("normal", (1.0,) + (0.0,) * (geo.dimension - 1)), dtype=float
        )
        normal = normal / np.linalg.norm(normal)
        offset = float(normal @ geo.coords[center]) + float(ell)
        return lattice.halfspace_region(geo, normal, offset)
    half = int(round(ell))
    corner = geo.coords[center] - half
    shape = (2 * half + 1,) * geo.dimension
    return lattice.rectangle_region(geo, corner, shape)


def _gaussian_task(config, seed):
    geo, corr = _build_gaussian(config["model"], seed)
    region_cfg = config["region"]
    center = region_cfg.get("center")
    if center is None:
        center = lattice.central_site(geo)
    out = []
    for ell in config["ells"]:
        idx = _gaussian_region(geo, region_cfg, center, ell)
        sub = correlation.restrict(corr, idx)
        out.append(correlation.gaussian_renyi1(sub, center))
    return out


def _build_dense(model_cfg, seed):
    mid = model_cfg["id"]
    par = model_cfg.get("params", {})
    if mid == "gibbs_paramagnet":
        return ensembles.gibbs_paramagnet(par["n"], par["beta"])
    if mid == "sector_paramagnet":
        return ensembles.sector_paramagnet(par["n"], par["beta"], par.get("sector", 1))
    if mid == "infinite_temperature_sector":
        return ensembles.fixed_sector_infinite_temp(par["n"])
    if mid == "markov_product":
        rho, _ = ensembles.markov_product_state(par["n_a"], par["n_b"], par["n_c"], seed)
        return rho
    raise ConfigError(f"unknown dense model {mid!r}")


def _dense_task(config, seed):
    rho = _build_dense(config["model"], seed)
    n = len(rho.labels)
    region_cfg = config["region"]
    x = region_cfg.get("center", n // 2)
    growth = region_cfg.get("growth", "symmetric")
    est = config["estimator"]
    op = pauli_on(est.get("operator", "X"), x)
    out = []
    for ell in config["ells"]:
        half = int(round(ell))
        if growth == "symmetric":
            lo, hi = x - half, x + half
        else:
            lo, hi = x - 2 * half, x + half
        keep = tuple(range(max(0, lo), min(n - 1, hi) + 1))
        rho_a = partial_trace(rho, keep)
        if est["kind"] == "fidelity":
            out.append(lfc_one_point(rho_a, op))
        else:
            out.append(dense_renyi.renyi_one_point(rho_a, op, est["alpha"]))
    return out


def _ising_task(config, seed):
    par = config["model"].get("params", {})
    p = par["p"]
    height = int(config["region"].get("height", 3))
    est = config["estimator"]
    out = []
    for ell in config["ells"]:
        width = 2 * int(round(ell)) + 1
        reg = ising_region.rectangle_region(width, height)
        dist = ising_probs.xbasis_probabilities(reg, p)
        x = reg.center_index()
        if est["kind"] == "ising_fidelity":
            out.append(ising_probs.fidelity_from_probs(dist, x))
        else:
            out.append(ising_probs.renyi2k_from_probs(dist, x, est["k"]))
    return out


def _seed_task(config, seed):
    cls = model_class(config["model"]["id"])
    if cls == "gaussian":
        return _gaussian_task(config, seed)
    if cls == "dense":
        return _dense_task(config, seed)
    return _ising_task(config, seed)


def _check_monotone(config, ells, vals, errs):
    if not _is_monotone_kind(config["estimator"]):
        return
    for i in range(len(vals) - 1):
        allowed = 3.0 * (errs[i] + errs[i + 1]) + MONOTONE_SLACK
        if vals[i + 1] > vals[i] + allowed:
            raise MonotonicityError(
                f"fidelity-kind series rose from {vals[i]:.9g} (ell={ells[i]:g}) "
                f"to {vals[i + 1]:.9g} (ell={ells[i + 1]:g}), "
                f"beyond the allowance {allowed:.3g}"
            )


def covering_sweep(config, jobs=1):
    """Run the sweep described by a validated config; returns a ScalingSeries.

    jobs > 1 distributes seeds over a process pool.  Results are keyed and
    reduced in seed order, so the output is identical for any worker count.
    """
    validate_config(config)
    base = config["seeds"]["base"]
    count = config["seeds"]["count"]
    seeds = [base + i for i in range(count)]
    jobs = max(1, int(jobs))
    if jobs == 1 or len(seeds) == 1:
        rows = [_seed_task(config, s) for s in seeds]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(seeds))) as pool:
            futures = [pool.submit(_seed_task, config, s) for s in seeds]
            rows = [f.result() for f in futures]
    arr = np.asarray(rows, dtype=float)
    vals = arr.mean(axis=0)
    if count > 1:
        errs = arr.std(axis=0, ddof=1) / np.sqrt(count)
    else:
        errs = np.zeros(arr.shape[1])
    ells = [float(e) for e in config["ells"]]
    _check_monotone(config, ells, vals, errs)
    meta = {
        "name": config["name"],
        "model": config["model"],
        "estimator": config["estimator"],
        "region": config["region"],
        "seeds": config["seeds"],
    }
    return ScalingSeries(ell=tuple(ells), values=tuple(vals), errors=tuple(errs), meta=meta)


def fit_series(series, fit_cfg):
    """Apply the fit block of a config to a finished series."""
    window = tuple(fit_cfg["window"])
    if fit_cfg["method"] == "power_law":
        return fit_power_law(series, window)
    return fit_plateau(series, window)
