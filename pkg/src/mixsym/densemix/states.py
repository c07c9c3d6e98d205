"""Density matrices on labeled registers of finite-dimensional sites."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
EIG_FLOOR = -1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """A mixed state on an ordered register of sites.

    Parameters
    ----------
    sites : tuple of (label, local_dim)
        Register layout; the first site is the leftmost tensor factor.
    data : ndarray
        Complex square matrix of dimension prod(local_dim).
    """

    sites: tuple
    data: np.ndarray

    @property
    def labels(self):
        return tuple(s[0] for s in self.sites)

    @property
    def dims(self):
        return tuple(int(s[1]) for s in self.sites)

    @property
    def dim(self):
        return int(math.prod(self.dims))

    def site_position(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown site label {label!r}") from None


def _check_state(data, dims):
    d = math.prod(dims)
    if data.shape != (d, d):
        raise ValueError(f"data shape {data.shape} does not match register dimension {d}")
    herm_dev = np.max(np.abs(data - data.conj().T))
    if herm_dev > HERMITICITY_TOL:
        raise ValueError(f"not Hermitian: max deviation {herm_dev:.3e}")
    tr = np.trace(data)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {tr} is not 1 within {TRACE_TOL}")
    wmin = float(np.linalg.eigvalsh(data)[0])
    if wmin < EIG_FLOOR:
        raise ValueError(f"negative eigenvalue {wmin:.3e} beyond tolerance")


def density_matrix(data, sites, validate=True):
    """Validated public constructor.

    ``sites`` may be a list of (label, dim) pairs or a plain list of labels
    (then every site is a qubit).  Validation checks hermiticity, unit trace
    and nonnegativity of the spectrum within fixed tolerances.
    """
    norm_sites = _normalize_sites(sites)
    arr = np.array(data, dtype=complex)
    if validate:
        _check_state(arr, [d for _, d in norm_sites])
    return DensityMatrix(norm_sites, arr)


def pure_density(vec, sites):
    """Density matrix |psi><psi| of a normalized state vector."""
    v = np.asarray(vec, dtype=complex).reshape(-1)
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("zero state vector")
    v = v / n
    return density_matrix(np.outer(v, v.conj()), sites, validate=False)


def _normalize_sites(sites):
    out = []
    for s in sites:
        if isinstance(s, tuple) and len(s) == 2 and isinstance(s[1], (int, np.integer)):
            out.append((s[0], int(s[1])))
        else:
            out.append((s, 2))
    return tuple(out)


def maximally_mixed(sites):
    sites_n = _normalize_sites(sites)
    d = math.prod(dd for _, dd in sites_n) if sites_n else 1
    return DensityMatrix(sites_n, np.eye(d, dtype=complex) / d)


def product_density(factors):
    """Tensor product of single-register density matrices, in order."""
    data = np.array([[1.0 + 0j]])
    sites = ()
    for f in factors:
        data = np.kron(data, f.data)
        sites = sites + tuple(f.sites)
    return DensityMatrix(sites, data)


def random_density_matrix(sites, rank=None, seed=None):
    """Random full-support state: Gaussian rectangular G, rho = GG^dag / tr.

    Equivalent to tracing an ancilla of dimension ``rank`` out of a random
    pure state; default rank equals the register dimension.
    """
    rng = np.random.default_rng(seed)
    refr = maximally_mixed(sites)
    d = refr.dim
    r = d if rank is None else int(rank)
    g = rng.normal(size=(d, r)) + 1j * rng.normal(size=(d, r))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityMatrix(refr.sites, m)


def random_pure_state(sites, seed=None):
    rng = np.random.default_rng(seed)
    refr = maximally_mixed(sites)
    v = rng.normal(size=refr.dim) + 1j * rng.normal(size=refr.dim)
    return pure_density(v, refr.sites)


def partial_trace(rho, keep):
    """Reduced state on the labels in ``keep`` (register order preserved)."""
    keep = list(keep)
    labels = rho.labels
    for k in keep:
        if k not in labels:
            raise KeyError(f"unknown site label {k!r}")
    keep_set = set(keep)
    pos = [i for i, lab in enumerate(labels) if lab in keep_set]
    dims = list(rho.dims)
    n = len(dims)
    t = rho.data.reshape(dims + dims)
    traced = [i for i in range(n) if i not in set(pos)]
    k = n
    for i in reversed(traced):
        t = np.trace(t, axis1=i, axis2=i + k)
        k -= 1
    d_new = math.prod(dims[i] for i in pos) if pos else 1
    new_sites = tuple(rho.sites[i] for i in pos)
    return DensityMatrix(new_sites, np.ascontiguousarray(t.reshape(d_new, d_new)))
