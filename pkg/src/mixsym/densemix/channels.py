"""Quantum channels as Kraus sets with declared supports.

Kraus operators act on the state tensor by contraction over the support
axes only, so a two-site channel on a 12-qubit register never materializes
4096 x 4096 embedded Kraus matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import PAULI_Z
from .states import DensityMatrix

KRAUS_TOL = 1e-10


@dataclass(frozen=True)
class KrausChannel:
    """A completely positive trace-preserving map on ``support`` sites."""

    support: tuple
    kraus: tuple

    def __post_init__(self):
        d = self.kraus[0].shape[0]
        for k in self.kraus:
            if k.shape != (d, d):
                raise ValueError("all Kraus operators must share a shape")
        acc = sum(k.conj().T @ k for k in self.kraus)
        dev = np.max(np.abs(acc - np.eye(d)))
        if dev > KRAUS_TOL:
            raise ValueError(f"Kraus set is not trace preserving: deviation {dev:.3e}")


def _apply_kraus_tensor(data, dims, pos, kraus):
    """sum_k K rho K^dag with K acting on the register axes in ``pos``."""
    n = len(dims)
    rest = [i for i in range(n) if i not in set(pos)]
    order = list(pos) + rest
    perm = order + [n + i for i in order]
    t = data.reshape(list(dims) + list(dims)).transpose(perm)
    d_sup = math.prod(dims[i] for i in pos)
    d_rest = math.prod(dims[i] for i in rest) if rest else 1
    mat = t.reshape(d_sup, d_rest, d_sup, d_rest)
    out = np.zeros_like(mat)
    for k in kraus:
        out += np.einsum("ab,bjdl,dc->ajcl", k, mat, k.conj().T, optimize=True)
    inv = np.argsort(order)
    back = list(inv) + [n + i for i in inv]
    full_dims = [dims[i] for i in order]
    d = math.prod(dims)
    res = out.reshape(full_dims + full_dims).transpose(back).reshape(d, d)
    return np.ascontiguousarray(res)


def apply_channel(rho, channel):
    """Apply one KrausChannel or a sequence of them (composed left to right)."""
    if isinstance(channel, KrausChannel):
        channel = [channel]
    labels = list(rho.labels)
    dims = list(rho.dims)
    data = rho.data
    for ch in channel:
        pos = []
        for lab in ch.support:
            if lab not in labels:
                raise KeyError(f"channel support site {lab!r} not in register")
            pos.append(labels.index(lab))
        data = _apply_kraus_tensor(data, dims, pos, ch.kraus)
    return DensityMatrix(rho.sites, data)


def make_pauli_channel(targets, p, kind="Z"):
    """Independent dephasing channels, one per target.

    kind="Z": each target is a site; Kraus {sqrt(1-p) I, sqrt(p) Z}.
    kind="ZZ": each target is an (i, j) pair; Kraus {sqrt(1-p) II, sqrt(p) ZZ}.
    Returns a list of KrausChannel, to be composed by apply_channel.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    out = []
    if kind == "Z":
        for site in targets:
            out.append(
                KrausChannel(
                    (site,),
                    (np.sqrt(1.0 - p) * np.eye(2, dtype=complex), np.sqrt(p) * PAULI_Z),
                )
            )
    elif kind == "ZZ":
        zz = np.kron(PAULI_Z, PAULI_Z)
        for i, j in targets:
            out.append(
                KrausChannel(
                    (i, j),
                    (np.sqrt(1.0 - p) * np.eye(4, dtype=complex), np.sqrt(p) * zz),
                )
            )
    else:
        raise ValueError(f"unknown Pauli channel kind {kind!r}")
    return out


_HAD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
_V2 = np.kron(_HAD, _HAD)  # maps XX to ZZ; ZZ commutant is block diagonal


def _random_parity_block(rng, unitary):
    """Random 4x4 matrix commuting with X(x)X, via the ZZ-block picture."""
    if unitary:
        a = _haar_2x2(rng)
        b = _haar_2x2(rng)
    else:
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    blk = np.zeros((4, 4), dtype=complex)
    # ZZ = +1 subspace spans indices {0, 3}; ZZ = -1 spans {1, 2}
    for (r, c), val in np.ndenumerate(a):
        blk[[0, 3][r], [0, 3][c]] = val
    for (r, c), val in np.ndenumerate(b):
        blk[[1, 2][r], [1, 2][c]] = val
    return _V2 @ blk @ _V2.conj().T


def _haar_2x2(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _random_symmetric_channel(rng, n_kraus=3):
    """Random CPTP map on 2 qubits commuting with X(x)X."""
    gs = [_random_parity_block(rng, unitary=False) for _ in range(n_kraus)]
    m = sum(g.conj().T @ g for g in gs)
    w, v = np.linalg.eigh(m)
    m_invsqrt = (v / np.sqrt(w)) @ v.conj().T
    return tuple(g @ m_invsqrt for g in gs)


def _brickwork_pairs(labels, layer):
    start = layer % 2
    return [(labels[i], labels[i + 1]) for i in range(start, len(labels) - 1, 2)]


def symmetric_channel_fuzz(rho, depth, seed):
    """Brickwork of random 2-site channels commuting with the global X parity.

    depth 0 returns the input unchanged.  Each layer applies independent
    random symmetric channels on alternating nearest-neighbor pairs.
    """
    if depth == 0:
        return rho
    rng = np.random.default_rng(seed)
    labels = list(rho.labels)
    out = rho
    for layer in range(depth):
        chans = []
        for pair in _brickwork_pairs(labels, layer):
            chans.append(KrausChannel(pair, _random_symmetric_channel(rng)))
        out = apply_channel(out, chans)
    return out


def symmetric_unitary_circuit(rho, depth, seed):
    """Brickwork of Haar-random 2-site unitaries commuting with the X parity."""
    if depth == 0:
        return rho
    rng = np.random.default_rng(seed)
    labels = list(rho.labels)
    out = rho
    for layer in range(depth):
        chans = []
        for pair in _brickwork_pairs(labels, layer):
            chans.append(KrausChannel(pair, (_random_parity_block(rng, unitary=True),)))
        out = apply_channel(out, chans)
    return out
