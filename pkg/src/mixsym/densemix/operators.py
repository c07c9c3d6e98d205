"""Operators on declared site supports, with embedding into full registers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_PAULIS = {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z, "I": np.eye(2, dtype=complex)}


@dataclass(frozen=True)
class LocalOperator:
    """A complex matrix acting on the listed support sites.

    ``support`` lists site labels in tensor order of ``data``; ``dims`` gives
    their local dimensions.  ``charge`` optionally records an irrep label
    under a declared symmetry (an integer sector index or a phase).
    """

    support: tuple
    data: np.ndarray
    dims: tuple = None
    charge: object = None

    def __post_init__(self):
        if self.dims is None:
            object.__setattr__(self, "dims", (2,) * len(self.support))
        d = math.prod(self.dims) if self.dims else 1
        if self.data.shape != (d, d):
            raise ValueError(
                f"operator shape {self.data.shape} does not match support dimension {d}"
            )

    @property
    def norm_inf(self):
        """Operator (spectral) norm."""
        return float(np.linalg.svd(self.data, compute_uv=False)[0])


def local_operator(support, data, dims=None, charge=None):
    support = tuple(support)
    arr = np.array(data, dtype=complex)
    if dims is not None:
        dims = tuple(int(d) for d in dims)
    return LocalOperator(support, arr, dims, charge)


def pauli_on(kind, label, charge=None):
    """Single-site Pauli operator; kind in {X, Y, Z, I}."""
    if kind not in _PAULIS:
        raise ValueError(f"unknown Pauli kind {kind!r}")
    return LocalOperator((label,), _PAULIS[kind].copy(), (2,), charge)


def _register_positions(op, sites):
    labels = [s[0] for s in sites]
    pos = []
    for lab in op.support:
        if lab not in labels:
            raise KeyError(f"operator support site {lab!r} not in register")
        pos.append(labels.index(lab))
    if len(set(pos)) != len(pos):
        raise ValueError("duplicate sites in operator support")
    for p, lab, d in zip(pos, op.support, op.dims):
        if sites[p][1] != d:
            raise ValueError(f"local dimension mismatch at site {lab!r}")
    return pos


def embed_operator(op, sites):
    """Dense matrix of ``op`` acting on the full register ``sites``."""
    sites = tuple(sites)
    dims = [int(s[1]) for s in sites]
    n = len(dims)
    pos = _register_positions(op, sites)
    rest = [i for i in range(n) if i not in set(pos)]
    d_rest = math.prod(dims[i] for i in rest) if rest else 1
    big = np.kron(op.data, np.eye(d_rest, dtype=complex))
    # current tensor order: support sites then the rest; permute to register order
    order = pos + rest
    cur_dims = [dims[i] for i in order]
    t = big.reshape(cur_dims + cur_dims)
    inv = np.argsort(order)
    t = t.transpose(list(inv) + [n + i for i in inv])
    d = math.prod(dims)
    return np.ascontiguousarray(t.reshape(d, d))


def operator_product(a, b, dagger_b=False):
    """Product a * b (or a * b^dag) as a LocalOperator on the union support.

    Supports may overlap; the union register keeps a's site order first,
    then b's remaining sites.
    """
    union = list(a.support)
    union_dims = list(a.dims)
    for lab, d in zip(b.support, b.dims):
        if lab in union:
            if union_dims[union.index(lab)] != d:
                raise ValueError(f"local dimension mismatch at site {lab!r}")
        else:
            union.append(lab)
            union_dims.append(d)
    reg = tuple(zip(union, union_dims))
    ma = embed_operator(a, reg)
    mb = embed_operator(b, reg)
    if dagger_b:
        mb = mb.conj().T
    return LocalOperator(tuple(union), ma @ mb, tuple(union_dims), None)


def dagger(op):
    """Hermitian adjoint on the same support (charge label dropped)."""
    return LocalOperator(op.support, op.data.conj().T, op.dims, None)


def supports_disjoint(a, b):
    return not (set(a.support) & set(b.support))
