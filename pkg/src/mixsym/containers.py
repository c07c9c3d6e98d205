"""Binary and JSON serialization for dense matrices.

Binary layout (little-endian throughout):
    magic   4 bytes  b"MXSM"
    version u16      currently 1
    kind    u8       0 = float64, 1 = complex128 (interleaved re, im)
    ndim    u8
    dims    ndim * u64
    data    row-major float64 payload; complex entries stored as
            adjacent (real, imag) pairs
"""

from __future__ import annotations

import json
import struct

import numpy as np

MAGIC = b"MXSM"
VERSION = 1

_KIND_REAL = 0
_KIND_COMPLEX = 1


def save_matrix_binary(path, arr):
    """Write an ndarray (float64 or complex128) to the binary container."""
    arr = np.asarray(arr)
    if np.iscomplexobj(arr):
        kind = _KIND_COMPLEX
        payload = np.ascontiguousarray(arr, dtype=np.complex128)
        flat = payload.view(np.float64).reshape(-1)
    else:
        kind = _KIND_REAL
        payload = np.ascontiguousarray(arr, dtype=np.float64)
        flat = payload.reshape(-1)
    header = MAGIC + struct.pack("<HBB", VERSION, kind, arr.ndim)
    header += struct.pack("<%dQ" % arr.ndim, *arr.shape)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(flat.astype("<f8").tobytes())


def load_matrix_binary(path):
    """Read an ndarray from the binary container."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if raw[:4] != MAGIC:
        raise ValueError("not a matrix container: bad magic")
    version, kind, ndim = struct.unpack("<HBB", raw[4:8])
    if version != VERSION:
        raise ValueError(f"unsupported container version {version}")
    dims = struct.unpack("<%dQ" % ndim, raw[8 : 8 + 8 * ndim])
    data = np.frombuffer(raw[8 + 8 * ndim :], dtype="<f8")
    n = int(np.prod(dims)) if dims else 1
    if kind == _KIND_COMPLEX:
        if data.size != 2 * n:
            raise ValueError("payload size mismatch")
        return data.view(np.complex128).reshape(dims).copy()
    if data.size != n:
        raise ValueError("payload size mismatch")
    return data.reshape(dims).copy()


def matrix_to_json(arr):
    """JSON-friendly dict with exact float round-trip (repr serialization)."""
    arr = np.asarray(arr)
    out = {"dims": list(arr.shape), "real": np.real(arr).reshape(-1).tolist()}
    if np.iscomplexobj(arr):
        out["imag"] = np.imag(arr).reshape(-1).tolist()
    return out


def matrix_from_json(obj):
    dims = tuple(obj["dims"])
    re = np.array(obj["real"], dtype=np.float64).reshape(dims)
    if "imag" in obj:
        im = np.array(obj["imag"], dtype=np.float64).reshape(dims)
        return re + 1j * im
    return re


def save_matrix_json(path, arr):
    with open(path, "w") as fh:
        json.dump(matrix_to_json(arr), fh)


def load_matrix_json(path):
    with open(path) as fh:
        return matrix_from_json(json.load(fh))
