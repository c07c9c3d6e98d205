"""Binary and JSON matrix containers: exact round trips, corruption detection."""

import numpy as np
import pytest

from mixsym.containers import (
    MAGIC,
    load_matrix_binary,
    load_matrix_json,
    matrix_from_json,
    matrix_to_json,
    save_matrix_binary,
    save_matrix_json,
)


def test_binary_real_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    arr = rng.normal(size=(5, 3))
    path = tmp_path / "real.mxm"
    save_matrix_binary(path, arr)
    back = load_matrix_binary(path)
    assert back.dtype == np.float64
    assert np.array_equal(back, arr)


def test_binary_complex_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    arr = rng.normal(size=(2, 3, 4)) + 1j * rng.normal(size=(2, 3, 4))
    path = tmp_path / "cplx.mxm"
    save_matrix_binary(path, arr)
    back = load_matrix_binary(path)
    assert back.dtype == np.complex128
    assert np.array_equal(back, arr)


def test_binary_vector_round_trip(tmp_path):
    arr = np.array([1.0, -0.0, 2.5e-300, 1e300])
    path = tmp_path / "vec.mxm"
    save_matrix_binary(path, arr)
    back = load_matrix_binary(path)
    assert np.array_equal(back, arr)
    assert np.signbit(back[1])


def test_binary_corruption_detection(tmp_path):
    arr = np.eye(3)
    path = tmp_path / "ok.mxm"
    save_matrix_binary(path, arr)
    raw = path.read_bytes()

    bad_magic = tmp_path / "magic.mxm"
    bad_magic.write_bytes(b"XXXX" + raw[4:])
    with pytest.raises(ValueError):
        load_matrix_binary(bad_magic)

    bad_version = tmp_path / "version.mxm"
    bad_version.write_bytes(MAGIC + b"\x07\x00" + raw[6:])
    with pytest.raises(ValueError):
        load_matrix_binary(bad_version)

    truncated = tmp_path / "trunc.mxm"
    truncated.write_bytes(raw[:-8])
    with pytest.raises(ValueError):
        load_matrix_binary(truncated)


def test_json_round_trips(tmp_path):
    rng = np.random.default_rng(2)
    real = rng.normal(size=(4, 4))
    cplx = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
    assert np.array_equal(matrix_from_json(matrix_to_json(real)), real)
    assert np.array_equal(matrix_from_json(matrix_to_json(cplx)), cplx)
    path = tmp_path / "mat.json"
    save_matrix_json(path, cplx)
    assert np.array_equal(load_matrix_json(path), cplx)
