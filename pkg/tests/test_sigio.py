import json

import numpy as np
import pytest

from hilbertsym import (
    CircleSamples,
    CircleSignal,
    FourierBasis,
    Grid1D,
    LineBasis,
    LineSignal,
    OperatorMatrix,
)
from hilbertsym.sigio import (
    load_operator,
    load_signal,
    operator_from_dict,
    save_operator,
    save_signal,
    signal_from_dict,
    signal_to_dict,
)


def test_line_signal_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    g = Grid1D(x_min=-1.25, n=16, dx=0.173)
    f = LineSignal(g, rng.normal(size=16) + 1j * rng.normal(size=16))
    path = tmp_path / "f.json"
    save_signal(f, path)
    back = load_signal(path)
    assert isinstance(back, LineSignal)
    assert back.grid == g
    np.testing.assert_array_equal(back.values, f.values)  # repr round-trips floats


def test_circle_signals_round_trip(tmp_path):
    c = CircleSignal.from_dict({-2: 1j, 0: 0.25, 2: -3.0}, K=2)
    path = tmp_path / "c.json"
    save_signal(c, path)
    back = load_signal(path)
    assert isinstance(back, CircleSignal)
    np.testing.assert_array_equal(back.coeffs, c.coeffs)

    s = CircleSamples(np.exp(1j * np.linspace(0, 2, 8)))
    save_signal(s, path)
    back = load_signal(path)
    assert isinstance(back, CircleSamples)
    np.testing.assert_array_equal(back.values, s.values)


def test_signal_document_shape():
    c = CircleSignal.from_dict({1: 1.0}, K=1)
    doc = signal_to_dict(c)
    assert doc["type"] == "circle-coeffs"
    assert doc["grid"] == {"K": 1}
    assert doc["values"] == [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]


def test_malformed_documents_rejected():
    with pytest.raises(ValueError):
        signal_from_dict({"type": "line"})
    with pytest.raises(ValueError):
        signal_from_dict({"type": "ring", "grid": {"K": 1}, "values": [[0, 0]]})
    with pytest.raises(ValueError):
        signal_from_dict({"type": "circle-coeffs", "grid": {"K": 1}, "values": [[0, 0]]})
    with pytest.raises(ValueError):
        operator_from_dict({"dim": 2, "basis": {"kind": "fourier", "K": 1}, "entries": [[0, 0]]})
    with pytest.raises(ValueError):
        operator_from_dict({"dim": 1, "basis": {"kind": "cube"}, "entries": [[0, 0]]})


def test_operator_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    for basis in (FourierBasis(2), LineBasis(5, -1.0, 0.4)):
        dim = basis.dim
        op = OperatorMatrix(basis, rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
        path = tmp_path / "op.json"
        save_operator(op, path)
        back = load_operator(path)
        assert back.basis == basis
        np.testing.assert_array_equal(back.entries, op.entries)


def test_json_is_plain_and_row_major(tmp_path):
    op = OperatorMatrix(FourierBasis(1), np.arange(9, dtype=complex).reshape(3, 3))
    path = tmp_path / "op.json"
    save_operator(op, path)
    doc = json.loads(path.read_text())
    assert doc["dim"] == 3
    assert doc["entries"][1] == [1.0, 0.0]  # row-major: entry (0,1) comes second
    assert doc["entries"][3] == [3.0, 0.0]
