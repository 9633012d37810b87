import json

import numpy as np
import pytest

from fourier2design import serialization as ser
from fourier2design.design import certify, wh_orbit


def test_matrix_round_trip():
    m = np.arange(6).reshape(2, 3) + 1j * np.arange(6).reshape(2, 3)[::-1]
    obj = ser.encode_matrix(m)
    assert obj["rows"] == 2 and obj["cols"] == 3 and obj["entries"][1] == [1.0, 4.0]
    assert np.array_equal(ser.decode_matrix(json.loads(json.dumps(obj))), m)


@pytest.mark.parametrize("obj", [
    {"rows": 2, "cols": 2, "entries": [[1, 0]] * 3},
    {"rows": 1, "cols": 1, "entries": [[1, 0, 0]]},
    {"rows": 1, "cols": 1, "entries": [[float("nan"), 0]]},
    {"rows": 1, "entries": [[1, 0]]},
    [1, 2],
])
def test_matrix_rejects_malformed(obj):
    with pytest.raises(ser.FormatError):
        ser.decode_matrix(obj)


def test_basis_round_trip(basis):
    b = basis(7)
    d, vectors = ser.decode_basis_vectors(json.loads(ser.dumps(ser.encode_basis(b))))
    assert d == 7 and np.array_equal(vectors, b.vectors)


def test_basis_rejects_wrong_length():
    with pytest.raises(ser.FormatError):
        ser.decode_basis_vectors({"d": 3, "vectors": [[[1, 0], [0, 0]]]})


def test_report_round_trip(basis):
    r = certify(wh_orbit(basis(3).vectors, 3))
    assert ser.decode_report(json.loads(ser.dumps(ser.encode_report(r)))) == r


def test_dumps_single_line_unless_pretty():
    assert "\n" not in ser.dumps({"a": [1, 2]})
    assert "\n" in ser.dumps({"a": [1, 2]}, pretty=True)
