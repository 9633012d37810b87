"""JSON encodings shared by the library and the command line.

Complex scalars are ``[re, im]`` pairs; vectors are lists of pairs; matrices
are ``{"rows": n, "cols": m, "entries": [[re, im], ...]}`` in row-major order.
Python floats survive ``json`` round trips exactly, so parse(emit(x)) == x.
"""
from __future__ import annotations

import json
from typing import Any

import numpy as np

from .design import DesignReport
from .eigenbasis import FourierEigenbasis


class FormatError(ValueError):
    pass


def encode_complex(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def decode_complex(pair) -> complex:
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise FormatError(f"complex value must be a [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def encode_vector(v) -> list:
    return [encode_complex(z) for z in np.asarray(v).ravel()]


def decode_vector(items) -> np.ndarray:
    if not isinstance(items, list):
        raise FormatError("vector must be a list of [re, im] pairs")
    return np.array([decode_complex(p) for p in items], dtype=complex)


def encode_matrix(m) -> dict:
    m = np.asarray(m, dtype=complex)
    rows, cols = m.shape
    return {"rows": rows, "cols": cols, "entries": encode_vector(m)}


def decode_matrix(obj: dict) -> np.ndarray:
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"matrix object needs rows, cols and entries: {exc}") from None
    flat = decode_vector(entries)
    if rows < 0 or cols < 0 or len(flat) != rows * cols:
        raise FormatError(f"expected {rows} x {cols} = {rows * cols} entries, got {len(flat)}")
    if not np.all(np.isfinite(flat)):
        raise FormatError("matrix entries must be finite")
    return flat.reshape(rows, cols)


def encode_basis(basis: FourierEigenbasis) -> dict:
    return {
        "d": basis.d,
        "vectors": [encode_vector(v) for v in basis.vectors],
        "f_eigenvalues": encode_vector(basis.f_eigenvalues),
        "r_eigenvalues": [encode_vector(row) for row in basis.r_eigenvalues],
    }


def decode_basis_vectors(obj: dict) -> tuple[int, np.ndarray]:
    """Read ``d`` and the vectors of a basis file; eigenvalue fields are optional."""
    try:
        d = int(obj["d"])
        vectors = np.array([decode_vector(v) for v in obj["vectors"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"basis object needs d and vectors: {exc}") from None
    if vectors.ndim != 2 or vectors.shape[1] != d or len(vectors) == 0:
        raise FormatError(f"vectors must be a non-empty list of length-{d} vectors")
    return d, vectors


def encode_report(report: DesignReport) -> dict:
    return report.to_dict()


def decode_report(obj: dict) -> DesignReport:
    return DesignReport(**obj)


def dumps(obj: Any, pretty: bool = False) -> str:
    return json.dumps(obj, indent=2 if pretty else None)
