"""Matrix file format: UTF-8 JSON with explicit (re, im) entry pairs.

Schema: {"rows": R, "cols": C, "data": [[re, im], ...]} with data in
row-major order, plus an optional "dims": [m, n] bipartite annotation.
Numbers round-trip bit-for-bit because serialization uses Python's
shortest-round-trip decimal repr.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass

import numpy as np

from .errors import MatrixFormatError


@dataclass(frozen=True)
class MatrixFile:
    matrix: np.ndarray
    dims: tuple[int, int] | None = None


def _reject_constant(token: str):
    raise MatrixFormatError(f"non-finite number {token!r} is not allowed")


def _entry_number(value, where: str) -> float:
    # bool is an int subclass; JSON true/false must not sneak in as 1/0
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MatrixFormatError(f"{where}: expected a number, got {value!r}")
    out = float(value)
    if not np.isfinite(out):
        raise MatrixFormatError(f"{where}: non-finite value {value!r}")
    return out


def parse_matrix(text: str) -> MatrixFile:
    """Parse one matrix document; errors carry the failing position or index."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise MatrixFormatError("top-level document must be an object")
    for key in ("rows", "cols", "data"):
        if key not in doc:
            raise MatrixFormatError(f"missing required key {key!r}")
    rows, cols = doc["rows"], doc["cols"]
    for name, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise MatrixFormatError(f"{name} must be a positive integer, got {value!r}")
    data = doc["data"]
    if not isinstance(data, list):
        raise MatrixFormatError("data must be a list of [re, im] pairs")
    if len(data) != rows * cols:
        raise MatrixFormatError(
            f"data has {len(data)} entries, expected rows*cols = {rows * cols}; "
            f"first missing index {min(len(data), rows * cols)}"
        )
    entries = np.empty(rows * cols, dtype=np.complex128)
    for idx, pair in enumerate(data):
        if not isinstance(pair, list) or len(pair) != 2:
            raise MatrixFormatError(f"data[{idx}]: expected a [re, im] pair, got {pair!r}")
        re = _entry_number(pair[0], f"data[{idx}][0]")
        im = _entry_number(pair[1], f"data[{idx}][1]")
        entries[idx] = complex(re, im)
    dims = None
    if "dims" in doc and doc["dims"] is not None:
        raw = doc["dims"]
        if (
            not isinstance(raw, list)
            or len(raw) != 2
            or any(isinstance(d, bool) or not isinstance(d, int) or d < 1 for d in raw)
        ):
            raise MatrixFormatError(f"dims must be a pair of positive integers, got {raw!r}")
        m, n = raw
        if m * n != rows or rows != cols:
            raise MatrixFormatError(
                f"dims [{m}, {n}] require a square matrix of side {m * n}, "
                f"got {rows}x{cols}"
            )
        dims = (m, n)
    return MatrixFile(entries.reshape(rows, cols), dims)


def matrix_to_obj(matrix: np.ndarray, dims: tuple[int, int] | None = None) -> dict:
    """JSON-ready dict for a matrix, matching the file schema."""
    m = np.asarray(matrix, dtype=np.complex128)
    obj = {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
    }
    if dims is not None:
        obj["dims"] = [int(dims[0]), int(dims[1])]
    return obj


def serialize_matrix(matrix: np.ndarray, dims: tuple[int, int] | None = None) -> str:
    return json.dumps(matrix_to_obj(matrix, dims))


def load_matrix(path: str) -> MatrixFile:
    """Read a matrix document from a file path, or stdin when path is '-'."""
    if path == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matrix(text)


def save_matrix(path: str, matrix: np.ndarray, dims: tuple[int, int] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_matrix(matrix, dims))
        handle.write("\n")
