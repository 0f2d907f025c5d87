"""JSON formats for configuration points, vectors and group elements, and a
serializer that writes every float with 17 significant digits so that a
parse/serialize round trip is bit-identical.
"""
from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import numpy as np

from .group import GroupElement, validate_group


class FormatError(ValueError):
    """Malformed JSON input; `field` names the offending key."""

    def __init__(self, field: str, reason: str):
        super().__init__(f"field {field!r}: {reason}")
        self.field = field


# ---------------------------------------------------------------- output

def format_float(x: float) -> str:
    """17 significant digits, always recognisable as a float ('1.0', '-0.0')."""
    x = float(x)
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def _encode(obj, out: list, indent, level: int):
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = "," if indent is None else ","
    colon = ":" if indent is None else ": "
    if obj is None or isinstance(obj, (bool, np.bool_)):
        out.append(json.dumps(None if obj is None else bool(obj)))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(obj))
    elif isinstance(obj, (complex, np.complexfloating)):
        _encode({"re": obj.real, "im": obj.imag}, out, indent, level)
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _encode(obj.tolist(), out, indent, level)
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(sep)
            out.append(pad + json.dumps(str(k)) + colon)
            _encode(v, out, indent, level + 1)
        out.append(end + "}")
    elif isinstance(obj, (list, tuple)):
        # numeric rows stay on one line
        flat = all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj)
        if flat or not obj:
            out.append("[")
            for i, v in enumerate(obj):
                if i:
                    out.append(", " if indent is not None else ",")
                _encode(v, out, None, 0)
            out.append("]")
            return
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(sep)
            out.append(pad)
            _encode(v, out, indent, level + 1)
        out.append(end + "]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj, indent: int | None = 2) -> str:
    out: list[str] = []
    _encode(obj, out, indent, 0)
    return "".join(out)


def write_output(obj, target: str = "-", indent: int | None = 2) -> str:
    text = dumps(obj, indent) + "\n"
    if target in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)
    return text


def load_json(source: str = "-"):
    try:
        text = sys.stdin.read() if source in (None, "-") else Path(source).read_text()
    except OSError as exc:
        raise FormatError("--in", str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("<document>", f"invalid JSON ({exc})") from None


# ---------------------------------------------------------------- input helpers

def _require(obj, field: str):
    if not isinstance(obj, dict):
        raise FormatError(field, "expected a JSON object")
    if field not in obj:
        raise FormatError(field, "missing")
    return obj[field]


def _int_field(obj, field: str, minimum: int) -> int:
    v = _require(obj, field)
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(field, "expected an integer")
    if v < minimum:
        raise FormatError(field, f"must be >= {minimum}")
    return v


def _array_field(obj, field: str, shape: tuple) -> np.ndarray:
    v = _require(obj, field)
    try:
        a = np.array(v, dtype=float)
    except (TypeError, ValueError):
        raise FormatError(field, "expected numbers") from None
    if a.shape != shape:
        raise FormatError(field, f"expected shape {shape}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise FormatError(field, "non-finite entry")
    return a


# ---------------------------------------------------------------- config points

def read_config_point(obj) -> np.ndarray:
    """{"n", "N", "re", "im"} with row-major (1+n) x N arrays -> complex array."""
    n = _int_field(obj, "n", 1)
    N = _int_field(obj, "N", 1)
    re = _array_field(obj, "re", (1 + n, N))
    im = _array_field(obj, "im", (1 + n, N))
    return re + 1j * im


def config_point_to_json(z) -> dict:
    z = np.asarray(z, dtype=complex)
    if z.ndim == 1:
        z = z[:, None]
    return {"n": z.shape[0] - 1, "N": z.shape[1], "re": z.real, "im": z.imag}


def read_vector(obj) -> np.ndarray:
    """{"n", "re", "im"} -> complex vector of length 1+n; "im" may be omitted."""
    n = _int_field(obj, "n", 1)
    re = _array_field(obj, "re", (1 + n,))
    im = _array_field(obj, "im", (1 + n,)) if isinstance(obj, dict) and "im" in obj else np.zeros(1 + n)
    return re + 1j * im


def vector_to_json(v) -> dict:
    v = np.asarray(v, dtype=complex)
    return {"n": v.size - 1, "re": v.real, "im": v.imag}


def read_matrix(obj, prefix: str = "matrix") -> np.ndarray:
    re = _require(obj, f"{prefix}_re")
    try:
        shape = np.array(re, dtype=float).shape
    except (TypeError, ValueError):
        raise FormatError(f"{prefix}_re", "expected numbers") from None
    if len(shape) != 2:
        raise FormatError(f"{prefix}_re", "expected a 2-d array")
    return _array_field(obj, f"{prefix}_re", shape) + 1j * _array_field(obj, f"{prefix}_im", shape)


def read_group(obj) -> GroupElement:
    m = read_matrix(obj)
    if m.shape[0] != m.shape[1] or m.shape[0] < 2:
        raise FormatError("matrix_re", f"expected a square matrix of size >= 2, got {m.shape}")
    return validate_group(m)


def group_to_json(g) -> dict:
    if isinstance(g, GroupElement):
        return {"matrix_re": g.matrix.real, "matrix_im": g.matrix.imag,
                "classification": g.classification, "residual": g.residual}
    m = np.asarray(g, dtype=complex)
    return {"matrix_re": m.real, "matrix_im": m.imag}
