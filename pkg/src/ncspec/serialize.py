"""JSON files for algebras and homomorphisms, and the report schemas.

Algebra file::

    {"field": "Q" | "Fp:<p>", "dim": n, "basis": [labels], "unit": [coords],
     "mul": [[coords of e_i e_j for j] for i]}

Hom file::

    {"source": path, "target": path, "matrix": [[...] x source dim] x target dim}

Paths in a hom file are relative to the hom file.  Coordinates are scalar
strings, "num/den" over Q and "r mod p" over F_p; plain integers and
"num/den" strings are accepted everywhere.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Optional

from .algebra import Algebra, AlgebraHom, ValidationError
from .exactlin import FieldSpec

__all__ = [
    "FileFormatError",
    "algebra_to_dict",
    "algebra_from_dict",
    "hom_to_dict",
    "hom_from_dict",
    "load_algebra",
    "save_algebra",
    "load_hom",
    "save_hom",
    "dumps",
    "SPEC_REPORT_SCHEMA",
    "ANALYSIS_REPORT_SCHEMA",
    "FUZZ_RECORD_SCHEMA",
]


class FileFormatError(ValueError):
    """A malformed algebra or hom file; the message says where."""


def _scalar(text, F: FieldSpec, where: str, override: bool):
    try:
        if isinstance(text, bool):
            raise ValueError("booleans are not scalars")
        if isinstance(text, (int, Fraction)):
            return F(text)
        if not isinstance(text, str):
            raise ValueError(f"expected a scalar string, got {type(text).__name__}")
        if override and " mod " in text:
            text = text.partition(" mod ")[0]
        return F.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(f"{where}: bad scalar {text!r} ({exc})") from None


def _vector(v, F, n, where, override):
    if not isinstance(v, list) or len(v) != n:
        raise FileFormatError(f"{where}: expected a list of {n} coordinates")
    return tuple(_scalar(x, F, f"{where}[{k}]", override) for k, x in enumerate(v))


def algebra_to_dict(a: Algebra) -> dict:
    F = a.field
    return {
        "field": str(F),
        "dim": a.dim,
        "basis": list(a.labels),
        "unit": [F.format(x) for x in a.unit],
        "mul": [[[F.format(x) for x in a.mul[i][j]] for j in range(a.dim)] for i in range(a.dim)],
    }


def _field_of(d: dict, field: Optional[FieldSpec]) -> FieldSpec:
    if field is not None:
        return field
    try:
        return FieldSpec.from_string(str(d["field"]))
    except KeyError:
        raise FileFormatError("missing key 'field'") from None
    except ValueError as exc:
        raise FileFormatError(f"field: {exc}") from None


def algebra_from_dict(d: dict, field: Optional[FieldSpec] = None, validate: bool = True) -> Algebra:
    """Parse and validate; ``field`` overrides the file's field (reducing scalars)."""
    if not isinstance(d, dict):
        raise FileFormatError("an algebra file must hold a JSON object")
    F = _field_of(d, field)
    override = field is not None
    for key in ("dim", "unit", "mul"):
        if key not in d:
            raise FileFormatError(f"missing key {key!r}")
    n = d["dim"]
    if not isinstance(n, int) or n < 1:
        raise FileFormatError("dim: expected a positive integer")
    labels = d.get("basis") or [f"b{i}" for i in range(n)]
    if len(labels) != n:
        raise FileFormatError(f"basis: {len(labels)} labels for dimension {n}")
    unit = _vector(d["unit"], F, n, "unit", override)
    rows = d["mul"]
    if not isinstance(rows, list) or len(rows) != n:
        raise FileFormatError(f"mul: expected {n} rows")
    mul = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"mul[{i}]: expected {n} entries")
        mul.append([_vector(v, F, n, f"mul[{i}][{j}]", override) for j, v in enumerate(row)])
    return Algebra(F, mul, unit, labels, validate=validate)


def hom_to_dict(f: AlgebraHom, source_path: str, target_path: str) -> dict:
    F = f.target.field
    return {
        "source": source_path,
        "target": target_path,
        "matrix": [[F.format(x) for x in row] for row in f.matrix],
    }


def hom_from_dict(d: dict, source: Algebra, target: Algebra, validate: bool = True,
                  override: bool = False) -> AlgebraHom:
    if "matrix" not in d:
        raise FileFormatError("missing key 'matrix'")
    m = d["matrix"]
    if not isinstance(m, list) or len(m) != target.dim:
        raise FileFormatError(f"matrix: expected {target.dim} rows (target dimension)")
    F = target.field
    rows = [_vector(r, F, source.dim, f"matrix[{i}]", override) for i, r in enumerate(m)]
    return AlgebraHom.from_matrix(source, target, rows, validate=validate)


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_algebra(path: str, field: Optional[FieldSpec] = None) -> Algebra:
    d = _read_json(path)
    try:
        return algebra_from_dict(d, field)
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def load_hom(path: str, field: Optional[FieldSpec] = None) -> AlgebraHom:
    d = _read_json(path)
    if not isinstance(d, dict) or "source" not in d or "target" not in d:
        raise FileFormatError(f"{path}: a hom file needs 'source' and 'target' paths")
    base = os.path.dirname(os.path.abspath(path))
    source = load_algebra(os.path.join(base, d["source"]), field)
    target = load_algebra(os.path.join(base, d["target"]), field)
    try:
        return hom_from_dict(d, source, target, override=field is not None)
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def save_algebra(a: Algebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(algebra_to_dict(a)))


def save_hom(f: AlgebraHom, path: str, source_path: str, target_path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(hom_to_dict(f, source_path, target_path)))


# --------------------------------------------------------------------------
# Report schemas (JSON Schema, draft 2020-12)

_IDEAL = {
    "type": "object",
    "required": ["basis", "text"],
    "properties": {
        "basis": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "text": {"type": "string"},
    },
}

_PRIME = {
    "type": "object",
    "required": ["basis", "text", "quotient_dim"],
    "properties": dict(_IDEAL["properties"], quotient_dim={"type": "integer", "minimum": 1}),
}

_FLAG_NAMES = [
    "single_valued",
    "continuous",
    "condition_2prime",
    "adjoint",
    "prime_pair_criterion",
    "nearly_centralizing_primes",
    "nearly_centralizing_ideals",
    "centralizing",
    "lying_over",
]

_FLAGS = {
    "type": "object",
    "required": _FLAG_NAMES,
    "properties": {k: {"type": "boolean"} for k in _FLAG_NAMES},
    "additionalProperties": False,
}

SPEC_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "prime spectrum report",
    "type": "object",
    "required": ["field", "dim", "radical", "primes", "closed_sets"],
    "properties": {
        "field": {"type": "string"},
        "dim": {"type": "integer", "minimum": 1},
        "radical": _IDEAL,
        "primes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["basis", "text", "quotient_dim", "goldie_rank"],
                "properties": dict(_PRIME["properties"], goldie_rank={"type": "integer", "minimum": 1}),
            },
        },
        "closed_sets": {"type": "integer", "minimum": 1},
    },
}

ANALYSIS_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "homomorphism analysis report",
    "type": "object",
    "required": [
        "spec_S", "spec_R", "correspondence", "flags", "t_values", "witnesses",
        "consistent", "inconsistencies",
    ],
    "properties": {
        "spec_S": {"type": "array", "items": _PRIME},
        "spec_R": {"type": "array", "items": _PRIME},
        "correspondence": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "flags": _FLAGS,
        "t_values": {"type": "array", "items": {"type": ["integer", "null"], "minimum": 1}},
        "witnesses": {
            "type": "object",
            "propertyNames": {"enum": _FLAG_NAMES},
        },
        "consistent": {"type": "boolean"},
        "inconsistencies": {"type": "array", "items": {"type": "string"}},
    },
}

FUZZ_RECORD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "fuzz record",
    "type": "object",
    "required": ["seed", "flags", "consistency", "timing"],
    "properties": {
        "seed": {"type": "integer"},
        "field": {"type": "string"},
        "kind": {"type": "string"},
        "description": {"type": "string"},
        "dims": {"type": "array", "items": {"type": "integer"}},
        "flags": _FLAGS,
        "consistency": {"type": "boolean"},
        "failures": {"type": "array", "items": {"type": "string"}},
        "timing": {"type": "number", "minimum": 0},
    },
}
