"""Input-file parsing with eager validation.

Every loader raises InputParseError with a field-level diagnostic before any
computation starts; structural validation (Latin squares, Jacobi identity,
identity matrices in representation tables) is delegated to the domain
constructors and their messages are wrapped with the file context.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import InputParseError, RepkitError
from .groups import CircleGroup, FiniteGroup, SU2Group
from .lie_algebras import LieAlgebraSpec
from .representations import (
    CircleWeightRepresentation,
    ConjugatedRepresentation,
    DirectSumRepresentation,
    FiniteTableRepresentation,
    SpinRepresentation,
)
from .serialize import matrix_from_json


def _read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputParseError(f"{path}: cannot read file ({exc})")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}")
    if not isinstance(data, dict):
        raise InputParseError(f"{path}: top-level value must be an object")
    return data


def _require(data: dict, key: str, context: str):
    if key not in data:
        raise InputParseError(f"{context}: missing required field {key!r}")
    return data[key]


def load_group(path):
    """Parse a group file: finite multiplication table, circle, or su2."""
    data = _read_json(path)
    kind = _require(data, "kind", str(path))
    if kind == "circle":
        return CircleGroup()
    if kind == "su2":
        return SU2Group()
    if kind != "finite":
        raise InputParseError(f"{path}: unknown group kind {kind!r}")
    table = _require(data, "mult_table", str(path))
    try:
        return FiniteGroup(
            table,
            identity=data.get("identity"),
            inverse=data.get("inverse"),
            labels=data.get("labels"),
            name=data.get("name"),
        )
    except (ValueError, TypeError) as exc:
        raise InputParseError(f"{path}: {exc}")


def load_algebra(path) -> LieAlgebraSpec:
    """Parse a Lie algebra file: dimension plus sparse structure constants.

    Constants are given as [alpha, beta, k, value] rows with alpha < beta;
    the antisymmetric completion is applied on load.
    """
    data = _read_json(path)
    context = str(path)
    dim = _require(data, "dim", context)
    if not isinstance(dim, int) or dim < 1:
        raise InputParseError(f"{context}: 'dim' must be a positive integer, got {dim!r}")
    entries = _require(data, "structure_constants", context)
    c = np.zeros((dim, dim, dim))
    for row_no, row in enumerate(entries):
        if not isinstance(row, (list, tuple)) or len(row) != 4:
            raise InputParseError(
                f"{context}: structure_constants[{row_no}] must be [alpha, beta, k, value]")
        a, b, k, value = row
        if not all(isinstance(i, int) for i in (a, b, k)):
            raise InputParseError(f"{context}: structure_constants[{row_no}]: indices must be integers")
        if not (0 <= a < dim and 0 <= b < dim and 0 <= k < dim):
            raise InputParseError(f"{context}: structure_constants[{row_no}]: index outside 0..{dim - 1}")
        if not a < b:
            raise InputParseError(
                f"{context}: structure_constants[{row_no}]: requires alpha < beta "
                "(the antisymmetric half is filled in automatically)")
        c[a, b, k] += float(value)
        c[b, a, k] -= float(value)
    try:
        return LieAlgebraSpec(c, labels=data.get("labels"))
    except ValueError as exc:
        raise InputParseError(f"{context}: {exc}")


def load_representation(source, group):
    """Parse a representation file (or already-decoded object) against the
    group it is declared over."""
    if isinstance(source, dict):
        data, context = source, "representation"
    else:
        data, context = _read_json(source), str(source)
    return _rep_from_data(data, group, context)


def _rep_from_data(data: dict, group, context: str):
    kind = _require(data, "kind", context)
    try:
        if kind == "finite_table":
            matrices = _require(data, "matrices", context)
            if not isinstance(matrices, list):
                raise InputParseError(f"{context}: 'matrices' must be a list of matrices")
            table = np.stack([matrix_from_json(m, what=f"{context}: matrices[{i}]")
                              for i, m in enumerate(matrices)])
            return FiniteTableRepresentation(group, table)
        if kind == "circle_weights":
            return CircleWeightRepresentation(group, _require(data, "weights", context))
        if kind == "su2_spin":
            two_j = _require(data, "two_j", context)
            if not isinstance(two_j, int):
                raise InputParseError(f"{context}: 'two_j' must be an integer")
            return SpinRepresentation(group, two_j)
        if kind == "direct_sum":
            parts = _require(data, "parts", context)
            if not isinstance(parts, list) or len(parts) < 2:
                raise InputParseError(f"{context}: 'parts' must list at least two representations")
            return DirectSumRepresentation(
                [_rep_from_data(p, group, f"{context}: parts[{i}]") for i, p in enumerate(parts)])
        if kind == "conjugate":
            inner = _rep_from_data(_require(data, "inner", context), group, f"{context}: inner")
            A = matrix_from_json(_require(data, "matrix", context), what=f"{context}: matrix")
            return ConjugatedRepresentation(inner, A)
    except InputParseError:
        raise
    except (RepkitError, ValueError, TypeError) as exc:
        raise InputParseError(f"{context}: {exc}")
    raise InputParseError(f"{context}: unknown representation kind {kind!r}")


__all__ = ["load_group", "load_algebra", "load_representation"]
