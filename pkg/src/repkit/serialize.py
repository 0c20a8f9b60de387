"""JSON conversions for complex-valued payloads.

Complex numbers travel as [re, im] pairs and matrices as nested lists of
those pairs; floats keep full precision (shortest round-trip repr), so a
report serialized twice from the same data is byte-identical.
"""

from __future__ import annotations

import numpy as np

from .errors import InputParseError


def complex_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def complex_list_to_json(values) -> list:
    return [complex_to_json(z) for z in np.asarray(values).ravel()]


def matrix_to_json(m) -> list:
    m = np.asarray(m, dtype=complex)
    return [[complex_to_json(z) for z in row] for row in m]


def real_matrix_to_json(m) -> list:
    return [[float(x) for x in row] for row in np.asarray(m, dtype=float)]


def matrix_from_json(data, *, what: str = "matrix") -> np.ndarray:
    """Parse a [[ [re, im], ... ], ...] nested list into a complex matrix."""
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputParseError(f"{what}: entries must be numeric [re, im] pairs ({exc})")
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise InputParseError(f"{what}: expected rows of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]
