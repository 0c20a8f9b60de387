"""Default probe and shift inventories for the Haar-axiom audit.

Finite groups get exponential index functions (any probe works there: the
uniform average is exactly translation invariant), the circle gets the
trigonometric monomials up to degree eight, and su2 gets the matrix entries
of the spin-1/2 and spin-1 representations.
"""

from __future__ import annotations

import numpy as np

from .errors import KindMismatchError
from .groups import enumerate_or_sample
from .representations import MatrixEntryProbe, spin_irrep

SHIFT_SEED = 7


class ExpIndexProbe:
    """f(k) = exp(2 pi i m k / N) on the element indices of a finite group."""

    def __init__(self, m: int, order: int):
        self.m = m
        self.order = order
        self.label = f"exp({m}k)"

    def __call__(self, k):
        return np.exp(2j * np.pi * self.m * int(k) / self.order)

    def batch(self, nodes):
        return np.exp(2j * np.pi * self.m * np.asarray(nodes, dtype=int) / self.order)


class TrigProbe:
    """f(theta) = exp(i k theta) on the circle."""

    def __init__(self, k: int):
        self.k = k
        self.label = f"exp({k}i theta)"

    def __call__(self, theta):
        return np.exp(1j * self.k * float(theta))

    def batch(self, nodes):
        return np.exp(1j * self.k * np.asarray(nodes, dtype=float))


def standard_probes(group, *, max_degree: int = 8) -> list:
    if group.kind == "finite":
        return [ExpIndexProbe(m, group.order) for m in range(min(group.order, 4))]
    if group.kind == "circle":
        return [TrigProbe(k) for k in range(-max_degree, max_degree + 1)]
    if group.kind == "su2":
        probes = []
        for two_j in (1, 2):
            rep = spin_irrep(two_j / 2.0, group)
            for i in range(rep.degree):
                for j in range(rep.degree):
                    probes.append(MatrixEntryProbe(rep, i, j, label=f"spin(2j={two_j})[{i},{j}]"))
        return probes
    raise KindMismatchError(f"unsupported group kind {group.kind!r}")


def standard_shifts(group, count: int = 4, seed: int = SHIFT_SEED) -> list:
    if group.kind == "finite":
        return group.elements() if group.order <= 8 else list(
            np.random.default_rng(seed).integers(0, group.order, size=count))
    if group.kind == "circle":
        return [0.5, 1.25, 2 * np.pi / 7.0, 4.0][:max(1, count)]
    return enumerate_or_sample(group, count, seed=seed)
