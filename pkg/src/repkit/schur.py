"""Commutants, intertwiners, irreducibility, block splitting and the
orthogonality integrals.

The workhorse is group averaging: T(A) = integral of rho(x) A sigma(x^-1) is
an intertwiner for any seed matrix A, and averaging the full elementary
matrix basis projects onto the commutant.  Scalar commutant (dimension one)
is the irreducibility criterion; a non-scalar commutant element is Hermitian
up to splitting into parts, and its eigenspaces are invariant subspaces
along which reducible representations are split into blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    AlreadyIrreducibleError,
    GroupMismatchError,
    NonIntegerMultiplicityError,
    NotIrreducibleError,
    RuleMismatchError,
    ShapeMismatchError,
)
from .groups import HaarRule, integrate_stacked, integrate_values
from .representations import (
    BlockRepresentation,
    Character,
    FiniteTableRepresentation,
    Representation,
    character,
    unitarity_audit,
)
from .unitarization import unitarize

RANK_TOL = 1e-7
UNITARY_TOL = 1e-8
EIGENVALUE_GAP = 1e-6
MULTIPLICITY_WINDOW = 0.05


def _check_groups(rule: HaarRule, *reps: Representation) -> None:
    for rep in reps:
        if rep.group != rule.group:
            raise GroupMismatchError("representation and rule are defined over different groups")


def averaged_intertwiner(phi: Representation, psi: Representation, A, rule: HaarRule) -> np.ndarray:
    """T = integral of phi(x) A psi(x^-1): intertwines phi and psi.

    Between non-equivalent irreducibles the result vanishes for every seed A;
    for phi = psi irreducible it is tr(A)/degree times the identity.
    """
    if phi.group != psi.group:
        raise GroupMismatchError("the two representations live over different groups")
    _check_groups(rule, phi)
    A = linalg.as_matrix(A)
    if A.shape != (phi.degree, psi.degree):
        raise ShapeMismatchError(f"seed matrix must be {phi.degree}x{psi.degree}, got {A.shape}")
    phis = phi.evaluate_batch(rule.nodes)
    psis_inv = psi.evaluate_batch(rule.group.invert_nodes(rule.nodes))
    return integrate_stacked(rule, phis @ A[None] @ psis_inv)


@dataclass(frozen=True, eq=False)
class CommutantReport:
    """Orthonormal basis (Frobenius) of matrices commuting with the whole
    representation, with the worst commutation defect over the rule nodes."""

    dimension: int
    basis: list[np.ndarray]
    max_residual: float

    def to_json_dict(self) -> dict:
        from .serialize import matrix_to_json
        return {
            "dimension": self.dimension,
            "basis": [matrix_to_json(B) for B in self.basis],
            "max_residual": self.max_residual,
        }


def commutant(rep: Representation, rule: HaarRule, *, rank_tol: float = RANK_TOL) -> CommutantReport:
    """Project every elementary matrix onto the commutant by averaging and
    extract a linearly independent orthonormal basis of the results."""
    _check_groups(rule, rep)
    r = rep.degree
    mats = rep.evaluate_batch(rule.nodes)
    mats_inv = rep.evaluate_batch(rule.group.invert_nodes(rule.nodes))
    rows = np.empty((r * r, r * r), dtype=complex)
    for k in range(r):
        for l in range(r):
            # rho(x) E_kl rho(x^-1) has entries rho_ik * rhoinv_lj
            stacked = mats[:, :, k][:, :, None] * mats_inv[:, l, :][:, None, :]
            rows[k * r + l] = integrate_stacked(rule, stacked).reshape(-1)
    _, s, Vh = np.linalg.svd(rows)
    rank = int(np.sum(s > rank_tol * s[0])) if s.size and s[0] > 0 else 0
    basis = [Vh[i].reshape(r, r) for i in range(rank)]
    residual = 0.0
    for B in basis:
        residual = max(residual, linalg.max_abs(mats @ B[None] - B[None] @ mats))
    return CommutantReport(dimension=rank, basis=basis, max_residual=residual)


def _ensure_unitary(rep: Representation, rule: HaarRule):
    """Return (unitary rep, basis change, inverse); the identity change when
    the input is already unitary on the rule nodes."""
    if unitarity_audit(rep, rule) <= UNITARY_TOL:
        eye = np.eye(rep.degree, dtype=complex)
        return rep, eye, eye
    result = unitarize(rep, rule)
    A = result.basis_change
    return result.unitary_rep, A, linalg.invert(A)


def irreducibility_test(rep: Representation, rule: HaarRule) -> bool:
    """Scalar-commutant criterion; non-unitary input is unitarized first."""
    work, _, _ = _ensure_unitary(rep, rule)
    return commutant(work, rule).dimension == 1


def _eigen_clusters(w: np.ndarray, gap: float) -> list[tuple[int, int]]:
    """Contiguous index ranges of ascending eigenvalues separated by more
    than ``gap``."""
    ranges = []
    start = 0
    for i in range(1, len(w)):
        if w[i] - w[i - 1] > gap:
            ranges.append((start, i))
            start = i
    ranges.append((start, len(w)))
    return ranges


def _splitting_eigensystem(report: CommutantReport, r: int):
    """Eigen-decomposition of a non-scalar Hermitian commutant element.

    Takes the first commutant basis element whose Hermitian part (or
    i times the anti-Hermitian part, whichever deviates more from a scalar)
    has at least two eigenvalue clusters; returns (eigenvalues, vectors,
    cluster ranges) or None when every element is effectively scalar.
    """
    eye = np.eye(r)
    for T in report.basis:
        herm = (T + T.conj().T) / 2.0
        anti = (T - T.conj().T) / 2j
        scored = []
        for H in (herm, anti):
            scored.append((linalg.max_abs(H - (np.trace(H) / r) * eye), H))
        scored.sort(key=lambda pair: pair[0], reverse=True)
        deviation, H = scored[0]
        if deviation <= EIGENVALUE_GAP:
            continue
        w, V = linalg.hermitian_eigensystem(H)
        clusters = _eigen_clusters(w, EIGENVALUE_GAP)
        if len(clusters) >= 2:
            return w, V, clusters
    return None


def _materialize_blocks(rep: Representation, P: np.ndarray, P_inv: np.ndarray,
                        sizes: list[int]) -> list[Representation]:
    """Diagonal blocks of P rho P^-1 as representations: explicit tables over
    finite groups, block projections of the parent otherwise."""
    blocks = []
    if rep.group.kind == "finite":
        full = P[None] @ rep.evaluate_batch(np.arange(rep.group.order)) @ P_inv[None]
        offset = 0
        for size in sizes:
            sl = slice(offset, offset + size)
            blocks.append(FiniteTableRepresentation(rep.group, full[:, sl, sl]))
            offset += size
    else:
        offset = 0
        for size in sizes:
            blocks.append(BlockRepresentation(rep, P, offset, size, P_inv=P_inv))
            offset += size
    return blocks


def split_once(rep: Representation, rule: HaarRule):
    """Split a reducible representation into two invariant blocks.

    Returns (P, (part_a, part_b)) with P rho(x) P^-1 block-diagonal.  P is
    unitary when the input already was; otherwise it includes the
    unitarization change of basis.  Raises AlreadyIrreducibleError when the
    commutant is scalar.
    """
    _check_groups(rule, rep)
    work, base, base_inv = _ensure_unitary(rep, rule)
    report = commutant(work, rule)
    if report.dimension < 2:
        raise AlreadyIrreducibleError("representation has a scalar commutant")
    eigensystem = _splitting_eigensystem(report, work.degree)
    if eigensystem is None:
        raise AlreadyIrreducibleError("no non-scalar commutant element found")
    _, V, clusters = eigensystem
    first = clusters[0][1] - clusters[0][0]
    P = V.conj().T @ base
    P_inv = base_inv @ V
    parts = _materialize_blocks(rep, P, P_inv, [first, rep.degree - first])
    return P, (parts[0], parts[1])


def _split_unitary_fully(work: Representation, rule: HaarRule):
    """Recursive splitting of a unitary representation; returns (Q, sizes)
    with Q unitary and Q work Q^-1 block-diagonal, every block irreducible."""
    report = commutant(work, rule)
    if report.dimension == 1:
        return np.eye(work.degree, dtype=complex), [work.degree]
    eigensystem = _splitting_eigensystem(report, work.degree)
    if eigensystem is None:
        return np.eye(work.degree, dtype=complex), [work.degree]
    _, V, clusters = eigensystem
    Vh = V.conj().T
    q_blocks = []
    sizes: list[int] = []
    for start, stop in clusters:
        sub = BlockRepresentation(work, Vh, start, stop - start, P_inv=V)
        Q_sub, sub_sizes = _split_unitary_fully(sub, rule)
        q_blocks.append(Q_sub)
        sizes.extend(sub_sizes)
    Q = np.zeros((work.degree, work.degree), dtype=complex)
    offset = 0
    for block in q_blocks:
        d = block.shape[0]
        Q[offset:offset + d, offset:offset + d] = block
        offset += d
    return Q @ Vh, sizes


@dataclass(frozen=True, eq=False)
class DecompositionReport:
    """A full splitting into irreducible blocks: the combined change of
    basis, the blocks, their characters, and the worst off-block leakage of
    P rho(x) P^-1 over the rule nodes."""

    P: np.ndarray
    blocks: list[Representation]
    block_characters: list[Character]
    residual: float

    def to_json_dict(self) -> dict:
        from .serialize import complex_list_to_json, matrix_to_json
        return {
            "P": matrix_to_json(self.P),
            "block_degrees": [b.degree for b in self.blocks],
            "block_characters": [complex_list_to_json(c.values) for c in self.block_characters],
            "residual": self.residual,
        }


def decompose(rep: Representation, rule: HaarRule) -> DecompositionReport:
    """Unitarize, then split recursively until every block is irreducible."""
    _check_groups(rule, rep)
    result = unitarize(rep, rule)
    Q, sizes = _split_unitary_fully(result.unitary_rep, rule)
    P = Q @ result.basis_change
    P_inv = linalg.invert(P)
    blocks = _materialize_blocks(rep, P, P_inv, sizes)
    block_chars = [character(b, rule) for b in blocks]

    full = P[None] @ rep.evaluate_batch(rule.nodes) @ P_inv[None]
    mask = np.ones((rep.degree, rep.degree), dtype=bool)
    offset = 0
    for size in sizes:
        mask[offset:offset + size, offset:offset + size] = False
        offset += size
    residual = float(np.abs(full[:, mask]).max()) if mask.any() else 0.0
    return DecompositionReport(P=P, blocks=blocks, block_characters=block_chars, residual=residual)


def character_inner(c1: Character, c2: Character, rule: HaarRule) -> complex:
    """Integral of c1 times the conjugate of c2 over the rule."""
    if not (c1.rule.same_rule(rule) and c2.rule.same_rule(rule)):
        raise RuleMismatchError("characters were sampled over a different Haar rule")
    return integrate_values(rule, c1.values * np.conj(c2.values))


def orthogonality_audit(reps, rule: HaarRule) -> np.ndarray:
    """Residual matrix |<chi_i, chi_j> - delta_ij| over irreducible
    representations; raises NotIrreducibleError if any input fails the
    scalar-commutant test."""
    reps = list(reps)
    _check_groups(rule, *reps)
    for i, rep in enumerate(reps):
        if not irreducibility_test(rep, rule):
            raise NotIrreducibleError(f"representation {i} is not irreducible")
    chars = [character(rep, rule) for rep in reps]
    n = len(reps)
    residual = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            inner = character_inner(chars[i], chars[j], rule)
            residual[i, j] = abs(inner - (1.0 if i == j else 0.0))
    return residual


def matrix_element_audit(rep: Representation, rule: HaarRule) -> float:
    """Largest deviation of integral of rho_ij conj(rho_kl) from the scalar
    orthogonality pattern delta_ik delta_jl / degree, over all index
    quadruples of an irreducible unitary representation."""
    _check_groups(rule, rep)
    if not irreducibility_test(rep, rule):
        raise NotIrreducibleError("matrix-element orthogonality requires an irreducible input")
    r = rep.degree
    flat = rep.evaluate_batch(rule.nodes).reshape(rule.node_count, r * r)
    worst = 0.0
    for p in range(r * r):
        stacked = (flat[:, p][:, None] * np.conj(flat))[:, None, :]
        row = integrate_stacked(rule, stacked)[0]
        target = np.zeros(r * r)
        target[p] = 1.0 / r
        worst = max(worst, float(np.abs(row - target).max()))
    return worst


def multiplicity(rep: Representation, irrep: Representation, rule: HaarRule) -> int:
    """Nearest integer to <chi_rep, chi_irrep>; raises when the inner product
    is further than 0.05 from an integer (an under-resolved rule)."""
    _check_groups(rule, rep, irrep)
    if not irreducibility_test(irrep, rule):
        raise NotIrreducibleError("multiplicity requires an irreducible reference representation")
    inner = character_inner(character(rep, rule), character(irrep, rule), rule)
    nearest = int(round(inner.real))
    if abs(inner - nearest) > MULTIPLICITY_WINDOW or nearest < 0:
        raise NonIntegerMultiplicityError(
            f"character inner product {inner:.6f} is not close to a non-negative integer")
    return nearest
