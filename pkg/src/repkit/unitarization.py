"""Group averaging: invariant Hermitian forms and unitarization.

Averaging the standard inner product over the group produces a positive
definite Hermitian form H invariant under the representation; the Cholesky
factor A of H (H = A* A) is a change of basis after which the representation
is unitary.  The same averaging, applied to a full Hermitian basis, yields
the space of *all* invariant Hermitian forms; its real dimension d is the
uniqueness certificate reported by ``specialness_report`` (d = 1 means the
invariant form, hence the equivalent unitary representation, is unique up to
scale).

Compactness is what makes the averaging exist.  The classic counterexample
to keep in mind is the 2x2 representation A -> [[1, log|det A|], [0, 1]] of
the general linear group: reducible, yet no basis change makes it unitary or
splits the invariant line off, because a non-compact group admits no
normalized invariant integral to average with.  That is why only the compact
group kinds are supported here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import GroupMismatchError, NotPositiveDefiniteError
from .groups import HaarRule, integrate_stacked
from .representations import Representation, conjugate, unitarity_audit

RANK_TOL = 1e-7


@dataclass(frozen=True, eq=False)
class HermitianForm:
    """A Hermitian Gram matrix with its smallest eigenvalue; the averaged
    form additionally records its invariance defect over the rule nodes."""

    gram: np.ndarray
    definiteness: float
    invariance_residual: float | None = None


@dataclass(frozen=True, eq=False)
class UnitarizationResult:
    basis_change: np.ndarray
    unitary_rep: Representation
    invariance_residual: float
    unitarity_residual: float


def _check_rule(rep: Representation, rule: HaarRule) -> None:
    if rep.group != rule.group:
        raise GroupMismatchError("representation and rule are defined over different groups")


def averaged_form(rep: Representation, rule: HaarRule, *,
                  definiteness_tol: float = linalg.STRUCTURAL_TOL) -> HermitianForm:
    """H = integral of rho(x)* rho(x): an invariant positive definite form.

    Raises NotPositiveDefiniteError if the average fails to be positive
    definite, which signals a broken input or an under-resolved rule rather
    than a numerical accident.
    """
    _check_rule(rep, rule)
    mats = rep.evaluate_batch(rule.nodes)
    H = integrate_stacked(rule, mats.conj().transpose(0, 2, 1) @ mats)
    H = (H + H.conj().T) / 2.0
    w = np.linalg.eigvalsh(H)
    if w[0] <= definiteness_tol:
        raise NotPositiveDefiniteError(
            f"averaged form has smallest eigenvalue {w[0]:.3e}; "
            "the input is not a representation or the rule is under-resolved")
    residual = linalg.max_abs(mats.conj().transpose(0, 2, 1) @ H[None] @ mats - H[None])
    return HermitianForm(gram=H, definiteness=float(w[0]), invariance_residual=residual)


def unitarize(rep: Representation, rule: HaarRule) -> UnitarizationResult:
    """Change basis by the Cholesky factor of the averaged form so the
    representation becomes unitary; the character is untouched."""
    form = averaged_form(rep, rule)
    A = linalg.cholesky_hermitian(form.gram)
    unitary_rep = conjugate(rep, A)
    return UnitarizationResult(
        basis_change=A,
        unitary_rep=unitary_rep,
        invariance_residual=form.invariance_residual,
        unitarity_residual=unitarity_audit(unitary_rep, rule),
    )


def hermitian_basis(r: int) -> list[np.ndarray]:
    """Orthonormal (Frobenius) real basis of the r x r Hermitian matrices."""
    basis = []
    for i in range(r):
        D = np.zeros((r, r), dtype=complex)
        D[i, i] = 1.0
        basis.append(D)
    s = 1.0 / np.sqrt(2.0)
    for i in range(r):
        for j in range(i + 1, r):
            S = np.zeros((r, r), dtype=complex)
            S[i, j] = S[j, i] = s
            basis.append(S)
            A = np.zeros((r, r), dtype=complex)
            A[i, j] = 1j * s
            A[j, i] = -1j * s
            basis.append(A)
    return basis


def hermitian_coords(H: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    return np.array([np.trace(B.conj().T @ H).real for B in basis])


def coords_to_hermitian(v: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    out = np.zeros_like(basis[0])
    for coeff, B in zip(v, basis):
        out = out + coeff * B
    return out


def invariant_form_space(rep: Representation, rule: HaarRule, *,
                         rank_tol: float = RANK_TOL) -> tuple[list[HermitianForm], int]:
    """Real basis of the Hermitian matrices H with rho(x)* H rho(x) = H.

    Computed as the fixed space of the averaging map B -> integral of
    rho* B rho, i.e. the nullspace of (averaging - identity) on Hermitian
    coordinates, with singular values below ``rank_tol`` times the largest
    treated as zero.
    """
    _check_rule(rep, rule)
    r = rep.degree
    basis = hermitian_basis(r)
    mats = rep.evaluate_batch(rule.nodes)
    conj_t = mats.conj().transpose(0, 2, 1)
    L = np.empty((r * r, r * r))
    for q, B in enumerate(basis):
        avg = integrate_stacked(rule, conj_t @ B[None] @ mats)
        avg = (avg + avg.conj().T) / 2.0
        L[:, q] = hermitian_coords(avg, basis)
    defect = L - np.eye(r * r)
    # the averaging map has unit scale, so rank decisions are cut off at
    # rank_tol * max(1, |defect|); a pure-noise defect means every form is fixed
    smax = float(np.linalg.svd(defect, compute_uv=False)[0])
    if smax <= rank_tol:
        null_vecs = [row for row in np.eye(r * r)]
    else:
        null_vecs = linalg.solve_nullspace(defect, rank_tol * max(1.0, smax) / smax)
    forms = []
    for v in null_vecs:
        H = coords_to_hermitian(np.real(v), basis)
        w = np.linalg.eigvalsh(H)
        forms.append(HermitianForm(gram=H, definiteness=float(w[0])))
    return forms, len(forms)


@dataclass(frozen=True, eq=False)
class SpecialnessReport:
    """Uniqueness certificate for the invariant form: d is the real dimension
    of the invariant-form space and special means d == 1."""

    d: int
    special: bool
    unitarization: UnitarizationResult
    form_basis: list[HermitianForm]


def specialness_report(rep: Representation, rule: HaarRule) -> SpecialnessReport:
    forms, d = invariant_form_space(rep, rule)
    return SpecialnessReport(d=d, special=(d == 1), unitarization=unitarize(rep, rule),
                             form_basis=forms)
