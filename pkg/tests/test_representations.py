import numpy as np
import pytest

import repkit as rk

from conftest import random_invertible


@pytest.fixture(scope="module")
def circle_rule(circle):
    return rk.haar_rule(circle, 32)


# --- evaluation --------------------------------------------------------------

def test_trivial_circle_rep(circle):
    rep = rk.CircleWeightRepresentation(circle, [0])
    for theta in (0.0, 1.0, np.pi):
        assert np.abs(rep.evaluate(theta) - np.eye(1)).max() == 0.0


def test_circle_weights_at_pi(circle):
    rep = rk.CircleWeightRepresentation(circle, [1, -1])
    out = rep.evaluate(np.pi)
    assert np.abs(out - np.diag([-1.0, -1.0])).max() <= 1e-12


def test_spin_half_at_identity(su2):
    rep = rk.spin_irrep(0.5, su2)
    assert np.abs(rep.evaluate(np.eye(2)) - np.eye(2)).max() == 0.0


def test_spin_half_is_defining_rep(su2):
    rep = rk.spin_irrep(0.5, su2)
    for U in rk.enumerate_or_sample(su2, 5, seed=1):
        assert np.abs(rep.evaluate(U) - U).max() <= 1e-15


def test_spin_zero_is_trivial(su2, su2_rule):
    rep = rk.spin_irrep(0, su2)
    assert rep.degree == 1
    mats = rep.evaluate_batch(su2_rule.nodes)
    assert np.abs(mats - 1.0).max() <= 1e-15


def test_spin_out_of_range(su2):
    with pytest.raises(rk.SpinOutOfRangeError):
        rk.spin_irrep(7, su2)
    with pytest.raises(rk.SpinOutOfRangeError):
        rk.spin_irrep(0.3, su2)
    with pytest.raises(rk.SpinOutOfRangeError):
        rk.spin_irrep(-0.5, su2)


def test_finite_table_requires_identity_matrix(z2):
    bad = np.stack([2 * np.eye(2), np.eye(2)]).astype(complex)
    with pytest.raises(ValueError, match="identity"):
        rk.FiniteTableRepresentation(z2, bad)


def test_evaluate_kind_mismatch(su2):
    rep = rk.spin_irrep(1, su2)
    with pytest.raises(rk.KindMismatchError):
        rep.evaluate(3)


# --- homomorphism audit ------------------------------------------------------

def test_homomorphism_audit_exact_table(s3):
    rep = rk.s3_standard(s3)
    assert rk.homomorphism_audit(rep) <= 1e-12


def test_homomorphism_audit_su2_spin(su2):
    rep = rk.spin_irrep(1, su2)
    assert rk.homomorphism_audit(rep, 200) <= 1e-8


def test_homomorphism_audit_detects_corruption(z3):
    omega = np.exp(2j * np.pi / 3)
    table = np.stack([np.diag([omega ** k]) for k in range(3)])
    table[1] = 2 * np.eye(1)  # corrupt one entry
    rep = rk.FiniteTableRepresentation(z3, table)
    assert rk.homomorphism_audit(rep) >= 0.5


# --- combinators -------------------------------------------------------------

def test_direct_sum_trivial(z2):
    triv = rk.FiniteTableRepresentation(z2, np.stack([np.eye(1)] * 2).astype(complex))
    summed = rk.direct_sum(triv, triv)
    for g in z2.elements():
        assert np.abs(summed.evaluate(g) - np.eye(2)).max() == 0.0


def test_direct_sum_z3_weights(z3):
    rep = rk.direct_sum(rk.cyclic_phase_rep(z3, [1]), rk.cyclic_phase_rep(z3, [2]))
    omega = np.exp(2j * np.pi / 3)
    assert np.abs(rep.evaluate(1) - np.diag([omega, omega ** 2])).max() <= 1e-15


def test_direct_sum_character_adds(s3):
    rule = rk.haar_rule(s3, 1)
    a, b = rk.s3_standard(s3), rk.s3_sign(s3)
    cs = rk.character(rk.direct_sum(a, b), rule).values
    ca = rk.character(a, rule).values
    cb = rk.character(b, rule).values
    assert np.abs(cs - (ca + cb)).max() == 0.0


def test_direct_sum_group_mismatch(z2, z3):
    a = rk.FiniteTableRepresentation(z2, np.stack([np.eye(1)] * 2).astype(complex))
    b = rk.FiniteTableRepresentation(z3, np.stack([np.eye(1)] * 3).astype(complex))
    with pytest.raises(rk.GroupMismatchError):
        rk.direct_sum(a, b)


def test_conjugate_identity_noop(su2, su2_rule):
    rep = rk.spin_irrep(1, su2)
    conj = rk.conjugate(rep, np.eye(3))
    U = rk.enumerate_or_sample(su2, 1, seed=2)[0]
    assert np.abs(conj.evaluate(U) - rep.evaluate(U)).max() == 0.0


def test_conjugate_preserves_character(circle, su2, su2_rule):
    rng = np.random.default_rng(8)
    rule = rk.haar_rule(circle, 16)
    rep = rk.CircleWeightRepresentation(circle, [1, -1])
    for _ in range(5):
        A = random_invertible(rng, 2)
        base = rk.character(rep, rule).values
        moved = rk.character(rk.conjugate(rep, A), rule).values
        assert np.abs(base - moved).max() <= 1e-10
    srep = rk.spin_irrep(1, su2)
    A = random_invertible(rng, 3)
    assert np.abs(rk.character(srep, su2_rule).values
                  - rk.character(rk.conjugate(srep, A), su2_rule).values).max() <= 1e-10


def test_conjugate_breaks_unitarity(circle):
    rule = rk.haar_rule(circle, 16)
    rep = rk.CircleWeightRepresentation(circle, [1, -1])
    shear = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert rk.unitarity_audit(rk.conjugate(rep, shear), rule) > 0.1


def test_conjugate_rejects_singular(circle):
    rep = rk.CircleWeightRepresentation(circle, [1, -1])
    with pytest.raises(rk.SingularMatrixError):
        rk.conjugate(rep, np.ones((2, 2)))
    with pytest.raises(rk.ShapeMismatchError):
        rk.conjugate(rep, np.eye(3))


# --- unitarity audit ---------------------------------------------------------

def test_unitarity_audit_circle_weights(circle):
    rule = rk.haar_rule(circle, 16)
    rep = rk.CircleWeightRepresentation(circle, [2, 0, -1])
    assert rk.unitarity_audit(rep, rule) <= 1e-12


@pytest.mark.parametrize("two_j", range(0, 13))
def test_spin_unitarity_all_spins(su2, two_j):
    rule = rk.haar_rule(su2, 6)
    rep = rk.SpinRepresentation(su2, two_j)
    assert rk.unitarity_audit(rep, rule) <= 1e-10


# --- characters --------------------------------------------------------------

def test_character_trivial_rep_constant(circle):
    rule = rk.haar_rule(circle, 8)
    char = rk.character(rk.CircleWeightRepresentation(circle, [0]), rule)
    assert np.abs(char.values - 1.0).max() == 0.0


def test_character_z2_sign(z2):
    rule = rk.haar_rule(z2, 1)
    sign = rk.FiniteTableRepresentation(z2, np.stack([np.eye(1), -np.eye(1)]).astype(complex))
    assert np.allclose(rk.character(sign, rule).values, [1.0, -1.0])


def su2_class_angles(rule):
    traces = np.einsum("nii->n", rule.nodes).real
    return 2.0 * np.arccos(np.clip(traces / 2.0, -1.0, 1.0))


def test_character_spin_half_formula(su2, su2_rule):
    char = rk.character(rk.spin_irrep(0.5, su2), su2_rule)
    t = su2_class_angles(su2_rule)
    assert np.abs(char.values - 2.0 * np.cos(t / 2.0)).max() <= 1e-12


def test_character_spin_one_formula(su2, su2_rule):
    char = rk.character(rk.spin_irrep(1, su2), su2_rule)
    t = su2_class_angles(su2_rule)
    assert np.abs(char.values - (1.0 + 2.0 * np.cos(t))).max() <= 1e-12


def test_character_degree_at_identity(s3, su2, su2_rule):
    rule = rk.haar_rule(s3, 1)
    for rep in rk.s3_irreps(s3):
        char = rk.character(rep, rule)
        assert char.degree == rep.degree
        assert abs(char.values[s3.identity_index] - rep.degree) <= 1e-12


# --- class invariance --------------------------------------------------------

def test_class_invariance_abelian(z3, circle):
    rule = rk.haar_rule(z3, 1)
    rep = rk.cyclic_phase_rep(z3, [1, 2])
    assert rk.class_invariance_audit(rep, rule, z3.elements()) <= 1e-12
    crule = rk.haar_rule(circle, 16)
    crep = rk.CircleWeightRepresentation(circle, [1, -1])
    assert rk.class_invariance_audit(crep, crule, [0.7, 2.1]) <= 1e-12


def test_class_invariance_su2(su2, su2_rule):
    rep = rk.spin_irrep(1, su2)
    shifts = rk.enumerate_or_sample(su2, 8, seed=21)
    assert rk.class_invariance_audit(rep, su2_rule, shifts) <= 1e-8


def test_class_invariance_s3_standard(s3):
    rule = rk.haar_rule(s3, 1)
    rep = rk.s3_standard(s3)
    assert rk.class_invariance_audit(rep, rule, s3.elements()) <= 1e-12


# --- representation invariants across the builtin stock -----------------------

def test_builtin_invariants(s3, su2, circle, su2_rule):
    rule_s3 = rk.haar_rule(s3, 1)
    stock = [(rep, rule_s3) for rep in rk.s3_irreps(s3)]
    stock.append((rk.CircleWeightRepresentation(circle, [3, -2]), rk.haar_rule(circle, 16)))
    stock.append((rk.spin_irrep(1.5, su2), su2_rule))
    for rep, rule in stock:
        ident = rep.evaluate(rep.group.identity_element())
        assert np.abs(ident - np.eye(rep.degree)).max() <= 1e-12
        assert rk.homomorphism_audit(rep, 100) <= 1e-8
