from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cylhecke.coefficient_algebra import ONE, T, MPoly, QSeries, TPoly
from cylhecke.combinatorics import (
    MayaDiagram,
    enumerate_cylindric_brh,
    partitions_in_box,
    weight,
)
from cylhecke.six_vertex import (
    FockVector,
    SparseOperator,
    StateVector,
    abcd_combinatorial,
    abcd_monomials,
    brute_force_row_operator,
    commutator_vanishes,
    complement,
    deterministic_points,
    fermionic_A_coeff,
    fermionic_A_from_e_products,
    fermionic_projection,
    free_fermion_weights,
    h_inverse_identity_defect,
    hecke_weights,
    monodromy_from_r,
    normalized_H_coeff,
    partitions_of_upto,
    project_basis,
    render_row,
    row_configuration,
    rtt_check,
    symbolic_weights,
    transfer_matrix_at,
    transfer_tau_coeff,
    verify_abcd_vs_bruteforce,
    verify_fock_layer,
    windowed_lattice_element,
)

W = symbolic_weights()
w = W.values


def _q(cap=3):
    return QSeries.monomial(ONE, 1, cap)


# ---------------------------------------------------------------- brute-force rows

def test_single_column_rows():
    zero = MPoly.const(0, 6)
    assert brute_force_row_operator(1, W, 0, 0, zero) == [[w[0], zero], [zero, w[2]]]
    assert brute_force_row_operator(1, W, 0, 1, zero) == [[zero, w[5]], [zero, zero]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rows_match_r_matrix_product(n):
    mono = monodromy_from_r(n, W, MPoly.const(1, 6))
    for left in (0, 1):
        for right in (0, 1):
            mat = brute_force_row_operator(n, W, left, right, MPoly.const(0, 6))
            for (aux_out, bottom, aux_in, top), value in mono.items():
                if (aux_in, aux_out) != (left, right):
                    continue
                b = sum(bit << i for i, bit in enumerate(bottom))
                t = sum(bit << i for i, bit in enumerate(top))
                assert mat[b][t] == value


def test_oversize_rejected():
    with pytest.raises(ValueError):
        brute_force_row_operator(13, W, 0, 0)


def test_row_rendering():
    types = row_configuration((1, 0, 0), (0, 0, 1), 0, 0)
    assert render_row(types) == "645"
    assert row_configuration((1,), (1,), 1, 0) is None


# ---------------------------------------------------------------- combinatorial A, B, C, D

def test_d_operator_example():
    assert ((4, 3, 2, 1), (1, 1, 1, 2, 2, 2)) in abcd_monomials("D", 5, (5, 5, 2, 2), 4, 9)


def test_a_operator_example_shape():
    # hooks with (r, c) = (1, 1) and (2, 2) plus two free rows and one free column force k=5, n=9
    target = (1, 1, 2, 1, 2, 2)
    found = [
        (mu, lam)
        for mu in partitions_in_box(5, 4)
        for r in range(1, 9)
        for lam, exps in abcd_monomials("A", r, mu, 5, 9)
        if exps == target
    ]
    assert found
    assert all(weight(lam) - weight(mu) == 4 for mu, lam in found)


def test_empty_hook_a0():
    for mu in partitions_in_box(2, 3):
        (lam, exps), = abcd_monomials("A", 0, mu, 2, 5)
        assert lam == mu
        assert exps[0] + exps[2] == 5
        assert abcd_combinatorial("A", 0, mu, 2, 5, W, MPoly.const(1, 6)) == {mu: w[0] ** exps[0] * w[2] ** exps[2]}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_abcd_exhaustive(n):
    report = verify_abcd_vs_bruteforce(n)
    assert report.ok, report.mismatches[:1]
    assert report.checked > 0


def test_abcd_sampled_n5():
    report = verify_abcd_vs_bruteforce(5, sample_ks=[2], sample_every=2)
    assert report.ok


def test_d_matches_cylindric_stats():
    # D_r removes a hook of size n - r; the same move read on the cylinder adds one of size r
    for k, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
        for mu in partitions_in_box(k, n - k):
            for r in range(1, n):
                d_side = sorted(abcd_monomials("D", r, mu, k, n))
                cyl = sorted(
                    (lam, (st.untouched_cols, sum(a - 1 for a, _ in st.components), st.untouched_rows,
                           sum(c - 1 for _, c in st.components), st.num_components, st.num_components))
                    for lam, st in enumerate_cylindric_brh(mu, r, 1, k, n)
                )
                assert d_side == cyl


def test_complement_involution():
    for lam in partitions_in_box(3, 4):
        assert complement(complement(lam, 3, 4), 3, 4) == lam


# ---------------------------------------------------------------- transfer matrices

def test_tau_zero_is_identity():
    for k, n in [(1, 3), (2, 4)]:
        assert transfer_tau_coeff(0, k, n, T, -ONE, _q()).equals(SparseOperator.identity(k, n, ONE))


@pytest.mark.parametrize("k,n", [(0, 3), (1, 3), (2, 4), (3, 4), (2, 5)])
def test_tau_n_is_scalar(k, n):
    a, b = T, TPoly.const(2)
    q = _q()
    expected = SparseOperator.scalar(k, n, q * (a ** k * b ** (n - k)))
    assert transfer_tau_coeff(n, k, n, a, b, q).equals(expected)


def test_tau_one_hand_enumeration():
    a, b = MPoly.variable(0, 2), MPoly.variable(1, 2)
    q = 5
    tau = transfer_tau_coeff(1, 1, 2, a, b, q)
    assert tau.entry((1,), (), 0) == a + b
    assert tau.entry((), (1,), 0) == q * (a + b)
    assert tau.entry((), (), 0) == 0 and tau.entry((1,), (1,), 0) == 0


def test_h_below_n_is_tau():
    for r in range(4):
        assert normalized_H_coeff(r, 2, 4, T, -ONE, _q()).equals(transfer_tau_coeff(r, 2, 4, T, -ONE, _q()))


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 4), (2, 5)])
def test_h_n_scalar_at_hecke_point(k, n):
    q = _q()
    h = normalized_H_coeff(n, n - k, n, T, -ONE, q)
    assert h.equals(SparseOperator.scalar(n - k, n, q * ((-1) ** k * (T ** (n - k) - 1))))


@pytest.mark.parametrize("k,n", [(0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
def test_h_inverse_identity(k, n):
    q = _q(4)
    for degree in range(1, 2 * n + 2):
        for a, b in ((T, -ONE), (-ONE, T), (T, TPoly.const(3))):
            assert h_inverse_identity_defect(degree, k, n, a, b, q).is_zero()
    assert h_inverse_identity_defect(0, 1, 3, T, -ONE, q).equals(SparseOperator.identity(1, 3, QSeries.constant(ONE, 4)))


def test_rtt_small():
    for n in (1, 2):
        report = rtt_check(n, deterministic_points(10))
        assert report.ok and report.points == 10


def test_rtt_symmetric_point():
    x, a, b = Fraction(2, 3), Fraction(5), Fraction(-1, 2)
    assert rtt_check(2, [(x, x, a, b, a, b)]).ok


def test_rtt_detects_wrong_r_matrix():
    # swapping the spectral parameters of the second monodromy breaks the relation
    from cylhecke import six_vertex

    pts = [(Fraction(1), Fraction(2), Fraction(3), Fraction(5), Fraction(7), Fraction(11))]
    assert rtt_check(1, pts).ok

    original = six_vertex.rtt_r_weights
    try:
        six_vertex.rtt_r_weights = lambda xi, xj, a, b, a2, b2: original(xj, xi, a, b, a2, b2)
        assert not six_vertex.rtt_check(1, pts).ok
    finally:
        six_vertex.rtt_r_weights = original


@given(st.sampled_from([(k, n) for n in range(1, 6) for k in range(n + 1)]),
       st.lists(st.fractions(-5, 5, max_denominator=4).filter(lambda v: v != 0), min_size=6, max_size=6))
def test_transfer_matrices_commute(kn, vals):
    k, n = kn
    x, a, b, y, a2, b2 = vals
    assert commutator_vanishes(k, n, (x, a, b), (y, a2, b2), Fraction(2, 3))


def test_transfer_at_point_is_polynomial_in_x():
    t2 = transfer_matrix_at(1, 3, Fraction(2), Fraction(1), Fraction(3), 1)
    total = SparseOperator(1, 3)
    for r in range(4):
        total = total + transfer_tau_coeff(r, 1, 3, Fraction(1), Fraction(3), 1).scale(2 ** r)
    assert t2.equals(total)


# ---------------------------------------------------------------- fermionic layer

def test_a0_is_identity():
    v = FockVector.basis((2, 1), 0, 6)
    assert fermionic_A_coeff(0, v) == v
    assert fermionic_A_coeff(0, v, inverse=True) == v


def test_a1_on_vacuum():
    out = fermionic_A_coeff(1, FockVector.basis((), 0, 4))
    assert out.coeffs == {(1,): T - 1}
    out = fermionic_A_coeff(1, FockVector.basis((), 0, 4), inverse=True)
    assert out.coeffs == {(1,): 1 - T}


def test_truncation_drops_terms():
    assert fermionic_A_coeff(3, FockVector.basis((2,), 0, 4)).coeffs == {}


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_e_product_expansion(r):
    for mu in partitions_of_upto(3):
        for inverse in (False, True):
            direct = fermionic_A_coeff(r, FockVector.basis(mu, 1, 20), inverse).coeffs
            assert fermionic_A_from_e_products(r, mu, 1, inverse) == direct


def test_fermionic_operators_commute():
    cap = 7
    for mu in partitions_of_upto(3):
        v = FockVector.basis(mu, 0, cap)
        for r in range(1, 4):
            for s in range(r + 1, 5):
                ab = fermionic_A_coeff(r, fermionic_A_coeff(s, v))
                ba = fermionic_A_coeff(s, fermionic_A_coeff(r, v))
                assert ab == ba


def test_fock_layer_small_cap():
    report = verify_fock_layer(5)
    assert report.ok, {k: v for k, v in report.checks.items() if v[1] is not None}
    assert set(report.checks) >= {"inverse identity", "A matrix elements", "inverse matrix elements"}


def test_windowed_lattice_matches_fermionic_action():
    for mu in partitions_of_upto(4):
        top = MayaDiagram(0, mu)
        for r in range(0, 4):
            image = fermionic_A_coeff(r, FockVector.basis(mu, 0, 20))
            inv = fermionic_A_coeff(r, FockVector.basis(mu, 0, 20), inverse=True)
            for lam in partitions_of_upto(weight(mu) + r):
                if weight(lam) != weight(mu) + r:
                    continue
                bottom = MayaDiagram(0, lam)
                got = windowed_lattice_element(top, bottom, hecke_weights(), ONE)
                assert TPoly.coerce(got) == image.coefficient(lam)
                got_inv = windowed_lattice_element(top, bottom, hecke_weights(inverse=True), ONE)
                assert TPoly.coerce(got_inv) == inv.coefficient(lam)


def test_project_basis_examples():
    assert project_basis((1,), 2, 4) == ((1,), 0, 1)
    core, d, sign = project_basis((3, 2), 2, 4)
    assert (core, d, sign) == ((1,), 1, 1)
    assert project_basis((1, 1, 1), 2, 4) is None


def test_projection_of_window_states():
    for lam in partitions_in_box(2, 2):
        out = fermionic_projection(FockVector.basis(lam, 2, 8), 2, 4, 2)
        assert out == StateVector(2, 4, {lam: QSeries.constant(ONE, 2)})
    with pytest.raises(ValueError):
        fermionic_projection(FockVector.basis((), 1, 4), 2, 4, 2)


def test_free_fermion_weights_layout():
    ws = free_fermion_weights(2, 3, 5)
    assert ws.values == (1, 10, 1, 15, 1, 25)
