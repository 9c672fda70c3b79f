import cmath
import itertools

import numpy as np
import pytest

from cylhecke.bethe_numeric import (
    all_root_sets,
    bethe_cyl_char_numeric,
    bethe_cyl_sum,
    bethe_roots,
    bethe_vector,
    bvi_gw_numeric,
    completeness_check,
    eigenvalue,
    eigenvalue_polynomiality_check,
    ideal_relations_check,
    idempotent_check,
    numeric_transfer_matrix,
    verify_eigen,
)
from cylhecke.coefficient_algebra import lr_coefficient
from cylhecke.combinatorics import partitions_in_box
from cylhecke.cylindric import cyl_char
from cylhecke.hecke_characters import hecke_character
from cylhecke.quantum_cohomology import gw_invariant

SECTORS = [(k, n) for n in range(1, 7) for k in range(n + 1)]


def test_root_examples():
    assert abs(bethe_roots((), 1, 2, 1.0).roots[0] - 1) < 1e-12
    assert abs(bethe_roots((1,), 1, 2, 1.0).roots[0] + 1) < 1e-12
    with pytest.raises(ValueError):
        bethe_roots((2,), 1, 2, 1.0)
    with pytest.raises(ValueError):
        bethe_roots((), 1, 2, -1.0)


@pytest.mark.parametrize("k,n", SECTORS)
def test_bethe_equations(k, n):
    for roots in all_root_sets(k, n, 1.0):
        assert roots.bae_residual() < 1e-12
    for roots in all_root_sets(k, n, 2.5):
        assert roots.bae_residual() < 1e-10 * 2.5


@pytest.mark.parametrize("n", range(1, 9))
def test_roots_distinct(n):
    for k in range(n + 1):
        sets = all_root_sets(k, n, 1.0)
        for roots in sets:
            for a, b in itertools.combinations(roots.roots, 2):
                assert abs(a - b) > 1e-6
        # different labels give different root sets
        keys = {tuple(sorted((round(z.real, 9), round(z.imag, 9)) for z in r.roots)) for r in sets}
        assert len(keys) == len(sets)


@pytest.mark.parametrize("k,n", SECTORS)
def test_eigenvectors(k, n):
    report = verify_eigen(k, n, -1.0, 2.0, 0.3, 1.0)
    assert report.ok, report.worst


def test_eigen_other_points():
    assert verify_eigen(2, 4, -1.0, 2.0, 0.3, 1.7).ok
    assert verify_eigen(2, 5, 0.4, -1.3, 0.2 + 0.1j, 0.8).ok


def test_x_zero_is_trivial():
    tau = numeric_transfer_matrix(2, 4, -1.0, 2.0, 0.0, 1.0)
    assert np.allclose(tau, np.eye(len(tau)))
    for roots in all_root_sets(2, 4, 1.0):
        assert abs(eigenvalue(roots, -1.0, 2.0, 0.0) - 1) < 1e-14


@pytest.mark.parametrize("k,n", SECTORS)
@pytest.mark.parametrize("q", [1.0, 2.0])
def test_completeness(k, n, q):
    report = completeness_check(k, n, q)
    assert report.ok, report.worst


def test_completeness_k1_is_dft():
    n = 5
    sets = all_root_sets(1, n, 1.0)
    mat = np.array([bethe_vector(r) for r in sets])
    assert np.allclose(mat @ mat.conj().T, n * np.eye(n))


@pytest.mark.parametrize("k,n", SECTORS)
def test_ideal_relations_and_polynomiality(k, n):
    assert ideal_relations_check(k, n, -1.0, 2.0, 1.0).ok
    assert eigenvalue_polynomiality_check(k, n, -1.0, 2.0, 1.0).ok


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_idempotents(k, n):
    assert idempotent_check(k, n, 1.0).ok
    assert idempotent_check(k, n, 3.0).ok


# ---------------------------------------------------------------- BVI

@pytest.mark.parametrize("k,n", [(1, 3), (2, 4)])
def test_bvi_matches_rim_hooks(k, n):
    box = partitions_in_box(k, n - k)
    for lam in box:
        for mu in box:
            for nu in box:
                for d, value in bvi_gw_numeric(lam, mu, nu, k, n):
                    assert value == gw_invariant(lam, d, mu, nu, k, n)
                    if d == 0:
                        assert value == lr_coefficient(lam, mu, nu)


def test_bvi_example():
    assert dict(bvi_gw_numeric((1,), (2, 2), (1,), 2, 4))[1] == 1


def test_bvi_rejects_too_few_samples():
    with pytest.raises(ValueError):
        bvi_gw_numeric((), (2, 2), (2, 2), 2, 4, q_samples=[1.0])


# ---------------------------------------------------------------- Bethe characters

def test_bethe_char_degree_zero():
    for lam, alpha in [((2, 1), (2, 1)), ((2,), (1, 1)), ((1, 1), (2,))]:
        result = bethe_cyl_char_numeric(lam, 0, (), alpha, 2, 4)
        assert result.value == hecke_character(lam, alpha)


def test_bethe_char_example():
    result = bethe_cyl_char_numeric((2, 1), 1, (), (4, 3), 2, 4)
    assert result.value == cyl_char((2, 1), 1, (), (4, 3), 2, 4)
    assert result.worst_rounding < 1e-6


@pytest.mark.parametrize("case", [((1,), 1, (), (2, 1), 1, 2), ((1,), 1, (), (3, 2), 2, 4), ((), 1, (1,), (1, 2), 1, 3)])
def test_bethe_char_agrees_with_recursion(case):
    lam, d, mu, alpha, k, n = case
    assert bethe_cyl_char_numeric(lam, d, mu, alpha, k, n).value == cyl_char(lam, d, mu, alpha, k, n)


def test_bethe_selection_rule():
    # |mu| + |alpha| - |lam| not divisible by n: every q-degree vanishes
    for q in (1.0, 2.0):
        for t in (2.0, 3.0):
            assert abs(bethe_cyl_sum((2, 1), (), (2, 2), 2, 4, t, q)) < 1e-9
            assert abs(bethe_cyl_sum((1,), (), (1, 1), 1, 3, t, q)) < 1e-9


def test_bethe_char_rejects_t_one():
    with pytest.raises(ValueError):
        bethe_cyl_char_numeric((1,), 0, (), (1,), 1, 2, t_samples=[1, 2])


def test_vandermonde_weight_is_real_at_q_one():
    for roots in all_root_sets(3, 6, 1.0):
        w = roots.vandermonde_weight()
        assert abs(w.imag) < 1e-12 and w.real > 0
        direct = np.prod([abs(a - b) ** 2 for a, b in itertools.combinations(roots.roots, 2)])
        assert cmath.isclose(w, direct, rel_tol=1e-12)
