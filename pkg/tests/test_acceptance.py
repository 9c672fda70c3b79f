"""Acceptance criteria, one test each.

Every criterion prints a single ``PASS``/``FAIL`` line with its wall time and
limit.  Memo caches are cleared first so a criterion never benefits from
work done by earlier tests.
"""
import time
from fractions import Fraction

import pytest

from cylhecke import (
    bethe_numeric,
    coefficient_algebra,
    combinatorics,
    cylindric,
    hecke_characters,
    quantum_cohomology,
    six_vertex,
)
from cylhecke.bethe_numeric import bvi_gw_numeric, completeness_check, ideal_relations_check, verify_eigen
from cylhecke.coefficient_algebra import classical_character, hook_length_dimension, lr_coefficient
from cylhecke.combinatorics import partitions_in_box, partitions_of, weight
from cylhecke.cylindric import cyl_char_mn, cyl_char_transfer, cyl_char_virtual, verify_char_to_schur
from cylhecke.hecke_characters import character_table, verify_dual_frobenius
from cylhecke.quantum_cohomology import gw_invariant, verify_theorem_main
from cylhecke.six_vertex import (
    commutator_vanishes,
    deterministic_points,
    rtt_check,
    verify_abcd_vs_bruteforce,
    verify_fock_layer,
)

MODULES = (coefficient_algebra, combinatorics, cylindric, hecke_characters, quantum_cohomology, six_vertex, bethe_numeric)


def _clear_caches():
    for module in MODULES:
        for value in vars(module).values():
            if callable(getattr(value, "cache_clear", None)):
                value.cache_clear()


def _report(capsys, number, title, ok, elapsed, limit, detail):
    verdict = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"{verdict} criterion {number:>2}: {title} [{elapsed:.1f}s / limit {limit:.0f}s] {detail}"
    with capsys.disabled():
        print("\n" + line)
    return verdict == "PASS"


def _run(capsys, number, title, limit, body):
    _clear_caches()
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    assert _report(capsys, number, title, ok, elapsed, limit, detail), detail


# ---------------------------------------------------------------- 1

def _character_tables():
    count, bad = 0, None
    for m in range(1, 7):
        rows, cols, table = character_table(m)
        for i, lam in enumerate(rows):
            for j, alpha in enumerate(cols):
                count += 1
                if table[i][j].at_one() != classical_character(lam, alpha):
                    bad = bad or (lam, alpha)
            if table[i][cols.index((1,) * m)] != hook_length_dimension(lam):
                bad = bad or (lam, "dimension")
    return bad is None, f"{count} entries, first failure {bad}"


def test_criterion_01_character_tables(capsys):
    _run(capsys, 1, "Hecke tables m<=6 vs classical MN and hook lengths", 30, _character_tables)


# ---------------------------------------------------------------- 2

def _dual_frobenius():
    lams = [lam for m in range(1, 7) for lam in partitions_of(m)]
    bad = [lam for lam in lams if not verify_dual_frobenius(lam, weight(lam))]
    return not bad, f"{len(lams)} shapes, failures {bad[:3]}"


def test_criterion_02_dual_frobenius(capsys):
    _run(capsys, 2, "dual Frobenius, N = m <= 6", 120, _dual_frobenius)


# ---------------------------------------------------------------- 3

def _abcd():
    checked, bad = 0, []
    for n in range(1, 7):
        rep = verify_abcd_vs_bruteforce(n)
        checked += rep.checked
        bad += rep.mismatches
    return not bad, f"{checked} (operator, k, state) rows, exhaustive for n<=6"


def test_criterion_03_abcd(capsys):
    _run(capsys, 3, "A/B/C/D combinatorics vs brute-force rows", 180, _abcd)


# ---------------------------------------------------------------- 4

def _rtt_and_commutation():
    points = deterministic_points(10)
    bad = []
    for n in (1, 2, 3):
        rep = rtt_check(n, points)
        if not rep.ok:
            bad.append(("rtt", n, rep.failures[0][0]))
    pairs = 0
    for n in range(1, 6):
        for k in range(n + 1):
            for i, (x, y, a, b, a2, b2) in enumerate(points[:4]):
                pairs += 1
                if not commutator_vanishes(k, n, (x, a, b), (y, a2, b2), Fraction(2, 3) + i):
                    bad.append(("commute", k, n, i))
    return not bad, f"RTT at 10 points for n=1,2,3; {pairs} commutators n<=5; failures {bad[:2]}"


def test_criterion_04_rtt(capsys):
    _run(capsys, 4, "free-fermion RTT and transfer-matrix commutation", 120, _rtt_and_commutation)


# ---------------------------------------------------------------- 5

def _fock():
    rep = verify_fock_layer(8, ((1, 2), (2, 4)))
    failing = {name: first for name, (_, first) in rep.checks.items() if first is not None}
    counts = ", ".join(f"{name}: {count}" for name, (count, _) in rep.checks.items())
    return rep.ok and len(rep.checks) >= 8, f"{counts}; failures {failing}"


def test_criterion_05_fock(capsys):
    _run(capsys, 5, "fermionic layer at weight <= 8", 120, _fock)


# ---------------------------------------------------------------- 6

def _bethe():
    worst = {"eigen": 0.0, "completeness": 0.0, "ideal": 0.0}
    for n in range(1, 7):
        for k in range(n + 1):
            worst["eigen"] = max(worst["eigen"], verify_eigen(k, n, -1.0, 2.0, 0.3, 1.0).worst)
            worst["completeness"] = max(worst["completeness"], completeness_check(k, n, 1.0).worst)
            worst["ideal"] = max(worst["ideal"], ideal_relations_check(k, n, -1.0, 2.0, 1.0).worst)
    ok = all(v < 1e-8 for v in worst.values())
    return ok, "worst residuals " + ", ".join(f"{k}={v:.1e}" for k, v in worst.items())


def test_criterion_06_bethe(capsys):
    _run(capsys, 6, "Bethe eigenvectors, completeness, ideal relations (tol 1e-8)", 60, _bethe)


# ---------------------------------------------------------------- 7

def _gromov_witten():
    triples, bad = 0, []
    for k, n in ((2, 4), (2, 5)):
        box = partitions_in_box(k, n - k)
        for lam in box:
            for mu in box:
                for nu in box:
                    triples += 1
                    numeric = dict(bvi_gw_numeric(lam, mu, nu, k, n, q_samples=[1.0, 2.0, 3.0, 4.0], tol=1e-6))
                    for d in range(0, 4):
                        exact = gw_invariant(lam, d, mu, nu, k, n)
                        if numeric.get(d, 0) != exact or exact < 0:
                            bad.append((k, n, lam, d, mu, nu))
                        if exact != gw_invariant(lam, d, nu, mu, k, n):
                            bad.append(("symmetry", lam, d, mu, nu))
                    if weight(lam) == weight(mu) + weight(nu) and numeric.get(0, 0) != lr_coefficient(lam, mu, nu):
                        bad.append(("lr", lam, mu, nu))
    return not bad, f"{triples} triples, d<=3; failures {bad[:2]}"


def test_criterion_07_gromov_witten(capsys):
    _run(capsys, 7, "rim hook vs BVI Gromov-Witten values on Gr(2,4), Gr(2,5)", 180, _gromov_witten)


# ---------------------------------------------------------------- 8

def _three_way():
    count, bad = 0, []
    for k, n in ((1, 2), (1, 3), (2, 4), (2, 5)):
        for lam in partitions_in_box(k, n - k):
            for d in range(0, 8 // n + 1):
                m = weight(lam) + d * n
                if m > 8:
                    continue
                for alpha in partitions_of(m):
                    count += 1
                    x = cyl_char_mn(lam, d, (), alpha, k, n)
                    if not (x == cyl_char_virtual(lam, d, (), alpha, k, n) == cyl_char_transfer(lam, d, (), alpha, k, n)):
                        bad.append((k, n, lam, d, alpha))
    return not bad, f"{count} characters; failures {bad[:2]}"


def test_criterion_08_three_way(capsys):
    _run(capsys, 8, "cylindric characters: recursion = virtual = transfer, weight <= 8", 600, _three_way)


# ---------------------------------------------------------------- 9

def _theorem():
    checked, bad = 0, []
    for k, n, lam, d in ((1, 2, (1,), 1), (1, 3, (2,), 1), (2, 4, (2, 1), 1)):
        total = weight(lam) + d * n
        for m1 in range(total + 1):
            rep = verify_theorem_main(lam, d, k, n, m1, total - m1)
            checked += rep.checked
            if not rep.ok:
                bad.append((k, n, lam, m1, rep.witness))
    return not bad, f"{checked} (alpha, beta) pairs; failures {bad[:1]}"


def test_criterion_09_theorem(capsys):
    _run(capsys, 9, "coproduct of cylindric characters via Gromov-Witten invariants", 600, _theorem)


# ---------------------------------------------------------------- 10

def _char_to_schur():
    compared, bad = 0, []
    for lam in ((1,), (2, 1), (2, 2)):
        for nvars in range(1, 5):
            rep = verify_char_to_schur(lam, 2, 4, nvars, 6)
            compared += rep.compared
            if not rep.ok:
                bad.append((lam, nvars, rep.mismatch))
    return not bad, f"{compared} (lambda, N, d) blocks up to degree 6; failures {bad[:1]}"


def test_criterion_10_char_to_schur(capsys):
    _run(capsys, 10, "characteristic map to cylindric Schur functions, Gr(2,4), N<=4", 300, _char_to_schur)


@pytest.fixture(autouse=True, scope="module")
def _fresh_caches():
    _clear_caches()
    yield
    _clear_caches()
