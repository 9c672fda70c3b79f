"""Floating-point oracle built on the closed-form Bethe roots.

Conjugation convention: for roots off the unit circle the product
``|xi_i - xi_j|^2`` is read as ``(xi_i - xi_j)(1/xi_i - 1/xi_j)``, i.e. the
conjugate of ``q^{1/n}`` is ``q^{-1/n}``.  At ``q = 1`` this is ordinary
complex conjugation.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .coefficient_algebra import TPoly, schur_numeric
from .combinatorics import (
    conjugate,
    in_box,
    make_partition,
    partition_to_string,
    partitions_in_box,
    weight,
)
from .six_vertex import _index, brute_force_row_operator, free_fermion_weights

DEFAULT_TOL = 1e-8


def _rel(err: float, scale: float) -> float:
    return err / max(1.0, scale)


@dataclass(frozen=True)
class BetheRootSet:
    label: tuple
    roots: tuple
    q: float
    k: int
    n: int

    @property
    def inverse(self) -> tuple:
        return tuple(1 / z for z in self.roots)

    def vandermonde_weight(self) -> complex:
        """``prod_{i<j} (xi_i - xi_j)(1/xi_i - 1/xi_j)``."""
        out = 1 + 0j
        xs = self.roots
        for i in range(len(xs)):
            for j in range(i + 1, len(xs)):
                out *= (xs[i] - xs[j]) * (1 / xs[i] - 1 / xs[j])
        return out

    def bae_residual(self) -> float:
        return max((abs(z ** self.n + (-1) ** self.k * self.q) for z in self.roots), default=0.0)


def bethe_roots(lam, k: int, n: int, q: float) -> BetheRootSet:
    lam = make_partition(lam)
    if not in_box(lam, k, n - k):
        raise ValueError(f"{lam} outside the {k} x {n - k} box")
    if q <= 0:
        raise ValueError("q must be positive")
    padded = list(lam) + [0] * (k - len(lam))
    scale = q ** (1.0 / n)
    roots = tuple(
        scale * cmath.exp(2j * cmath.pi / n * ((k + 1) / 2 + padded[j - 1] - j)) for j in range(1, k + 1)
    )
    return BetheRootSet(lam, roots, q, k, n)


def all_root_sets(k: int, n: int, q: float) -> list:
    return [bethe_roots(lam, k, n, q) for lam in partitions_in_box(k, n - k)]


# --------------------------------------------------------------------------
# transfer matrix and eigenvectors
# --------------------------------------------------------------------------

def numeric_transfer_matrix(k: int, n: int, a, b, x, q) -> np.ndarray:
    """``A(x) + q D(x)`` on the sector with ``k`` ones, from row enumeration.

    Rows and columns follow ``partitions_in_box(k, n - k)``.
    """
    w = free_fermion_weights(a, b, x)
    a_op = brute_force_row_operator(n, w, 0, 0, zero=0j, one=1 + 0j)
    d_op = brute_force_row_operator(n, w, 1, 1, zero=0j, one=1 + 0j)
    box = partitions_in_box(k, n - k)
    idx = [_index(partition_to_string(lam, k, n)) for lam in box]
    out = np.zeros((len(box), len(box)), dtype=complex)
    for r, i in enumerate(idx):
        for c, j in enumerate(idx):
            out[r, c] = a_op[i][j] + q * d_op[i][j]
    return out


def eigenvalue(roots: BetheRootSet, a, b, x) -> complex:
    k, n, q = roots.k, roots.n, roots.q
    out = 1 + (-1) ** k * q * (x * b) ** n
    for z in roots.roots:
        out *= (1 + a * x * z) / (1 - b * x * z)
    return complex(out)


def bethe_vector(roots: BetheRootSet) -> np.ndarray:
    box = partitions_in_box(roots.k, roots.n - roots.k)
    return np.array([schur_numeric(mu, roots.inverse) for mu in box], dtype=complex)


@dataclass
class NumericReport:
    name: str
    residuals: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL

    @property
    def worst(self) -> float:
        return max(self.residuals.values(), default=0.0)

    @property
    def ok(self) -> bool:
        return self.worst < self.tol


def verify_eigen(k: int, n: int, a, b, x, q, tol: float = DEFAULT_TOL) -> NumericReport:
    tau = numeric_transfer_matrix(k, n, a, b, x, q)
    report = NumericReport(f"eigen k={k} n={n}", tol=tol)
    for roots in all_root_sets(k, n, q):
        if any(abs(x * b * z - 1) < 1e-12 for z in roots.roots):
            raise ValueError("pole of the eigenvalue at this x")
        v = bethe_vector(roots)
        lam_val = eigenvalue(roots, a, b, x)
        res = np.linalg.norm(tau @ v - lam_val * v) / np.linalg.norm(v)
        report.residuals[roots.label] = _rel(float(res), abs(lam_val))
    return report


def completeness_check(k: int, n: int, q: float, tol: float = DEFAULT_TOL) -> NumericReport:
    """``sum_nu s_nu(xi_lam) s_nu(1/xi_mu) = delta n^k / prod |xi_i - xi_j|^2``."""
    sets = all_root_sets(k, n, q)
    box = partitions_in_box(k, n - k)
    report = NumericReport(f"completeness k={k} n={n}", tol=tol)
    forward = {r.label: np.array([schur_numeric(nu, r.roots) for nu in box]) for r in sets}
    backward = {r.label: np.array([schur_numeric(nu, r.inverse) for nu in box]) for r in sets}
    for r1 in sets:
        expected_diag = n ** k / r1.vandermonde_weight()
        for r2 in sets:
            value = complex(forward[r1.label] @ backward[r2.label])
            target = expected_diag if r1.label == r2.label else 0
            report.residuals[(r1.label, r2.label)] = _rel(abs(value - target), abs(expected_diag))
    return report


def idempotent_check(k: int, n: int, q: float, tol: float = DEFAULT_TOL) -> NumericReport:
    """``F_lam(xi_mu) = delta_{lam mu}``."""
    sets = all_root_sets(k, n, q)
    box = partitions_in_box(k, n - k)
    report = NumericReport(f"idempotents k={k} n={n}", tol=tol)
    for r1 in sets:
        weight_factor = r1.vandermonde_weight() / n ** k
        coeffs = [schur_numeric(nu, r1.inverse) for nu in box]
        for r2 in sets:
            value = weight_factor * sum(c * schur_numeric(nu, r2.roots) for c, nu in zip(coeffs, box))
            report.residuals[(r1.label, r2.label)] = abs(value - (1 if r1 is r2 else 0))
    return report


# --------------------------------------------------------------------------
# h_r(y; a, b) and the ideal relations
# --------------------------------------------------------------------------

def little_h_series(values: Sequence[complex], a, b, order: int) -> np.ndarray:
    """Coefficients of ``prod (1 + a x y)/(1 - b x y)`` up to ``x^order``."""
    series = np.zeros(order + 1, dtype=complex)
    series[0] = 1
    for y in values:
        # multiply by (1 + a x y)
        series[1:] = series[1:] + a * y * series[:-1]
        # divide by (1 - b x y)
        for d in range(1, order + 1):
            series[d] += b * y * series[d - 1]
    return series


def ideal_relations_check(k: int, n: int, a, b, q, extra: int = 3, tol: float = DEFAULT_TOL) -> NumericReport:
    report = NumericReport(f"ideal k={k} n={n}", tol=tol)
    for roots in all_root_sets(k, n, q):
        h = little_h_series(roots.roots, a, b, n + extra)
        scale = max(abs(v) for v in h)
        worst = abs(h[n] - q * (-1) ** k * b ** (n - k) * ((-a) ** k - b ** k))
        for r in range(1, extra + 1):
            worst = max(worst, abs(h[r + n] + q * (-1) ** k * b ** n * h[r]))
        report.residuals[roots.label] = _rel(worst, scale)
    return report


def eigenvalue_polynomiality_check(k: int, n: int, a, b, q, extra: int = 4, tol: float = DEFAULT_TOL) -> NumericReport:
    """Taylor coefficients of the eigenvalue above ``x^n`` vanish."""
    report = NumericReport(f"polynomiality k={k} n={n}", tol=tol)
    for roots in all_root_sets(k, n, q):
        h = little_h_series(roots.roots, a, b, n + extra)
        series = h.copy()
        series[n:] += (-1) ** k * q * b ** n * h[: extra + 1]
        scale = max(abs(v) for v in h)
        report.residuals[roots.label] = _rel(max(abs(v) for v in series[n + 1:]), scale)
    return report


# --------------------------------------------------------------------------
# Bertram-Vafa-Intriligator
# --------------------------------------------------------------------------

def bvi_sum(lam, mu, nu, k: int, n: int, q: float) -> complex:
    total = 0j
    for roots in all_root_sets(k, n, q):
        total += (
            schur_numeric(lam, roots.inverse)
            * schur_numeric(mu, roots.roots)
            * schur_numeric(nu, roots.roots)
            * roots.vandermonde_weight()
        )
    return total / n ** k


def _solve_q_degrees(values: Sequence[complex], samples: Sequence[float], degrees: int) -> np.ndarray:
    if len(samples) < degrees + 1:
        raise ValueError(f"need at least {degrees + 1} q samples")
    mat = np.array([[s ** d for d in range(degrees + 1)] for s in samples], dtype=float)
    sol, *_ = np.linalg.lstsq(mat.astype(complex), np.asarray(values, dtype=complex), rcond=None)
    return sol


def _round_checked(value: complex, tol: float, what: str) -> int:
    nearest = round(value.real)
    if abs(value - nearest) > tol * max(1.0, abs(value)):
        raise ArithmeticError(f"non-integral {what}: {value}")
    return int(nearest)


def bvi_gw_numeric(lam, mu, nu, k: int, n: int, q_samples: Sequence[float] | None = None, tol: float = 1e-6) -> list:
    """``[(d, C^{lam,d}_{mu nu})]`` for ``d = 0 .. (|mu|+|nu|) // n``."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    dmax = (weight(mu) + weight(nu)) // n
    samples = list(q_samples) if q_samples is not None else [float(s) for s in range(1, dmax + 2)]
    values = [bvi_sum(lam, mu, nu, k, n, s) for s in samples]
    sol = _solve_q_degrees(values, samples, dmax)
    return [(d, _round_checked(sol[d], tol, "Gromov-Witten value")) for d in range(dmax + 1)]


# --------------------------------------------------------------------------
# cylindric characters from the Bethe sum
# --------------------------------------------------------------------------

def _primes(count: int) -> list:
    out, c = [], 2
    while len(out) < count:
        if all(c % p for p in out):
            out.append(c)
        c += 1
    return out


def bethe_cyl_sum(lam, mu, alpha: Sequence[int], k: int, n: int, t: float, q: float) -> complex:
    """Right side of the Bethe formula: ``q^d chi^{lam/d/mu}(alpha)`` at numeric ``t, q``."""
    lam_c, mu_c = conjugate(make_partition(lam)), conjugate(make_partition(mu))
    kk = n - k
    order = max(alpha, default=0)
    total = 0j
    for roots in all_root_sets(kk, n, q):
        h = little_h_series(roots.roots, t, -1.0, order)
        h_alpha = np.prod([h[a] for a in alpha]) if alpha else 1.0
        total += (
            h_alpha
            * schur_numeric(lam_c, roots.inverse)
            * schur_numeric(mu_c, roots.roots)
            * roots.vandermonde_weight()
        )
    return total / ((t - 1) ** len(alpha) * n ** kk)


def _lagrange_integer(xs: Sequence[int], ys: Sequence[int]) -> TPoly:
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for p in range(len(basis) - 1):
                basis[p] -= xj * basis[p + 1]
            denom *= xi - xj
        for p, c in enumerate(basis):
            coeffs[p] += yi * c / denom
    out = {}
    for p, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError("interpolated coefficient is not an integer")
        if c:
            out[p] = int(c)
    return TPoly(out)


@dataclass
class BetheCharResult:
    value: TPoly
    worst_rounding: float
    vandermonde_condition: float


def bethe_cyl_char_numeric(
    lam,
    d: int,
    mu,
    alpha: Sequence[int],
    k: int,
    n: int,
    t_samples: Sequence[int] | None = None,
    q_samples: Sequence[float] | None = None,
    tol: float = 1e-6,
) -> BetheCharResult:
    """Reconstruct ``chi^{lam/d/mu}(alpha)`` from numeric Bethe sums."""
    lam, mu = make_partition(lam), make_partition(mu)
    alpha = tuple(alpha)
    dmax = max(d, (weight(mu) + sum(alpha)) // n)
    qs = list(q_samples) if q_samples is not None else [float(s) for s in range(1, dmax + 2)]
    ts = list(t_samples) if t_samples is not None else _primes(sum(alpha) + 1)
    if 1 in ts:
        raise ValueError("t = 1 is a pole of the Bethe sum")
    mat = np.array([[s ** e for e in range(dmax + 1)] for s in qs], dtype=float)
    cond = float(np.linalg.cond(mat))
    worst = 0.0
    ys = []
    for t in ts:
        values = [bethe_cyl_sum(lam, mu, alpha, k, n, float(t), s) for s in qs]
        coeff = _solve_q_degrees(values, qs, dmax)[d]
        rounded = _round_checked(coeff, tol, "character sample")
        worst = max(worst, abs(coeff - rounded) / max(1.0, abs(coeff)))
        ys.append(rounded)
    return BetheCharResult(_lagrange_integer(ts, ys), worst, cond)
