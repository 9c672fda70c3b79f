"""Cylindric Hecke characters and cylindric Schur functions.

Three evaluators of ``chi_t^{lam/d/mu}(alpha)`` are provided, built on
disjoint machinery:

* :func:`cyl_char_mn` recursion over cylindric broken rim hooks,
* :func:`cyl_char_virtual` signed sums of ordinary skew characters over
  partitions with ``n``-core ``lam``,
* :func:`cyl_char_transfer` matrix elements of the normalized transfer matrix
  at ``(a, b) = (t, -1)`` between conjugate labels.

:func:`cyl_char_at_one` is an independent integer recursion for ``t = 1``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .coefficient_algebra import (
    ONE,
    T,
    MonomialExpansion,
    QSeries,
    TPoly,
    lr_coefficient,
    schur_in_tminus1_alphabet,
    t_integer,
)
from .combinatorics import (
    CylindricShape,
    conjugate,
    contains,
    enumerate_cylindric_brh,
    in_box,
    make_partition,
    partition_to_string,
    partitions_of,
    string_to_partition,
    weight,
)
from .hecke_characters import brh_weight, skew_hecke_character
from .six_vertex import StateVector, normalized_H_coeff, project_basis


def _check_window(lam, k: int, n: int) -> tuple:
    lam = make_partition(lam)
    if not in_box(lam, k, n - k):
        raise ValueError(f"{lam} is not in the {k} x {n - k} box")
    return lam


def _weights_match(lam, d, mu, alpha, n) -> bool:
    return d >= 0 and weight(lam) + d * n == weight(mu) + sum(alpha)


# --------------------------------------------------------------------------
# evaluator 1: cylindric Murnaghan-Nakayama recursion
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _mn(lam: tuple, d: int, mu: tuple, alpha: tuple, k: int, n: int) -> TPoly:
    if not _weights_match(lam, d, mu, alpha, n):
        return TPoly()
    if not alpha:
        return ONE if (d == 0 and lam == mu) else TPoly()
    m, rest = alpha[-1], alpha[:-1]
    if m > n:
        return (-1) ** (k + 1) * _mn(lam, d - 1, mu, rest + (m - n,), k, n)
    if m == n:
        return (-1) ** k * t_integer(n - k) * _mn(lam, d - 1, mu, rest, k, n)
    total = TPoly()
    for rho, stats in enumerate_cylindric_brh(mu, m, 0, k, n):
        sub = _mn(lam, d, rho, rest, k, n)
        if sub:
            total = total + brh_weight(stats) * sub
    for rho, stats in enumerate_cylindric_brh(mu, m, 1, k, n):
        sub = _mn(lam, d - 1, rho, rest, k, n)
        if sub:
            total = total + brh_weight(stats) * sub
    return total


def cyl_char_mn(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> TPoly:
    lam, mu = _check_window(lam, k, n), _check_window(mu, k, n)
    return _mn(lam, int(d), mu, tuple(int(a) for a in alpha), k, n)


# --------------------------------------------------------------------------
# evaluator 2: signed expansion into ordinary skew characters
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def virtual_expansion(lam: tuple, d: int, k: int, n: int) -> tuple:
    """``((nu, sign), ...)`` with ``nu`` of n-core ``lam``, n-weight ``d`` and ``nu_1 <= n - k``.

    The sign is the projection sign of ``nu'`` for the conjugate window,
    ``(-1)^{(n-k-1)d} sgn(w_{nu'})``.
    """
    lam = _check_window(lam, k, n)
    out = []
    for nu in partitions_of(weight(lam) + d * n, n - k):
        image = project_basis(conjugate(nu), n - k, n)
        if image is None:
            continue
        core, dd, sign = image
        if dd == d and core == conjugate(lam):
            out.append((nu, sign))
    return tuple(out)


def cyl_char_virtual(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> TPoly:
    lam, mu = _check_window(lam, k, n), _check_window(mu, k, n)
    alpha = tuple(alpha)
    if not _weights_match(lam, d, mu, alpha, n):
        return TPoly()
    total = TPoly()
    for nu, sign in virtual_expansion(lam, d, k, n):
        total = total + sign * skew_hecke_character(nu, mu, alpha)
    return total


# --------------------------------------------------------------------------
# evaluator 3: transfer matrix
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _h_operator(r: int, kk: int, n: int, qcap: int):
    q = QSeries.monomial(ONE, 1, qcap)
    return normalized_H_coeff(r, kk, n, T, -ONE, q)


def transfer_matrix_element(lam_c, mu_c, alpha: Sequence[int], kk: int, n: int, qcap: int) -> QSeries:
    """``<lam_c| H_{alpha_1} ... H_{alpha_l} |mu_c>`` on ``V_kk`` at ``(a, b) = (t, -1)``."""
    vec = StateVector(kk, n, {make_partition(mu_c): QSeries.constant(ONE, qcap)})
    for part in reversed(tuple(alpha)):
        vec = _h_operator(part, kk, n, qcap).apply(vec)
    return vec.coefficient(lam_c, QSeries([], qcap))


def cyl_char_transfer(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> TPoly:
    lam, mu = _check_window(lam, k, n), _check_window(mu, k, n)
    alpha = tuple(alpha)
    if not _weights_match(lam, d, mu, alpha, n):
        return TPoly()
    element = transfer_matrix_element(conjugate(lam), conjugate(mu), alpha, n - k, n, d)
    return element.coefficient(d).exact_div_t_minus_one(len(alpha))


def cyl_char(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> TPoly:
    """Default evaluator (the recursion)."""
    return cyl_char_mn(lam, d, mu, alpha, k, n)


# --------------------------------------------------------------------------
# t = 1: unbroken hooks on the periodic string
# --------------------------------------------------------------------------

def _periodic_hook_moves(mu: tuple, m: int, k: int, n: int) -> list:
    """Single hooks of size ``m < n`` added on the cylinder, via the n-periodic string of ``mu``.

    Returns ``(rho, wraps, rows)``; ``wraps`` is 1 when the moved letter
    crosses the end of the window.
    """
    bits = partition_to_string(mu, k, n)
    out = []
    for i in range(n):
        if not bits[i]:
            continue
        j = i + m
        if bits[j % n]:
            continue
        between = sum(bits[p % n] for p in range(i + 1, j))
        new = list(bits)
        new[i], new[j % n] = 0, 1
        out.append((string_to_partition(new), 1 if j >= n else 0, between + 1))
    return out


@lru_cache(maxsize=None)
def _at_one(lam: tuple, d: int, mu: tuple, alpha: tuple, k: int, n: int) -> int:
    if not _weights_match(lam, d, mu, alpha, n):
        return 0
    if not alpha:
        return 1 if (d == 0 and lam == mu) else 0
    m, rest = alpha[-1], alpha[:-1]
    if m > n:
        return (-1) ** (k + 1) * _at_one(lam, d - 1, mu, rest + (m - n,), k, n)
    if m == n:
        return (-1) ** k * (n - k) * _at_one(lam, d - 1, mu, rest, k, n)
    total = 0
    for rho, wraps, rows in _periodic_hook_moves(mu, m, k, n):
        total += (-1) ** (rows - 1) * _at_one(lam, d - wraps, rho, rest, k, n)
    return total


def cyl_char_at_one(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> int:
    lam, mu = _check_window(lam, k, n), _check_window(mu, k, n)
    return _at_one(lam, int(d), mu, tuple(alpha), k, n)


# --------------------------------------------------------------------------
# cylindric Schur functions
# --------------------------------------------------------------------------

def _tableau_poset(shape: CylindricShape) -> tuple:
    """Fundamental cells in a topological order and their (weak, strict) successor lists."""
    fund = shape.fundamental_cells()
    index = {c: i for i, c in enumerate(fund)}
    weak = [[] for _ in fund]
    strict = [[] for _ in fund]
    for c, idx in index.items():
        i, j = c
        if shape.contains_cell((i, j + 1)):
            weak[idx].append(index[shape.reduce((i, j + 1))])
        if shape.contains_cell((i + 1, j)):
            strict[idx].append(index[shape.reduce((i + 1, j))])
    # topological order
    indeg = [0] * len(fund)
    for lst in (weak, strict):
        for succ in lst:
            for s in succ:
                indeg[s] += 1
    order = []
    ready = [i for i, v in enumerate(indeg) if v == 0]
    while ready:
        v = ready.pop()
        order.append(v)
        for s in weak[v] + strict[v]:
            indeg[s] -= 1
            if indeg[s] == 0:
                ready.append(s)
    if len(order) != len(fund):
        raise ValueError("cyclic cylindric shape")
    return fund, order, weak, strict


def cyl_schur_tableaux_raw(lam, d: int, mu, k: int, n: int, nvars: int) -> dict:
    """``{exponent vector: count}`` over cylindric tableaux with entries in ``1..nvars``."""
    shape = CylindricShape(_check_window(lam, k, n), d, _check_window(mu, k, n), k, n)
    if not shape.is_valid():
        raise ValueError("invalid cylindric shape")
    fund, order, weak, strict = _tableau_poset(shape)
    preds = [[] for _ in fund]  # (pred, strict?)
    for v in range(len(fund)):
        for s in weak[v]:
            preds[s].append((v, False))
        for s in strict[v]:
            preds[s].append((v, True))
    values = [0] * len(fund)
    counts: dict = {}
    exps = [0] * nvars

    def rec(pos):
        if pos == len(order):
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
            return
        v = order[pos]
        low = 1
        for p, is_strict in preds[v]:
            low = max(low, values[p] + (1 if is_strict else 0))
        for value in range(low, nvars + 1):
            values[v] = value
            exps[value - 1] += 1
            rec(pos + 1)
            exps[value - 1] -= 1

    rec(0)
    return counts


def cyl_schur_tableaux(lam, d: int, mu, k: int, n: int, nvars: int, max_degree: int) -> MonomialExpansion:
    shape_size = weight(lam) + d * n - weight(mu)
    out = MonomialExpansion(nvars)
    if shape_size > max_degree:
        return out
    raw = cyl_schur_tableaux_raw(lam, d, mu, k, n, nvars)
    by_key: dict = {}
    for e, c in raw.items():
        key = tuple(sorted(e, reverse=True))
        if by_key.setdefault(key, c) != c:
            raise AssertionError(f"tableau counts are not symmetric at {key}")
    for key, c in by_key.items():
        if sum(1 for e in raw if tuple(sorted(e, reverse=True)) == key) != _distinct_permutations(key):
            raise AssertionError(f"tableau counts are not symmetric at {key}")
        out.add(key, c)
    return out


def _distinct_permutations(exponents: tuple) -> int:
    out = factorial(len(exponents))
    for mult in Counter(exponents).values():
        out //= factorial(mult)
    return out


@lru_cache(maxsize=None)
def skew_kostka(lam: tuple, mu: tuple, content: tuple) -> int:
    """Semistandard tableaux of shape ``lam/mu`` with the given content."""
    if weight(lam) - weight(mu) != sum(content) or not contains(lam, mu):
        return 0
    if not content:
        return 1 if lam == mu else 0
    total = 0
    last = content[-1]
    lam_l = list(lam)
    mu_l = list(mu) + [0] * (len(lam) - len(mu))

    def rec(i, remaining, acc):
        nonlocal total
        if i == len(lam_l):
            if remaining == 0:
                total += skew_kostka(make_partition(acc), mu, content[:-1])
            return
        lower = max(lam_l[i + 1] if i + 1 < len(lam_l) else 0, mu_l[i])
        for take in range(0, min(remaining, lam_l[i] - lower) + 1):
            rec(i + 1, remaining - take, acc + [lam_l[i] - take])

    rec(0, last, [])
    return total


def mcnamara_expansion(lam, d: int, k: int, n: int) -> tuple:
    """Signed ordinary shapes whose skew Schur functions sum to the cylindric one."""
    return virtual_expansion(_check_window(lam, k, n), d, k, n)


def cyl_schur_from_expansion(lam, d: int, mu, k: int, n: int, nvars: int, max_degree: int) -> MonomialExpansion:
    out = MonomialExpansion(nvars)
    size = weight(lam) + d * n - weight(mu)
    if size > max_degree:
        return out
    for nu, sign in mcnamara_expansion(lam, d, k, n):
        for kappa in partitions_of(size, None, nvars):
            c = skew_kostka(nu, make_partition(mu), kappa)
            if c:
                out.add(kappa, sign * c)
    return out


@dataclass
class CharSchurReport:
    lam: tuple
    k: int
    n: int
    compared: int
    mismatch: tuple | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def char_side_expansion(lam, d: int, k: int, n: int, nvars: int) -> MonomialExpansion:
    """``sum_mu chi^{lam/d/0}(mu) (t-1)^{l(mu)} m_mu`` using the transfer-matrix evaluator."""
    out = MonomialExpansion(nvars)
    size = weight(lam) + d * n
    for mu in partitions_of(size, None, nvars):
        value = cyl_char_transfer(lam, d, (), mu, k, n) * (T - ONE) ** len(mu)
        if value:
            out.add(mu, value)
    return out


def schur_side_expansion(lam, d: int, k: int, n: int, nvars: int) -> MonomialExpansion:
    """Signed sum of ``s_nu[(t-1)X]`` over the ordinary shapes of the cylindric Schur function."""
    out = MonomialExpansion(nvars)
    for nu, sign in mcnamara_expansion(lam, d, k, n):
        out = out + skew_plethystic(nu, (), nvars).scale(sign)
    return out


def verify_char_to_schur(lam, k: int, n: int, nvars: int, max_degree: int) -> CharSchurReport:
    lam = _check_window(lam, k, n)
    compared = 0
    d = 0
    while weight(lam) + d * n <= max_degree:
        left = char_side_expansion(lam, d, k, n, nvars)
        right = schur_side_expansion(lam, d, k, n, nvars)
        compared += 1
        diff = left.first_difference(right)
        if diff is not None:
            return CharSchurReport(lam, k, n, compared, (d,) + diff)
        d += 1
    return CharSchurReport(lam, k, n, compared, None)


def skew_plethystic(nu, mu, nvars: int) -> MonomialExpansion:
    """``s_{nu/mu}[(t-1)X]`` through the Littlewood-Richardson expansion of the skew shape."""
    nu, mu = make_partition(nu), make_partition(mu)
    out = MonomialExpansion(nvars)
    for kappa in partitions_of(weight(nu) - weight(mu)):
        c = lr_coefficient(nu, mu, kappa)
        if c:
            out = out + schur_in_tminus1_alphabet(kappa, nvars).scale(c)
    return out

