"""Irreducible and skew Hecke-algebra characters as exact Laurent polynomials in ``t``.

A character value is a sum over broken-rim-hook tableaux: chains of
partitions where each step adds a broken rim hook whose size is the next
content part.  Each step contributes :func:`brh_weight`.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .coefficient_algebra import (
    ONE,
    T,
    TPoly,
    MonomialExpansion,
    schur_in_tminus1_alphabet,
)
from .combinatorics import (
    BrokenRimHookStats,
    contains,
    enumerate_brh_additions,
    make_partition,
    partitions_of,
    weight,
)


def brh_weight(stats: BrokenRimHookStats) -> TPoly:
    """``(t-1)^{#b-1} prod_h (-1)^{r(h)-1} t^{c(h)-1}``; the empty hook has weight 1."""
    if stats.num_components == 0:
        return ONE
    sign = 1
    power = 0
    for r, c in stats.components:
        sign *= (-1) ** (r - 1)
        power += c - 1
    return (T - 1) ** (stats.num_components - 1) * TPoly({power: sign})


@lru_cache(maxsize=200_000)
def _skew_value(lam: tuple, mu: tuple, content: tuple) -> TPoly:
    if not content:
        return ONE if lam == mu else TPoly()
    total = TPoly()
    for rho, stats in enumerate_brh_additions(mu, content[0], container=lam):
        rest = _skew_value(lam, rho, content[1:])
        if rest:
            total = total + brh_weight(stats) * rest
    return total


def skew_hecke_character(lam: Sequence[int], mu: Sequence[int], alpha: Sequence[int]) -> TPoly:
    """``chi_t^{lam/mu}(alpha)``; zero unless ``mu`` sits inside ``lam`` with matching size."""
    lam, mu = make_partition(lam), make_partition(mu)
    alpha = tuple(int(a) for a in alpha)
    if any(a <= 0 for a in alpha):
        raise ValueError("content parts must be positive")
    if not contains(lam, mu) or weight(lam) - weight(mu) != sum(alpha):
        return TPoly()
    return _skew_value(lam, mu, alpha)


def hecke_character(lam: Sequence[int], alpha: Sequence[int]) -> TPoly:
    if weight(lam) != sum(alpha):
        raise ValueError("weight mismatch between shape and content")
    return skew_hecke_character(lam, (), alpha)


def character_table(m: int) -> tuple:
    """``(rows, columns, table)`` with rows and columns the partitions of ``m``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    parts = partitions_of(m)
    table = [[hecke_character(lam, alpha) for alpha in parts] for lam in parts]
    return parts, parts, table


def dual_frobenius_lhs(lam: Sequence[int], nvars: int) -> MonomialExpansion:
    """``sum_mu chi_t^lam(mu) (t-1)^{l(mu)} m_mu`` in ``nvars`` variables."""
    lam = make_partition(lam)
    out = MonomialExpansion(nvars)
    for mu in partitions_of(weight(lam), None, nvars):
        value = hecke_character(lam, mu) * (T - 1) ** len(mu)
        if value:
            out.add(mu, value)
    return out


def verify_dual_frobenius(lam: Sequence[int], nvars: int) -> bool:
    return dual_frobenius_lhs(lam, nvars) == schur_in_tminus1_alphabet(make_partition(lam), nvars)
