"""Small quantum cohomology of Grassmannians via the rim hook algorithm.

A product of Schubert classes is computed classically with
Littlewood-Richardson coefficients and each resulting shape is projected
back into the ``k x (n-k)`` box by stripping ``n``-rim hooks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .coefficient_algebra import lr_coefficient
from .combinatorics import (
    conjugate,
    core_decompose,
    in_box,
    make_partition,
    partitions_in_box,
    partitions_of,
    weight,
)


@dataclass
class QClass:
    """Sparse combination ``sum c_{lam,d} q^d s_lam`` with integer coefficients."""

    k: int
    n: int
    terms: dict = field(default_factory=dict)  # (lam, d) -> int

    def add(self, lam, d: int, value: int) -> None:
        lam = make_partition(lam)
        if not in_box(lam, self.k, self.n - self.k):
            raise ValueError(f"{lam} outside the {self.k} x {self.n - self.k} box")
        key = (lam, d)
        total = self.terms.get(key, 0) + value
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def coefficient(self, lam, d: int) -> int:
        return self.terms.get((make_partition(lam), d), 0)

    def __add__(self, other: "QClass") -> "QClass":
        out = QClass(self.k, self.n, dict(self.terms))
        for (lam, d), v in other.terms.items():
            out.add(lam, d, v)
        return out

    def __mul__(self, other: "QClass") -> "QClass":
        out = QClass(self.k, self.n)
        for (a, da), va in self.terms.items():
            for (b, db), vb in other.terms.items():
                for (lam, d), v in quantum_product(a, b, self.k, self.n).terms.items():
                    out.add(lam, d + da + db, va * vb * v)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QClass)
            and (self.k, self.n) == (other.k, other.n)
            and self.terms == other.terms
        )

    @classmethod
    def schubert(cls, lam, k: int, n: int) -> "QClass":
        out = cls(k, n)
        out.add(lam, 0, 1)
        return out


def rim_hook_project(lam, k: int, n: int) -> QClass:
    """Image of ``s_lam`` in the quantum cohomology of ``Gr(k, n)``."""
    lam = make_partition(lam)
    out = QClass(k, n)
    if len(lam) > k:
        return out
    if k == 0 or k == n:
        if not lam:
            out.add((), 0, 1)
        return out
    dec = core_decompose(lam, n)
    if dec.core and dec.core[0] > n - k:
        return out
    hook_sign = (-1) ** sum(r - 1 for r in dec.removal_row_counts)
    if hook_sign != dec.perm_sign:
        raise AssertionError(f"sign mismatch for {lam}")
    out.add(dec.core, dec.n_weight, (-1) ** ((k + 1) * dec.n_weight) * hook_sign)
    return out


@lru_cache(maxsize=None)
def _product_terms(mu: tuple, nu: tuple, k: int, n: int) -> tuple:
    acc = QClass(k, n)
    for rho in partitions_of(weight(mu) + weight(nu), None, k):
        c = lr_coefficient(rho, mu, nu)
        if not c:
            continue
        for (core, d), sign in rim_hook_project(rho, k, n).terms.items():
            acc.add(core, d, c * sign)
    return tuple(sorted(acc.terms.items()))


def quantum_product(mu, nu, k: int, n: int) -> QClass:
    mu, nu = make_partition(mu), make_partition(nu)
    for p in (mu, nu):
        if not in_box(p, k, n - k):
            raise ValueError(f"{p} outside the {k} x {n - k} box")
    return QClass(k, n, dict(_product_terms(mu, nu, k, n)))


def gw_invariant(lam, d: int, mu, nu, k: int, n: int) -> int:
    """``C^{lam,d}_{mu nu}``: coefficient of ``q^d s_lam`` in ``s_mu * s_nu``."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if d < 0 or weight(mu) + weight(nu) != weight(lam) + d * n:
        return 0
    return quantum_product(mu, nu, k, n).coefficient(lam, d)


def gw_table(k: int, n: int, dmax: int) -> list:
    """Nonzero ``(lam, d, mu, nu, value)`` with ``d <= dmax``, sorted."""
    box = partitions_in_box(k, n - k)
    rows = []
    for mu in box:
        for nu in box:
            for (lam, d), v in quantum_product(mu, nu, k, n).terms.items():
                if d <= dmax:
                    rows.append((lam, d, mu, nu, v))
    rows.sort(key=lambda r: (r[1], weight(r[0]), r[0], r[2], r[3]))
    return rows


def conjugate_symmetry_holds(k: int, n: int) -> bool:
    box = partitions_in_box(k, n - k)
    for mu in box:
        for nu in box:
            here = quantum_product(mu, nu, k, n).terms
            there = quantum_product(conjugate(mu), conjugate(nu), n - k, n).terms
            if {(conjugate(lam), d): v for (lam, d), v in here.items()} != there:
                return False
    return True


def associativity_holds(k: int, n: int) -> bool:
    box = partitions_in_box(k, n - k)
    classes = {p: QClass.schubert(p, k, n) for p in box}
    for a in box:
        for b in box:
            ab = classes[a] * classes[b]
            for c in box:
                if ab * classes[c] != classes[a] * (classes[b] * classes[c]):
                    return False
    return True


# --------------------------------------------------------------------------
# coproduct of cylindric characters
# --------------------------------------------------------------------------

@dataclass
class TheoremReport:
    lam: tuple
    d: int
    k: int
    n: int
    checked: int
    witness: tuple | None

    @property
    def ok(self) -> bool:
        return self.witness is None


def coproduct_rhs(lam, d: int, alpha: Sequence[int], beta: Sequence[int], k: int, n: int, evaluator=None):
    """``sum C^{lam, d-d'-d''}_{mu nu} chi^{mu[d']}(alpha) chi^{nu[d'']}(beta)``."""
    from .coefficient_algebra import TPoly
    from .cylindric import cyl_char

    evaluator = evaluator or cyl_char
    lam = make_partition(lam)
    m1, m2 = sum(alpha), sum(beta)
    total = TPoly()
    box = partitions_in_box(k, n - k)
    for mu in box:
        if (m1 - weight(mu)) % n or m1 < weight(mu):
            continue
        d1 = (m1 - weight(mu)) // n
        left = None
        for nu in box:
            if (m2 - weight(nu)) % n or m2 < weight(nu):
                continue
            d2 = (m2 - weight(nu)) // n
            if d1 + d2 > d:
                continue
            c = gw_invariant(lam, d - d1 - d2, mu, nu, k, n)
            if not c:
                continue
            if left is None:
                left = evaluator(mu, d1, (), alpha, k, n)
            total = total + c * left * evaluator(nu, d2, (), beta, k, n)
    return total


def verify_theorem_main(lam, d: int, k: int, n: int, m1: int, m2: int, evaluator=None) -> TheoremReport:
    from .cylindric import cyl_char

    evaluator = evaluator or cyl_char
    lam = make_partition(lam)
    if m1 + m2 != weight(lam) + d * n or m1 < 0 or m2 < 0:
        raise ValueError("m' + m'' must equal |lam| + d n")
    checked = 0
    for alpha in partitions_of(m1):
        for beta in partitions_of(m2):
            left = evaluator(lam, d, (), alpha + beta, k, n)
            right = coproduct_rhs(lam, d, alpha, beta, k, n, evaluator)
            checked += 1
            if left != right:
                return TheoremReport(lam, d, k, n, checked, (alpha, beta, str(left), str(right)))
    return TheoremReport(lam, d, k, n, checked, None)


def verify_skew_decomposition(lam, d: int, mu, alpha: Sequence[int], k: int, n: int) -> bool:
    """Skew cylindric character against its Gromov-Witten expansion into straight ones."""
    from .coefficient_algebra import TPoly
    from .cylindric import cyl_char_transfer

    lam, mu = make_partition(lam), make_partition(mu)
    total = TPoly()
    for d1 in range(d + 1):
        for nu in partitions_in_box(k, n - k):
            c = gw_invariant(lam, d - d1, mu, nu, k, n)
            if c:
                total = total + c * cyl_char_transfer(nu, d1, (), alpha, k, n)
    return total == cyl_char_transfer(lam, d, mu, alpha, k, n)
