"""Exact coefficient rings and classical symmetric-function oracles.

* :class:`TPoly`: integer Laurent polynomials in ``t``.
* :class:`QSeries`: polynomials in ``q`` truncated above a fixed degree, over TPoly.
* :class:`MPoly`: sparse integer polynomials in named variables.
* :class:`MonomialExpansion`: symmetric polynomials in ``N`` variables in the monomial basis.

The oracles (Murnaghan-Nakayama, hook lengths, Littlewood-Richardson,
Kostka numbers, power-sum plethysm, numeric Schur polynomials) are classical
and deliberately independent of the t-deformed machinery.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

import numpy as np

from .combinatorics import (
    conjugate,
    contains,
    make_partition,
    partitions_of,
    weight,
)


# --------------------------------------------------------------------------
# TPoly
# --------------------------------------------------------------------------

class TPoly:
    """Integer Laurent polynomial in ``t``; immutable, no zero coefficients stored."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(v) for e, v in (coeffs or {}).items() if v}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, value: int) -> "TPoly":
        return cls({0: value})

    @classmethod
    def t(cls, power: int = 1) -> "TPoly":
        return cls({power: 1})

    @classmethod
    def coerce(cls, value) -> "TPoly":
        if isinstance(value, TPoly):
            return value
        if isinstance(value, (int, np.integer)):
            return cls({0: int(value)})
        if isinstance(value, Fraction) and value.denominator == 1:
            return cls({0: value.numerator})
        raise TypeError(f"cannot coerce {value!r} to TPoly")

    # introspection
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    # arithmetic
    def __add__(self, other):
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        try:
            other = TPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return TPoly({e: v * int(other) for e, v in self._c.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        out: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return TPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __pow__(self, power: int):
        if power < 0:
            if len(self._c) == 1:
                (e, v), = self._c.items()
                if v in (1, -1):
                    return TPoly({e * power: v ** (-power)})
            raise ValueError("only monomials with unit coefficient are invertible")
        result = TPoly.const(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = TPoly.const(int(other))
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # evaluation and division
    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value):
        total = 0
        for e, v in self._c.items():
            total += v * (value ** e if e >= 0 else 1 / value ** (-e))
        return total

    def at_one(self) -> int:
        return sum(self._c.values())

    def divmod_linear(self, root: int) -> tuple:
        """Divide by ``(t - root)``; return ``(quotient, remainder)`` for polynomials."""
        if not self._c:
            return TPoly(), 0
        low = min(self._c)
        if low < 0:
            shifted = TPoly({e - low: v for e, v in self._c.items()})
            quo, rem = shifted.divmod_linear(root)
            if rem:
                return quo, rem
            return TPoly({e + low: v for e, v in quo._c.items()}), 0
        deg = max(self._c)
        carry = 0
        quotient = {}
        for e in range(deg, 0, -1):
            carry = carry * root + self._c.get(e, 0)
            quotient[e - 1] = carry
        remainder = carry * root + self._c.get(0, 0)
        return TPoly(quotient), remainder

    def exact_div_t_minus_one(self, times: int = 1) -> "TPoly":
        out = self
        for _ in range(times):
            out, rem = out.divmod_linear(1)
            if rem:
                raise ArithmeticError(f"{self} is not divisible by (t-1)^{times}")
        return out

    # text
    def __str__(self):
        if not self._c:
            return "0"
        pieces = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"TPoly({self})"

    _TERM = re.compile(r"([+-]?)(\d*)(t(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> "TPoly":
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        coeffs: dict = {}
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r}")
            sign, digits, var, exp = m.groups()
            if not digits and not var:
                raise ValueError(f"cannot parse {text!r}")
            mag = int(digits) if digits else 1
            e = (int(exp) if exp else 1) if var else 0
            coeffs[e] = coeffs.get(e, 0) + (-mag if sign == "-" else mag)
            pos = m.end()
        return cls(coeffs)


T = TPoly.t()
ONE = TPoly.const(1)
ZERO = TPoly()


def t_integer(m: int) -> TPoly:
    """``1 + t + ... + t^(m-1)``, i.e. ``(t^m - 1)/(t - 1)`` for ``m >= 0``."""
    return TPoly({e: 1 for e in range(m)})


# --------------------------------------------------------------------------
# QSeries
# --------------------------------------------------------------------------

class QSeries:
    """Polynomial in ``q`` with coefficients in a ring, truncated above degree ``cap``."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs: Sequence, cap: int):
        self.cap = cap
        cs = list(coeffs)[: cap + 1]
        zero = TPoly()
        cs += [zero] * (cap + 1 - len(cs))
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, cap: int) -> "QSeries":
        return cls([value], cap)

    @classmethod
    def monomial(cls, value, degree: int, cap: int) -> "QSeries":
        if degree > cap:
            return cls([], cap)
        return cls([TPoly()] * degree + [value], cap)

    def coefficient(self, d: int):
        return self.coeffs[d] if 0 <= d <= self.cap else TPoly()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _lift(self, other):
        if isinstance(other, QSeries):
            return other
        return QSeries.constant(other, self.cap)

    def __add__(self, other):
        other = self._lift(other)
        cap = min(self.cap, other.cap)
        return QSeries([a + b for a, b in zip(self.coeffs[: cap + 1], other.coeffs[: cap + 1])], cap)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.cap)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([c * other for c in self.coeffs], self.cap)
        cap = min(self.cap, other.cap)
        out = [TPoly() for _ in range(cap + 1)]
        for i, a in enumerate(self.coeffs[: cap + 1]):
            if a == 0:
                continue
            for j in range(cap + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return QSeries(out, cap)

    def __rmul__(self, other):
        return QSeries([other * c for c in self.coeffs], self.cap)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            other = self._lift(other)
        cap = min(self.cap, other.cap)
        return all(a == b for a, b in zip(self.coeffs[: cap + 1], other.coeffs[: cap + 1]))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})q^{d}" for d, c in enumerate(self.coeffs) if c != 0]
        return "QSeries(" + (" + ".join(terms) or "0") + f"; cap={self.cap})"


# --------------------------------------------------------------------------
# MPoly
# --------------------------------------------------------------------------

class MPoly:
    """Sparse integer polynomial; exponent tuples index a fixed variable list."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[tuple, int] | None = None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {tuple(e): int(v) for e, v in (terms or {}).items() if v}

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MPoly":
        e = [0] * nvars
        e[index] = 1
        return cls({tuple(e): 1}, nvars)

    @classmethod
    def const(cls, value: int, nvars: int) -> "MPoly":
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient: int = 1) -> "MPoly":
        return cls({tuple(exponents): coefficient}, len(exponents))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, np.integer)):
            return MPoly.const(int(other), self.nvars)
        raise TypeError

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, v in other.terms.items():
            out[e] = out.get(e, 0) + v
        return MPoly(out, max(self.nvars, other.nvars))

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -v for e, v in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + v1 * v2
        return MPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        result = MPoly.const(1, self.nvars)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, v in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"w{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p)
            parts.append(f"{v}" + ("*" + mono if mono else ""))
        return " + ".join(parts)


# --------------------------------------------------------------------------
# monomial expansions
# --------------------------------------------------------------------------

class MonomialExpansion:
    """Symmetric polynomial in ``nvars`` variables stored as ``{partition: coefficient}``."""

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        self.terms: dict = {}
        for key, value in (terms or {}).items():
            self.add(key, value)

    def add(self, exponents: Sequence[int], value) -> None:
        key = make_partition(sorted((e for e in exponents if e), reverse=True))
        if len(key) > self.nvars:
            return
        new = self.terms.get(key, 0) + value
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def coefficient(self, mu: Sequence[int]):
        return self.terms.get(tuple(mu), 0)

    def truncate(self, max_degree: int) -> "MonomialExpansion":
        return MonomialExpansion(self.nvars, {k: v for k, v in self.terms.items() if weight(k) <= max_degree})

    def __add__(self, other: "MonomialExpansion"):
        out = MonomialExpansion(self.nvars, self.terms)
        for k, v in other.terms.items():
            out.add(k, v)
        return out

    def scale(self, factor) -> "MonomialExpansion":
        return MonomialExpansion(self.nvars, {k: factor * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def first_difference(self, other: "MonomialExpansion"):
        for k in sorted(set(self.terms) | set(other.terms), key=lambda p: (weight(p), p)):
            if self.coefficient(k) != other.coefficient(k):
                return k, self.coefficient(k), other.coefficient(k)
        return None

    def __repr__(self):
        return f"MonomialExpansion({self.nvars}, {self.terms})"


# --------------------------------------------------------------------------
# classical oracles
# --------------------------------------------------------------------------

def _single_hook_removals(lam: Sequence[int], r: int) -> list:
    """Partitions obtained by deleting one border strip of size ``r``, with its row count."""
    ell = len(lam)
    beta = [lam[j] - j for j in range(ell)]
    present = set(beta)
    out = []
    for p in beta:
        target = p - r
        if target in present or target < -(ell - 1):
            continue
        rows = 1 + sum(1 for x in beta if target < x < p)
        moved = sorted([x for x in beta if x != p] + [target], reverse=True)
        out.append((make_partition(x + j for j, x in enumerate(moved)), rows))
    return out


@lru_cache(maxsize=None)
def classical_character(lam: tuple, alpha: tuple) -> int:
    """Symmetric-group character by the Murnaghan-Nakayama recursion (strips the last part)."""
    lam = make_partition(lam)
    alpha = tuple(alpha)
    if weight(lam) != sum(alpha):
        raise ValueError("weight mismatch")
    if not alpha:
        return 1
    r = alpha[-1]
    total = 0
    for smaller, rows in _single_hook_removals(lam, r):
        total += (-1) ** (rows - 1) * classical_character(smaller, alpha[:-1])
    return total


def hook_length_dimension(lam: Sequence[int]) -> int:
    lam = make_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(weight(lam)) // prod


def centralizer_size(rho: Sequence[int]) -> int:
    """``z_rho = prod_i i^{m_i} m_i!``."""
    out = 1
    for part in set(rho):
        m = list(rho).count(part)
        out *= part ** m * math.factorial(m)
    return out


def class_size(rho: Sequence[int]) -> int:
    return math.factorial(sum(rho)) // centralizer_size(rho)


@lru_cache(maxsize=None)
def kostka(lam: tuple, content: tuple) -> int:
    """Number of semistandard tableaux of shape ``lam`` with the given content (any order)."""
    content = tuple(c for c in content)
    if weight(lam) != sum(content):
        return 0
    if not content:
        return 1
    last = content[-1]
    total = 0
    # remove a horizontal strip of size `last` holding the largest letter
    for smaller in _horizontal_strip_removals(lam, last):
        total += kostka(smaller, content[:-1])
    return total


def _horizontal_strip_removals(lam: Sequence[int], size: int) -> list:
    lam = list(lam)
    out = []

    def rec(i, remaining, acc):
        if i == len(lam):
            if remaining == 0:
                out.append(make_partition(acc))
            return
        lower = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(0, min(remaining, lam[i] - lower) + 1):
            rec(i + 1, remaining - take, acc + [lam[i] - take])

    rec(0, size, [])
    return out


def _lr_fill(lam, mu, nu) -> int:
    """Count LR tableaux of shape lam/mu, content nu; rows are read right to left, top to bottom."""
    ell = len(lam)
    mu = list(mu) + [0] * (ell - len(mu))
    rows = [(mu[i], lam[i]) for i in range(ell)]
    letters = len(nu)
    count = 0

    def weak_rows(width, lowest):
        if width == 0:
            yield []
            return
        for first in range(lowest, letters + 1):
            for rest in weak_rows(width - 1, first):
                yield [first] + rest

    def fill(i, prev, counts):
        nonlocal count
        if i == ell:
            count += 1
            return
        start, end = rows[i]
        for row in weak_rows(end - start, 1):
            c = list(counts)
            ok = True
            for letter in reversed(row):
                c[letter - 1] += 1
                if c[letter - 1] > nu[letter - 1] or (letter > 1 and c[letter - 1] > c[letter - 2]):
                    ok = False
                    break
            if ok and _check_columns(i, row, start, prev, rows):
                fill(i + 1, row, tuple(c))

    fill(0, None, (0,) * letters)
    return count


def _check_columns(i, row, start, prev, rows):
    if prev is None:
        return True
    pstart, _ = rows[i - 1]
    for offset, value in enumerate(row):
        col = start + offset
        k = col - pstart
        if 0 <= k < len(prev) and prev[k] >= value:
            return False
    return True


@lru_cache(maxsize=None)
def lr_coefficient(lam: tuple, mu: tuple, nu: tuple) -> int:
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if weight(lam) != weight(mu) + weight(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    return _lr_fill(lam, mu, nu)


def schur_product_oracle(mu: Sequence[int], nu: Sequence[int]) -> dict:
    """Schur expansion of ``s_mu * s_nu`` from monomial coefficients and Kostka inversion."""
    mu, nu = make_partition(mu), make_partition(nu)
    m = weight(mu) + weight(nu)
    monomial_coeffs = {}
    for kappa in partitions_of(m):
        total = 0
        # split the exponent vector kappa into a + b with |a| = |mu|
        for a in _vector_splits(kappa, weight(mu)):
            b = tuple(x - y for x, y in zip(kappa, a))
            total += kostka(mu, a) * kostka(nu, b)
        monomial_coeffs[kappa] = total
    result = {}
    for lam in partitions_of(m):  # reverse lex: dominance-compatible leading order
        c = monomial_coeffs[lam]
        if c:
            result[lam] = c
            for kappa in partitions_of(m):
                monomial_coeffs[kappa] -= c * kostka(lam, kappa)
    return result


def _vector_splits(vec: Sequence[int], total: int):
    if not vec:
        if total == 0:
            yield ()
        return
    for x in range(min(vec[0], total) + 1):
        for rest in _vector_splits(vec[1:], total - x):
            yield (x,) + rest


# --------------------------------------------------------------------------
# power sums and the (t-1) alphabet
# --------------------------------------------------------------------------

def _power_sum_to_monomial(rho: Sequence[int], mu: Sequence[int]) -> int:
    """Coefficient of ``m_mu`` in ``p_rho``: ways to distribute the parts of rho into the parts of mu."""
    targets = list(mu)

    def rec(idx, remaining):
        if idx == len(rho):
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        for j in range(len(remaining)):
            if remaining[j] >= rho[idx]:
                remaining[j] -= rho[idx]
                total += rec(idx + 1, remaining)
                remaining[j] += rho[idx]
        return total

    return rec(0, targets)


def _t_power_minus_one(r: int) -> dict:
    return {r: Fraction(1), 0: Fraction(-1)}


def _frac_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return out


@lru_cache(maxsize=None)
def schur_in_tminus1_alphabet(lam: tuple, nvars: int) -> MonomialExpansion:
    """``s_lam[(t-1)X]`` in ``nvars`` variables via ``p_r -> (t^r - 1) p_r``."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    lam = make_partition(lam)
    m = weight(lam)
    acc: dict = {}
    for rho in partitions_of(m):
        chi = classical_character(lam, rho)
        if chi == 0:
            continue
        factor = {0: Fraction(chi, centralizer_size(rho))}
        for part in rho:
            factor = _frac_mul(factor, _t_power_minus_one(part))
        for mu in partitions_of(m, None, nvars):
            mult = _power_sum_to_monomial(rho, mu)
            if not mult:
                continue
            bucket = acc.setdefault(mu, {})
            for e, v in factor.items():
                bucket[e] = bucket.get(e, 0) + v * mult
    out = MonomialExpansion(nvars)
    for mu, poly in acc.items():
        coeffs = {}
        for e, v in poly.items():
            if v.denominator != 1:
                raise ArithmeticError("power-sum expansion failed to clear denominators")
            coeffs[e] = v.numerator
        value = TPoly(coeffs)
        if value:
            out.add(mu, value)
    return out


# --------------------------------------------------------------------------
# numeric Schur polynomials
# --------------------------------------------------------------------------

def schur_numeric(lam: Sequence[int], values: Sequence[complex]) -> complex:
    """Bialternant ``det(x_i^{lam_j + N - j}) / det(x_i^{N - j})``."""
    xs = np.asarray(values, dtype=complex)
    N = len(xs)
    lam = list(lam)
    if len(lam) > N:
        return 0j
    if N == 0:
        return 1 + 0j
    for a in range(N):
        for b in range(a + 1, N):
            if abs(xs[a] - xs[b]) < 1e-9:
                raise ValueError("values must be pairwise distinct")
    lam = lam + [0] * (N - len(lam))
    num = np.array([[x ** (lam[j] + N - 1 - j) for j in range(N)] for x in xs])
    den = np.array([[x ** (N - 1 - j) for j in range(N)] for x in xs])
    return complex(np.linalg.det(num) / np.linalg.det(den))


def complete_homogeneous_numeric(r: int, values: Sequence[complex]) -> complex:
    if r < 0:
        return 0j
    series = np.zeros(r + 1, dtype=complex)
    series[0] = 1
    for x in values:
        # multiply by 1/(1 - x z)
        for d in range(1, r + 1):
            series[d] += x * series[d - 1]
    return complex(series[r])


def jacobi_trudi_numeric(lam: Sequence[int], values: Sequence[complex]) -> complex:
    lam = list(lam)
    if not lam:
        return 1 + 0j
    ell = len(lam)
    mat = np.array(
        [[complete_homogeneous_numeric(lam[i] - i + j, values) for j in range(ell)] for i in range(ell)]
    )
    return complex(np.linalg.det(mat))


def symmetrize_check(poly_terms: Mapping[tuple, object]) -> bool:
    """Whether a polynomial given by full exponent vectors is symmetric."""
    for e, v in poly_terms.items():
        for perm in set(permutations(e)):
            if poly_terms.get(perm, 0) != v:
                return False
    return True

