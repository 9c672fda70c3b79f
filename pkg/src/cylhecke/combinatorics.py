"""Partitions, Maya diagrams, abacus cores, cylindric loops and broken rim hooks.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  Everything here is pure and immutable.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple


# --------------------------------------------------------------------------
# partitions
# --------------------------------------------------------------------------

def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise ``parts`` (trailing zeros are dropped)."""
    seq = [int(p) for p in parts]
    while seq and seq[-1] == 0:
        seq.pop()
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"parts must weakly decrease: {seq}")
    if any(p <= 0 for p in seq):
        raise ValueError(f"parts must be positive: {seq}")
    return tuple(seq)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def in_box(lam: Sequence[int], rows: int, cols: int) -> bool:
    """Whether ``lam`` fits in a ``rows`` x ``cols`` rectangle."""
    return len(lam) <= rows and (not lam or lam[0] <= cols)


@lru_cache(maxsize=None)
def partitions_of(m: int, max_part: int | None = None, max_length: int | None = None) -> tuple:
    """All partitions of ``m`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = m
    if max_length is None:
        max_length = m
    if m == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(rows: int, cols: int) -> tuple:
    """All partitions inside a ``rows`` x ``cols`` box, ordered by weight then reverse lex."""
    out = []
    for m in range(rows * cols + 1):
        out.extend(partitions_of(m, cols, rows))
    return tuple(out)


def compositions_of(m: int) -> Iterator[tuple]:
    if m == 0:
        yield ()
        return
    for first in range(1, m + 1):
        for rest in compositions_of(m - first):
            yield (first,) + rest


def cells(lam: Sequence[int]) -> set:
    return {(i + 1, j + 1) for i, p in enumerate(lam) for j in range(p)}


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"``, ``"[2,1]"``, ``"(2,1)"`` or ``""``/``"0"`` for the empty partition."""
    body = text.strip().strip("[]()").strip()
    if body in ("", "0", "-", "empty"):
        return ()
    return make_partition(int(x) for x in body.split(",") if x.strip())


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


# --------------------------------------------------------------------------
# Maya diagrams
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MayaDiagram:
    """Infinite binary string stored as ``(charge, partition)``.

    Position ``i`` carries a 1 exactly when ``i = charge + 1 + lam_j - j`` for
    some ``j >= 1`` (with ``lam_j = 0`` beyond the length of the partition).
    """

    charge: int
    partition: Partition

    @property
    def lower(self) -> int:
        """Every position at or below this one is occupied."""
        return self.charge - len(self.partition)

    @property
    def upper(self) -> int:
        """Every position at or above this one is empty."""
        return self.charge + 1 + (self.partition[0] if self.partition else 0)

    def occupied(self) -> frozenset:
        """Occupied positions strictly above :attr:`lower`."""
        c = self.charge
        return frozenset(c + 1 + p - j for j, p in enumerate(self.partition, start=1))

    def bit(self, i: int) -> int:
        if i <= self.lower:
            return 1
        if i >= self.upper:
            return 0
        return 1 if i in self.occupied() else 0

    def window(self, lo: int, hi: int) -> tuple:
        """Bits at positions ``lo .. hi - 1``."""
        occ = self.occupied()
        low = self.lower
        return tuple(1 if (i <= low or i in occ) else 0 for i in range(lo, hi))

    def charge_from_left(self) -> int:
        low = self.lower
        return low + sum(self.window(low + 1, self.upper + 1))

    def charge_from_right(self) -> int:
        up = self.upper
        return up - sum(1 - b for b in self.window(self.lower - 1, up + 1))


def maya_from_partition(lam: Sequence[int], charge: int) -> MayaDiagram:
    return MayaDiagram(int(charge), make_partition(lam))


def maya_from_window(bits: Sequence[int], start: int) -> MayaDiagram:
    """Decode a string that is all ones left of ``start`` and all zeros after the window.

    ``bits[j]`` is the letter at position ``start + j``.
    """
    if any(b not in (0, 1) for b in bits):
        raise ValueError("letters must be 0 or 1")
    charge = start - 1 + sum(bits)
    ones = sorted((start + j for j, b in enumerate(bits) if b), reverse=True)
    parts = [p - charge - 1 + j for j, p in enumerate(ones, start=1)]
    return MayaDiagram(charge, make_partition(p for p in parts if p > 0))


def partition_from_maya(sigma: MayaDiagram) -> tuple:
    """Re-derive ``(partition, charge)`` from the letters of ``sigma``."""
    lo, hi = sigma.lower - 1, sigma.upper + 1
    decoded = maya_from_window(sigma.window(lo, hi), lo)
    if decoded.charge != sigma.charge_from_left() or decoded.charge != sigma.charge_from_right():
        raise ValueError("inconsistent charge")
    return decoded.partition, decoded.charge


def string_to_partition(bits: Sequence[int]) -> Partition:
    """Finite string of length n with k ones -> partition in the k x (n-k) box."""
    ones = [i + 1 for i, b in enumerate(bits) if b]
    k = len(ones)
    return make_partition(p for p in (ones[k - j] - (k + 1 - j) for j in range(1, k + 1)) if p > 0)


def partition_to_string(lam: Sequence[int], k: int, n: int) -> tuple:
    if not in_box(lam, k, n - k):
        raise ValueError(f"{lam} does not fit in a {k} x {n - k} box")
    padded = list(lam) + [0] * (k - len(lam))
    ones = {k + 1 + padded[j - 1] - j for j in range(1, k + 1)}
    return tuple(1 if i in ones else 0 for i in range(1, n + 1))


# --------------------------------------------------------------------------
# abacus and cores
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CoreDecomposition:
    core: Partition
    n_weight: int
    removal_row_counts: tuple
    perm_sign: int


def _bead_positions(lam: Sequence[int], charge: int, n: int) -> tuple:
    """Occupied positions from a runner-aligned floor that lies below every gap."""
    sigma = MayaDiagram(charge, tuple(lam))
    floor = n * (sigma.lower // n)
    return floor, tuple(i for i in range(floor, sigma.upper) if sigma.bit(i))


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])


def abacus_sign(lam: Sequence[int], n: int, charge: int | None = None, reverse_runners: bool = False) -> tuple:
    """Slide every bead down its runner; return ``(core, n_weight, sign of bead relabelling)``.

    Beads carry their natural (increasing position) numbering from ``lam``; the
    sign is that of the permutation read off in the core's natural order.
    """
    if charge is None:
        charge = len(lam)
    floor, beads = _bead_positions(lam, charge, n)
    runners: dict = {}
    for label, pos in enumerate(beads):
        runners.setdefault((pos - floor) % n, []).append(label)
    order = sorted(runners, reverse=reverse_runners)
    placed = {}
    moved = 0
    for runner in order:
        labels = runners[runner]
        for height, label in enumerate(labels):
            new_pos = floor + runner + height * n
            placed[new_pos] = label
            moved += (beads[label] - new_pos) // n
    sequence = [placed[p] for p in sorted(placed)]
    lo = floor
    core = maya_from_window([1 if p in placed else 0 for p in range(lo, max(placed) + 2)], lo) if placed else None
    core_partition = core.partition if core else ()
    sign = -1 if _inversions(sequence) % 2 else 1
    return core_partition, moved, sign


def remove_rim_hooks(lam: Sequence[int], n: int, largest_first: bool = False) -> tuple:
    """Strip n-rim hooks one at a time; return ``(core, list of row counts)``."""
    charge = len(lam)
    occ = set(MayaDiagram(charge, tuple(lam)).occupied())
    low = charge - len(lam)
    full = lambda i: i <= low or i in occ  # noqa: E731
    rows = []
    while True:
        movable = sorted((p for p in occ if not full(p - n)), reverse=largest_first)
        if not movable:
            break
        p = movable[0]
        between = sum(1 for i in range(p - n + 1, p) if full(i))
        occ.discard(p)
        occ.add(p - n)
        rows.append(between + 1)
    ones = sorted(occ, reverse=True)
    parts = [p - charge - 1 + j for j, p in enumerate(ones, start=1)]
    return make_partition(x for x in parts if x > 0), rows


def core_decompose(lam: Sequence[int], n: int) -> CoreDecomposition:
    if n < 2:
        raise ValueError("n must be at least 2")
    lam = make_partition(lam)
    core, d, sign = abacus_sign(lam, n)
    core2, rows = remove_rim_hooks(lam, n)
    if core2 != core or len(rows) != d:
        raise AssertionError("abacus and hook stripping disagree")
    return CoreDecomposition(core, d, tuple(rows), sign)


def is_core(lam: Sequence[int], n: int) -> bool:
    return core_decompose(lam, n).n_weight == 0


# --------------------------------------------------------------------------
# broken rim hooks
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BrokenRimHookStats:
    """Row/column counts of every component plus untouched rows/columns of the window."""

    components: tuple = ()
    untouched_rows: int | None = None
    untouched_cols: int | None = None

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def total_length(self) -> int:
        return sum(r + c - 1 for r, c in self.components)

    def conjugate(self) -> "BrokenRimHookStats":
        return BrokenRimHookStats(
            tuple((c, r) for r, c in self.components), self.untouched_cols, self.untouched_rows
        )


def _interval_choices(bit, start: int, stop: int, remaining: int) -> Iterator[list]:
    """Disjoint position pairs ``(i, j)``, ``i < j``, 1 at ``i`` and 0 at ``j``, lengths summing to ``remaining``."""
    if remaining == 0:
        yield []
        return
    for i in range(start, stop):
        if not bit(i):
            continue
        for j in range(i + 1, i + remaining + 1):
            if bit(j):
                continue
            for rest in _interval_choices(bit, j + 1, stop, remaining - (j - i)):
                yield [(i, j)] + rest


def _stats_from_intervals(bit, intervals, rows: int | None, cols: int | None) -> BrokenRimHookStats:
    comps = []
    for i, j in intervals:
        r = 1 + sum(bit(p) for p in range(i + 1, j))
        comps.append((r, j - i - r + 1))
    ur = None if rows is None else rows - sum(r for r, _ in comps)
    uc = None if cols is None else cols - sum(c for _, c in comps)
    return BrokenRimHookStats(tuple(comps), ur, uc)


def enumerate_brh_additions(
    mu: Sequence[int],
    r: int,
    max_length: int | None = None,
    max_part: int | None = None,
    container: Sequence[int] | None = None,
) -> list:
    """All ``lam`` with ``lam / mu`` a broken rim hook of size ``r``.

    Each hook corresponds to moving a 1-letter of the Maya diagram from ``i`` to
    an empty slot ``j > i``; hooks are separated runs of such moves.  When both
    bounds are given the stats carry the untouched row and column counts of the
    ``max_length`` x ``max_part`` window.
    """
    if r < 0:
        raise ValueError("length must be nonnegative")
    mu = make_partition(mu)
    sigma = MayaDiagram(len(mu), mu)
    occ = sigma.occupied()
    low = sigma.lower
    bit = lambda i: 1 if (i <= low or i in occ) else 0  # noqa: E731
    rows = max_length
    cols = max_part
    out = []
    lo, hi = low - r, sigma.upper + r + 1
    base = list(sigma.window(lo, hi))
    for intervals in _interval_choices(bit, low + 1 - r, sigma.upper, r):
        bits = list(base)
        for i, j in intervals:
            bits[i - lo], bits[j - lo] = 0, 1
        lam = maya_from_window(bits, lo).partition
        if max_length is not None and len(lam) > max_length:
            continue
        if max_part is not None and lam and lam[0] > max_part:
            continue
        if container is not None and not contains(container, lam):
            continue
        out.append((lam, _stats_from_intervals(bit, intervals, rows, cols)))
    return out


def _components(cellset: set, neighbours) -> list:
    seen: set = set()
    comps = []
    for start in sorted(cellset):
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            cell = queue.popleft()
            comp.append(cell)
            for nb in neighbours(cell):
                if nb in cellset and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        comps.append(comp)
    return comps


def validate_brh_geometric(lam: Sequence[int], mu: Sequence[int]) -> BrokenRimHookStats | None:
    """Independent cell-set check of a skew shape; ``None`` when it is not a broken rim hook."""
    if not contains(lam, mu):
        return None
    skew = cells(lam) - cells(mu)
    for (i, j) in skew:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= skew:
            return None

    def nbrs(c):
        i, j = c
        return [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)]

    comps = []
    for comp in _components(skew, nbrs):
        comps.append((len({i for i, _ in comp}), len({j for _, j in comp})))
    comps.sort()
    return BrokenRimHookStats(tuple(comps))


# --------------------------------------------------------------------------
# cylindric loops and cylindric broken rim hooks
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CylindricLoop:
    """The shifted periodic sequence ``lam[r]_i`` with ``lam[r]_{i+k} = lam[r]_i - n + k``."""

    base: Partition
    shift: int
    k: int
    n: int
    _padded: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not in_box(self.base, self.k, self.n - self.k):
            raise ValueError(f"{self.base} not in the {self.k} x {self.n - self.k} box")
        object.__setattr__(self, "_padded", tuple(self.base) + (0,) * (self.k - len(self.base)))

    def __getitem__(self, i: int) -> int:
        m = i - self.shift
        m0 = (m - 1) % self.k + 1
        s = (m - m0) // self.k
        return self._padded[m0 - 1] + self.shift - s * (self.n - self.k)


@dataclass(frozen=True)
class CylindricShape:
    """Skew cylindric shape ``lam/d/mu`` on the cylinder ``Z x Z / (-k, n-k)Z``."""

    lam: Partition
    d: int
    mu: Partition
    k: int
    n: int

    def outer(self) -> CylindricLoop:
        return CylindricLoop(self.lam, self.d, self.k, self.n)

    def inner(self) -> CylindricLoop:
        return CylindricLoop(self.mu, 0, self.k, self.n)

    def is_valid(self) -> bool:
        if self.k == 0:
            return self.d == 0 or self.n > 0
        out, inn = self.outer(), self.inner()
        return all(inn[i] <= out[i] for i in range(1, self.k + 1))

    def fundamental_cells(self) -> list:
        """Cells ``(i, j)`` with ``1 <= i <= k``."""
        out, inn = self.outer(), self.inner()
        return [(i, j) for i in range(1, self.k + 1) for j in range(inn[i] + 1, out[i] + 1)]

    def reduce(self, cell: tuple) -> tuple:
        i, j = cell
        i0 = (i - 1) % self.k + 1
        s = (i - i0) // self.k
        return (i0, j + s * (self.n - self.k))

    def contains_cell(self, cell: tuple) -> bool:
        i, j = self.reduce(cell)
        return self.inner()[i] < j <= self.outer()[i]


def cylindric_brh_stats(shape: CylindricShape) -> BrokenRimHookStats | None:
    """Geometric stats of a cylindric skew shape, or ``None`` if it is not a broken rim hook.

    Components are found on the quotient with wrap-around adjacency and then
    lifted to a connected set of plane cells; rows and columns are counted on
    that lift.
    """
    if not shape.is_valid():
        return None
    fund = set(shape.fundamental_cells())
    if not fund:
        return BrokenRimHookStats((), shape.k, shape.n - shape.k)
    inside = shape.contains_cell
    for (i, j) in fund:
        if inside((i + 1, j)) and inside((i, j + 1)) and inside((i + 1, j + 1)):
            return None
    comps = []
    seen: set = set()
    for start in sorted(fund):
        if start in seen:
            continue
        lift = {start}
        seen.add(start)
        queue = deque([start])
        while queue:
            i, j = queue.popleft()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in lift or not inside(nb):
                    continue
                red = shape.reduce(nb)
                if red in seen:
                    return None  # the component touches its own translate
                seen.add(red)
                lift.add(nb)
                queue.append(nb)
        lifted_cells = {shape.reduce(c) for c in lift}
        if len(lifted_cells) != len(lift):
            return None  # component wraps onto itself
        comps.append((len({i for i, _ in lift}), len({j for _, j in lift})))
    comps.sort()
    rows_hit = sum(r for r, _ in comps)
    cols_hit = sum(c for _, c in comps)
    return BrokenRimHookStats(tuple(comps), shape.k - rows_hit, shape.n - shape.k - cols_hit)


def enumerate_cylindric_brh(mu: Sequence[int], r: int, d: int, k: int, n: int) -> list:
    """All ``lam`` in the ``k x (n-k)`` box with ``lam/d/mu`` a (cylindric) broken rim hook of size ``r``."""
    if not 0 <= r < n:
        raise ValueError("length must satisfy 0 <= r < n")
    if d not in (0, 1):
        raise ValueError("only d in {0, 1} is supported")
    mu = make_partition(mu)
    if d == 0:
        return enumerate_brh_additions(mu, r, max_length=k, max_part=n - k)
    size = weight(mu) + r - n
    if size < 0:
        return []
    out = []
    for lam in partitions_of(size, n - k, k):
        stats = cylindric_brh_stats(CylindricShape(lam, 1, mu, k, n))
        if stats is not None:
            out.append((lam, stats))
    return out
