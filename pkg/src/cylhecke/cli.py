"""Command-line front end: character tables, Gromov-Witten tables and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .combinatorics import (
    format_partition,
    in_box,
    parse_partition,
    partitions_in_box,
    partitions_of,
    weight,
)

SUITES = ("abcd", "rtt", "cyl3way", "theorem-main", "bethe", "char-schur", "fock")
FORMATS = ("json", "csv", "latex")


@dataclass
class ReportDocument:
    command: str
    parameters: dict
    payload: dict  # {"headers": [...], "rows": [[...], ...]}, all cells strings
    status: str = "ok"
    counterexamples: list = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls(**json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.payload["headers"])
        writer.writerows(self.payload["rows"])
        return buf.getvalue()

    def to_latex(self) -> str:
        headers = self.payload["headers"]
        lines = [r"\begin{tabular}{" + "l" * len(headers) + "}", " & ".join(_tex(h) for h in headers) + r" \\", r"\hline"]
        for row in self.payload["rows"]:
            lines.append(" & ".join(_tex(c) for c in row) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "latex": self.to_latex}[fmt]()


def _tex(cell: str) -> str:
    cell = str(cell)
    if cell.startswith("["):
        return r"$\varnothing$" if cell == "[]" else "$(" + cell[1:-1] + ")$"
    if "t" in cell and re.fullmatch(r"[-+0-9t^]+", cell):
        return "$" + re.sub(r"\^(-?\d+)", r"^{\1}", cell) + "$"
    return cell


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_char_table(m: int) -> ReportDocument:
    from .hecke_characters import character_table

    if not 1 <= m <= 10:
        raise ValueError("m must lie in 1..10")
    rows, cols, table = character_table(m)
    payload = {
        "headers": ["lambda"] + [format_partition(c) for c in cols],
        "rows": [[format_partition(r)] + [str(v) for v in line] for r, line in zip(rows, table)],
    }
    return ReportDocument("char-table", {"m": m}, payload)


def cmd_gw_table(k: int, n: int, dmax: int) -> ReportDocument:
    from .quantum_cohomology import gw_table

    if not 2 <= n <= 8 or not 0 <= k <= n or dmax < 0:
        raise ValueError("need 2 <= n <= 8, 0 <= k <= n, dmax >= 0")
    rows = [
        [format_partition(lam), str(d), format_partition(mu), format_partition(nu), str(v)]
        for lam, d, mu, nu, v in gw_table(k, n, dmax)
    ]
    payload = {"headers": ["lambda", "d", "mu", "nu", "value"], "rows": rows}
    return ReportDocument("gw-table", {"k": k, "n": n, "dmax": dmax}, payload)


class _Checks:
    def __init__(self, timing: bool):
        self.rows: list = []
        self.failures: list = []
        self.timing = timing

    def run(self, name: str, fn):
        start = time.perf_counter()
        ok, count, detail = fn()
        row = [name, "pass" if ok else "fail", str(count), detail if not ok else ""]
        if self.timing:
            row.append(f"{time.perf_counter() - start:.3f}")
        self.rows.append(row)
        if not ok:
            self.failures.append({"check": name, "detail": detail})


def _suite_abcd(checks: _Checks, opts) -> None:
    from .six_vertex import verify_abcd_vs_bruteforce

    for n in range(1, opts.n + 1):

        def fn(n=n):
            rep = verify_abcd_vs_bruteforce(n)
            return rep.ok, rep.checked, repr(rep.mismatches[:1])

        checks.run(f"abcd n={n}", fn)


def _suite_rtt(checks: _Checks, opts) -> None:
    from .six_vertex import commutator_vanishes, deterministic_points, rtt_check

    points = deterministic_points(opts.points)

    def rtt():
        rep = rtt_check(opts.n, points)
        return rep.ok, rep.points, repr(rep.failures[:1])

    checks.run(f"rtt n={opts.n}", rtt)

    def commute():
        count, bad = 0, None
        q = Fraction(2, 3)
        for k in range(opts.n + 1):
            for xi, xj, a, b, a2, b2 in points:
                count += 1
                if not commutator_vanishes(k, opts.n, (xi, a, b), (xj, a2, b2), q):
                    bad = bad or (k, str((xi, xj, a, b, a2, b2)))
        return bad is None, count, repr(bad)

    checks.run(f"commutation n={opts.n}", commute)


def _suite_cyl3way(checks: _Checks, opts) -> None:
    from .cylindric import cyl_char_at_one, cyl_char_mn, cyl_char_transfer, cyl_char_virtual

    k, n = opts.kn
    mu = opts.mu or ()
    lams = [opts.lam] if opts.lam is not None else partitions_in_box(k, n - k)
    for lam in lams:

        def fn(lam=lam):
            count, bad = 0, None
            for total in range(weight(lam), opts.max_weight + 1):
                if (total - weight(lam)) % n or total < weight(mu):
                    continue
                d = (total - weight(lam)) // n
                m = total - weight(mu)
                contents = [opts.content] if opts.content is not None else partitions_of(m)
                for alpha in contents:
                    if sum(alpha) != m:
                        continue
                    x = cyl_char_mn(lam, d, mu, alpha, k, n)
                    y = cyl_char_virtual(lam, d, mu, alpha, k, n)
                    z = cyl_char_transfer(lam, d, mu, alpha, k, n)
                    w = cyl_char_at_one(lam, d, mu, alpha, k, n)
                    count += 1
                    if not (x == y == z and x.at_one() == w) and bad is None:
                        bad = f"d={d} alpha={format_partition(alpha)}: {x} | {y} | {z} | {w}"
            return bad is None, count, bad or ""

        checks.run(f"cyl3way {format_partition(lam)}", fn)


def _suite_theorem(checks: _Checks, opts) -> None:
    from .quantum_cohomology import verify_theorem_main

    k, n = opts.kn
    lam = opts.lam if opts.lam is not None else ()
    m = weight(lam) + opts.d * n
    for m1 in range(m + 1):

        def fn(m1=m1):
            rep = verify_theorem_main(lam, opts.d, k, n, m1, m - m1)
            return rep.ok, rep.checked, repr(rep.witness)

        checks.run(f"coproduct m'={m1} m''={m - m1}", fn)


def _suite_bethe(checks: _Checks, opts) -> None:
    from . import bethe_numeric as bn

    windows = [opts.kn] if opts.kn else [(k, n) for n in range(1, opts.n + 1) for k in range(n + 1)]
    for k, n in windows:
        for name, make in (
            ("eigen", lambda: bn.verify_eigen(k, n, -1.0, 2.0, 0.3, opts.q, opts.tol)),
            ("completeness", lambda: bn.completeness_check(k, n, opts.q, opts.tol)),
            ("ideal", lambda: bn.ideal_relations_check(k, n, -1.0, 2.0, opts.q, tol=opts.tol)),
            ("polynomiality", lambda: bn.eigenvalue_polynomiality_check(k, n, -1.0, 2.0, opts.q, tol=opts.tol)),
            ("idempotents", lambda: bn.idempotent_check(k, n, opts.q, opts.tol)),
        ):

            def fn(make=make):
                rep = make()
                return rep.ok, len(rep.residuals), f"worst residual {rep.worst:.3e}"

            checks.run(f"{name} k={k} n={n}", fn)


def _suite_char_schur(checks: _Checks, opts) -> None:
    from .cylindric import cyl_schur_from_expansion, cyl_schur_tableaux, verify_char_to_schur

    k, n = opts.kn
    lams = [opts.lam] if opts.lam is not None else partitions_in_box(k, n - k)
    for lam in lams:

        def char_side(lam=lam):
            rep = verify_char_to_schur(lam, k, n, opts.nvars, opts.max_weight)
            return rep.ok, rep.compared, repr(rep.mismatch)

        def tableaux(lam=lam):
            count, bad = 0, None
            d = 0
            while weight(lam) + d * n <= opts.max_weight:
                a = cyl_schur_tableaux(lam, d, (), k, n, opts.nvars, opts.max_weight)
                b = cyl_schur_from_expansion(lam, d, (), k, n, opts.nvars, opts.max_weight)
                count += 1
                if a != b and bad is None:
                    bad = f"d={d}: {a.first_difference(b)}"
                d += 1
            return bad is None, count, bad or ""

        checks.run(f"characteristic map {format_partition(lam)}", char_side)
        checks.run(f"tableaux vs expansion {format_partition(lam)}", tableaux)


def _suite_fock(checks: _Checks, opts) -> None:
    from .six_vertex import verify_fock_layer

    rep = verify_fock_layer(opts.max_weight)
    for name, (count, first) in rep.checks.items():
        checks.run(name, lambda count=count, first=first: (first is None, count, repr(first)))


_SUITE_RUNNERS = {
    "abcd": _suite_abcd,
    "rtt": _suite_rtt,
    "cyl3way": _suite_cyl3way,
    "theorem-main": _suite_theorem,
    "bethe": _suite_bethe,
    "char-schur": _suite_char_schur,
    "fock": _suite_fock,
}


def cmd_verify(suite: str, opts) -> ReportDocument:
    if suite not in _SUITE_RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    checks = _Checks(getattr(opts, "timing", False))
    _SUITE_RUNNERS[suite](checks, opts)
    headers = ["check", "status", "count", "detail"] + (["seconds"] if checks.timing else [])
    params = {
        key: (format_partition(v) if key == "lam" and v is not None else list(v) if isinstance(v, tuple) else v)
        for key, v in sorted(vars(opts).items())
        if key not in ("func", "format", "out", "command", "suite", "timing")
    }
    return ReportDocument(
        f"verify {suite}",
        params,
        {"headers": headers, "rows": checks.rows},
        "ok" if not checks.failures else "fail",
        checks.failures,
    )


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _kn(text: str) -> tuple:
    try:
        k, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected K,N")
    if not 0 <= k <= n or n < 1:
        raise argparse.ArgumentTypeError("need 0 <= K <= N and N >= 1")
    return k, n


def _partition(text: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylhecke", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", default=None, help="write the document here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-table", parents=[common], help="Hecke character table of H_m(t)")
    p.add_argument("m", type=int)

    p = sub.add_parser("gw-table", parents=[common], help="Gromov-Witten invariants of Gr(k,n)")
    p.add_argument("--kn", type=_kn, required=True)
    p.add_argument("--d", type=int, default=2, help="largest degree")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--kn", type=_kn, default=None)
    p.add_argument("--lambda", dest="lam", type=_partition, default=None)
    p.add_argument("--mu", type=_partition, default=None)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--content", type=_partition, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--nvars", type=int, default=3)
    p.add_argument("--q", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--timing", action="store_true", help="add wall-clock seconds per check")
    return parser


_DEFAULTS = {
    "abcd": {"n": 4},
    "rtt": {"n": 2},
    "cyl3way": {"kn": (2, 4), "max_weight": 8},
    "theorem-main": {"kn": (1, 2), "lam": (1,)},
    "bethe": {"n": 6},
    "char-schur": {"kn": (2, 4), "max_weight": 6},
    "fock": {"max_weight": 8},
}


def _emit(doc: ReportDocument, opts) -> None:
    text = doc.render(opts.format)
    if opts.out:
        with open(opts.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        if opts.command == "char-table":
            if not 1 <= opts.m <= 10:
                parser.error("m must lie in 1..10")
            doc = cmd_char_table(opts.m)
        elif opts.command == "gw-table":
            k, n = opts.kn
            if not 2 <= n <= 8 or opts.d < 0:
                parser.error("gw-table needs 2 <= n <= 8 and d >= 0")
            doc = cmd_gw_table(k, n, opts.d)
        else:
            if opts.suite not in SUITES:
                parser.error(f"unknown suite {opts.suite!r}; choose from {', '.join(SUITES)}")
            for key, value in _DEFAULTS[opts.suite].items():
                if getattr(opts, key) is None:
                    setattr(opts, key, value)
            if opts.kn is not None:
                k, n = opts.kn
                for label in (opts.lam, opts.mu):
                    if label is not None and not in_box(label, k, n - k):
                        parser.error(f"{format_partition(label)} is not in the {k} x {n - k} box")
            doc = cmd_verify(opts.suite, opts)
    except ValueError as exc:
        parser.error(str(exc))
    _emit(doc, opts)
    return 0 if doc.status == "ok" else 1


if __name__ == "__main__":
    raise SystemExit(main())
