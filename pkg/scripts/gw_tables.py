"""Tabulate Gromov-Witten invariants by rim hooks and compare with the Bethe route."""
import argparse
from dataclasses import dataclass

from cylhecke.bethe_numeric import bvi_gw_numeric
from cylhecke.combinatorics import partitions_in_box
from cylhecke.quantum_cohomology import gw_invariant, gw_table


@dataclass
class Config:
    k: int = 2
    n: int = 5
    max_degree: int = 2
    compare_bethe: bool = True


def run(cfg: Config) -> int:
    rows = gw_table(cfg.k, cfg.n, cfg.max_degree)
    for lam, d, mu, nu, value in rows:
        print(f"<{lam}, {mu}, {nu}>_{d} = {value}")
    mismatches = 0
    if cfg.compare_bethe:
        box = partitions_in_box(cfg.k, cfg.n - cfg.k)
        for lam in box:
            for mu in box:
                for nu in box:
                    for d, value in bvi_gw_numeric(lam, mu, nu, cfg.k, cfg.n):
                        mismatches += value != gw_invariant(lam, d, mu, nu, cfg.k, cfg.n)
        print(f"Bethe vs rim hook mismatches: {mismatches}")
    return mismatches


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    raise SystemExit(1 if run(Config(a.k, a.n, a.max_degree)) else 0)
