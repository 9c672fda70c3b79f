"""Print Hecke character tables and their t = 1 specialisations."""
import argparse
from dataclasses import dataclass

from cylhecke.coefficient_algebra import classical_character
from cylhecke.combinatorics import partitions_of
from cylhecke.hecke_characters import character_table


@dataclass
class Config:
    max_m: int = 5
    check_t_one: bool = True


def run(cfg: Config) -> None:
    for m in range(1, cfg.max_m + 1):
        rows, cols, table = character_table(m)
        print(f"m = {m}: {len(rows)} x {len(cols)}")
        for lam, row in zip(rows, table):
            print("  ", lam, " | ".join(str(v) for v in row))
        if cfg.check_t_one:
            ok = all(table[i][j].at_one() == classical_character(lam, alpha)
                     for i, lam in enumerate(rows) for j, alpha in enumerate(cols))
            print(f"   t=1 matches symmetric group: {ok}")
        assert len(rows) == len(partitions_of(m))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    run(Config(max_m=ap.parse_args().max_m))
