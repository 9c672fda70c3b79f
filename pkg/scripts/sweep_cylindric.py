"""Sweep cylindric characters over several windows and time the three evaluators."""
import argparse
import time
from dataclasses import dataclass, field

from cylhecke.combinatorics import partitions_in_box, partitions_of, weight
from cylhecke.cylindric import cyl_char_mn, cyl_char_transfer, cyl_char_virtual

EVALUATORS = {"recursion": cyl_char_mn, "virtual": cyl_char_virtual, "transfer": cyl_char_transfer}


@dataclass
class Config:
    windows: list = field(default_factory=lambda: [(1, 2), (1, 3), (2, 4), (2, 5)])
    max_weight: int = 7


def run(cfg: Config) -> int:
    disagreements = 0
    for k, n in cfg.windows:
        seconds = dict.fromkeys(EVALUATORS, 0.0)
        count = 0
        for lam in partitions_in_box(k, n - k):
            for d in range(cfg.max_weight // n + 1):
                m = weight(lam) + d * n
                if m > cfg.max_weight:
                    continue
                for alpha in partitions_of(m):
                    values = []
                    for name, f in EVALUATORS.items():
                        start = time.perf_counter()
                        values.append(f(lam, d, (), alpha, k, n))
                        seconds[name] += time.perf_counter() - start
                    count += 1
                    if len(set(map(str, values))) != 1:
                        disagreements += 1
                        print("disagreement", (k, n, lam, d, alpha), values)
        timing = ", ".join(f"{name} {s:.2f}s" for name, s in seconds.items())
        print(f"Gr({k},{n}): {count} characters; {timing}")
    print(f"disagreements: {disagreements}")
    return disagreements


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=Config.max_weight)
    raise SystemExit(1 if run(Config(max_weight=ap.parse_args().max_weight)) else 0)
