"""Run the acceptance criteria and show only their verdict lines."""
import subprocess
import sys
from dataclasses import dataclass
from pathlib import Path


@dataclass
class Config:
    test_file: Path = Path(__file__).resolve().parent.parent / "tests" / "test_acceptance.py"


def run(cfg: Config) -> int:
    proc = subprocess.run([sys.executable, "-m", "pytest", str(cfg.test_file), "-q"],
                          capture_output=True, text=True)
    lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("PASS", "FAIL"))]
    print("\n".join(lines))
    print(proc.stdout.strip().splitlines()[-1])
    return proc.returncode


if __name__ == "__main__":
    raise SystemExit(run(Config()))
