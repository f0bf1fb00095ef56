"""
Scaling sweep: run each exact problem for m = 2^lo .. 2^hi (n = 2m), write
one CSV of all rows and print the fitted exponent of mean per-op work
against m.

    python scripts/benchmark.py --lo 10 --hi 14 --ops 400 --out sweep.csv
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from config.logging_config import setup_logging  # noqa: E402
from src.bench.report import fit_exponent, write_workload_csv  # noqa: E402
from src.bench.runner import run_workloads  # noqa: E402
from src.bench.workload import parse_workload  # noqa: E402

logger = logging.getLogger("benchmark")


def main() -> int:
    parser = argparse.ArgumentParser(description="Sweep m over powers of two")
    parser.add_argument("--problems", nargs="+", default=["hd", "ip", "em"])
    parser.add_argument("--lo", type=int, default=10)
    parser.add_argument("--hi", type=int, default=14)
    parser.add_argument("--ops", type=int, default=400)
    parser.add_argument("--sigma", type=int, default=2)
    parser.add_argument("--mode", choices=["amortized", "deamortized"], default="amortized")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="-")
    args = parser.parse_args()
    setup_logging("INFO")

    ms = [1 << k for k in range(args.lo, args.hi + 1)]
    specs = [
        parse_workload(problem=p, n=2 * m, m=m, sigma=args.sigma, count=args.ops,
                       seed=args.seed, mode=args.mode)
        for p in args.problems
        for m in ms
    ]
    reports = run_workloads(specs, workers=args.workers, verify=False)

    rows = [row for report in reports for row in report.rows]
    write_workload_csv(rows, sys.stdout if args.out == "-" else args.out)

    per_problem: Dict[str, List[float]] = {}
    for report in reports:
        per_problem.setdefault(report.spec.problem, []).append(report.mean_work_per_op)
    for problem, work in per_problem.items():
        logger.info(f"{problem}: per-op work exponent {fit_exponent(ms, work):.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
