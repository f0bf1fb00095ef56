"""
Command-line harness.

    dynstring-bench --problem hd --n 2048 --m 1024 --ops 1000 --ratio 1:1
    dynstring-bench --gadget omv_dynem --r 8 --seeds 10

Writes CSV to stdout or --out. Exit code 0 only when every embedded
correctness verdict passes, 1 when one fails, 2 on invalid input.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from config.logging_config import setup_logging
from config.settings import load_settings

from ..core.exceptions import DynStringError, WorkloadSpecError
from .report import write_gadget_csv, write_workload_csv
from .runner import GADGETS, run_gadget, run_workload
from .workload import PROBLEMS, parse_workload

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT_FAILED = 1
EXIT_INVALID_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynstring-bench",
        description="Benchmark dynamic string alignment structures and reduction gadgets.",
    )
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--problem", choices=PROBLEMS, help="Structure workload to run")
    target.add_argument("--gadget", choices=sorted(GADGETS), help="Reduction gadget to run")

    workload = parser.add_argument_group("workload")
    workload.add_argument("--n", type=int, help="Text length")
    workload.add_argument("--m", type=int, help="Pattern length")
    workload.add_argument("--sigma", type=int, default=2, help="Alphabet size")
    workload.add_argument("--model", choices=["pattern", "text", "both"], default="both",
                          help="Which strings receive updates")
    workload.add_argument("--ops", type=int, default=1000, help="Number of operations")
    workload.add_argument("--ratio", help="Update:query mix, e.g. 1:1")
    workload.add_argument("--epsilon", type=float, help="Approximation parameter (approx_hd)")
    workload.add_argument("--num-maps", type=int, help="Alphabet maps for large-alphabet approx_hd")
    workload.add_argument("--mode", choices=["amortized", "deamortized"], help="Rebuild strategy")

    gadget = parser.add_argument_group("gadget")
    gadget.add_argument("--r", type=int, default=8, help="Matrix / grid side")
    gadget.add_argument("--seeds", type=int, default=1, help="Number of consecutive seeds")
    gadget.add_argument("--repetitions", type=int, help="Trials per vector for randomized OMv")

    parser.add_argument("--seed", type=int, default=0, help="Base seed")
    parser.add_argument("--out", help="CSV file (default: stdout)")
    parser.add_argument("--config", help="YAML settings file")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    parser.add_argument("--no-verify", action="store_true", help="Skip oracle checks on exact problems")
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if args.log_level:
        overrides["log_level"] = args.log_level
    if args.mode:
        overrides.setdefault("engine", {})["mode"] = args.mode
    if args.ratio:
        overrides.setdefault("bench", {})["ratio"] = args.ratio
    if args.no_verify:
        overrides.setdefault("bench", {})["verify"] = False
    return overrides


def _run_problem(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    m = args.m if args.m is not None else (args.n // 2 if args.n else None)
    n = args.n if args.n is not None else (2 * args.m if args.m else None)
    if n is None or m is None:
        raise WorkloadSpecError("--problem needs --n or --m", {"n": "missing", "m": "missing"})
    spec = parse_workload(
        problem=args.problem,
        n=n,
        m=m,
        sigma=args.sigma,
        model=args.model,
        count=args.ops,
        ratio=settings["bench"]["ratio"],
        seed=args.seed,
        epsilon=args.epsilon,
        mode=settings["engine"]["mode"],
        grain_divisor=settings["engine"]["grain_divisor"],
        num_maps=args.num_maps,
    )
    report = run_workload(spec, settings["bench"]["verify"], settings["approx"])
    write_workload_csv(report.rows, args.out or sys.stdout)
    if report.coverage is not None:
        logger.info(f"Coverage within (1 +/- eps): {report.coverage:.3f}")
    return EXIT_OK if report.correct else EXIT_VERDICT_FAILED


def _run_gadget(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    options = {
        "repetitions": args.repetitions,
        "c_amp": settings["reductions"]["c_amp"],
    }
    if args.epsilon is not None:
        options["epsilon"] = args.epsilon
    seeds = range(args.seed, args.seed + args.seeds)
    report = run_gadget(args.gadget, args.r, seeds, options)
    write_gadget_csv(report.rows, args.out or sys.stdout)
    passed = sum(o.correct for o in report.outcomes)
    logger.info(f"{args.gadget}: {passed}/{len(report.outcomes)} seeds correct")
    return EXIT_OK if report.correct else EXIT_VERDICT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(args.config, _overrides(args))
    except DynStringError as e:
        setup_logging("ERROR")
        logger.error(str(e))
        return EXIT_INVALID_INPUT
    setup_logging(settings["log_level"])

    try:
        if args.problem:
            return _run_problem(args, settings)
        return _run_gadget(args, settings)
    except WorkloadSpecError as e:
        for name, message in e.field_errors.items():
            logger.error(f"{name}: {message}")
        logger.error(str(e))
        return EXIT_INVALID_INPUT
    except DynStringError as e:
        logger.error(str(e))
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
