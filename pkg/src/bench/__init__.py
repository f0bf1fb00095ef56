"""
Benchmark harness: seeded workloads, gadget runs and versioned CSV reports.
"""

from .report import (
    fit_exponent,
    read_csv,
    render_csv,
    summarize,
    write_gadget_csv,
    write_workload_csv,
)
from .runner import (
    GADGETS,
    GadgetOutcome,
    GadgetReport,
    WorkloadReport,
    build_structure,
    run_gadget,
    run_workload,
    run_workloads,
)
from .workload import PROBLEMS, WorkloadSpec, generate_operations, initial_strings, parse_workload

__all__ = [
    "GADGETS",
    "GadgetOutcome",
    "GadgetReport",
    "PROBLEMS",
    "WorkloadReport",
    "WorkloadSpec",
    "build_structure",
    "fit_exponent",
    "generate_operations",
    "initial_strings",
    "parse_workload",
    "read_csv",
    "render_csv",
    "run_gadget",
    "run_workload",
    "run_workloads",
    "summarize",
    "write_gadget_csv",
    "write_workload_csv",
]
