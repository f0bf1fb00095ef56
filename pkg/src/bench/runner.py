"""
Benchmark drivers: run a workload against the structure its problem names,
or run a reduction gadget over several seeds, checking answers against the
brute-force oracles as they are produced.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..approx.canonical import TextSketchHD
from ..approx.pattern_sketch import PatternSketchHD
from ..approx.poly_alphabet import EXACT_LAYER, SKETCH_LAYER, PolyAlphabetHD
from ..core.base_structure import DynamicStructure
from ..core.constants import (
    DEFAULT_AMPLIFICATION,
    DEFAULT_APPROX_CONSTANTS,
    GADGET_SCHEMA_VERSION,
    WORKLOAD_SCHEMA_VERSION,
)
from ..core.data_models import AlphabetKind, StringRole, Update, UpdateModel
from ..core.exceptions import WorkloadSpecError
from ..core.utils import make_rng
from ..oracle.naive import naive_dominance, naive_em, naive_hd, naive_ip, naive_omv
from ..problems.blocked import DynEM, DynHD, DynIP
from ..problems.parity import ParityStructure
from ..reductions.grid import (
    range_count_via_dynip,
    range_empty_via_approx_dynip,
    range_empty_via_dynem,
)
from ..reductions.instances import GadgetResult, GridInstance, OMvInstance
from ..reductions.lifts import ip_via_lifted_dynhd, ipmod2_via_lifted_ternary_dynhd
from ..reductions.omv import (
    default_repetitions,
    omv_text_only,
    omv_via_approx_dynip,
    omv_via_dynem,
    omv_via_dynip_mod2,
    omv_via_dynip_modc,
)
from .workload import WorkloadSpec, generate_operations, initial_strings

logger = logging.getLogger(__name__)

UPDATE_MODELS = {
    "pattern": UpdateModel.PATTERN_ONLY,
    "text": UpdateModel.TEXT_ONLY,
    "both": UpdateModel.PATTERN_AND_TEXT,
}


# =============================================================================
# WORKLOADS
# =============================================================================


@dataclass
class WorkloadReport:
    """Rows for the CSV plus the answer stream and its verdict"""
    spec: WorkloadSpec
    rows: List[Dict[str, Any]]
    answers: List[Any]
    correct: bool = True
    failures: int = 0
    coverage: Optional[float] = None
    stats: Dict[str, Any] = field(default_factory=dict)
    total_work: int = 0
    operations: int = 0

    @property
    def mean_work_per_op(self) -> float:
        return self.total_work / self.operations if self.operations else 0.0


def build_structure(
    spec: WorkloadSpec,
    pattern,
    text,
    approx_constants: Optional[Dict[str, float]] = None,
) -> Tuple[DynamicStructure, Callable[[int], Any]]:
    """The structure serving spec.problem and the call that answers one alignment"""
    model = UPDATE_MODELS[spec.model]
    if spec.problem == "hd":
        st = DynHD(pattern, text, model, spec.mode, spec.grain_divisor)
        return st, st.query
    if spec.problem == "ip":
        st = DynIP(pattern, text, model, spec.mode, spec.grain_divisor)
        return st, st.query
    if spec.problem == "em":
        st = DynEM(pattern, text, model, spec.mode, spec.grain_divisor)
        return st, st.query
    if spec.problem == "ip_mod2":
        st = DynIP(pattern, text, model, spec.mode, spec.grain_divisor)
        return st, lambda i: st.mod_query(i, 2)
    if spec.problem == "hd_mod2":
        if pattern.alphabet.kind is AlphabetKind.BINARY:
            st = ParityStructure(pattern, text)
            return st, st.query
        st = DynHD(pattern, text, model, spec.mode, spec.grain_divisor)
        return st, lambda i: st.mod_query(i, 2)

    constants = dict(DEFAULT_APPROX_CONSTANTS)
    constants.update(approx_constants or {})
    epsilon = float(spec.epsilon)
    c_d, c_s, c_r = constants["c_d"], constants["c_s"], constants["c_r"]
    if spec.model == "both" or not spec.alphabet.is_constant_tier:
        layer = EXACT_LAYER if spec.model == "both" else SKETCH_LAYER
        st = PolyAlphabetHD(
            pattern, text, epsilon, spec.seed, model, layer, spec.num_maps, spec.mode,
            constants["c_map"], c_d, c_s, c_r,
        )
    elif spec.model == "pattern":
        st = PatternSketchHD(pattern, text, epsilon, spec.seed, c_d, c_s)
    else:
        st = TextSketchHD(pattern, text, epsilon, spec.seed, c_d, c_s, c_r)
    return st, st.query


def _oracle(problem: str) -> Callable[[np.ndarray, np.ndarray, int], Any]:
    return {
        "hd": naive_hd,
        "ip": naive_ip,
        "em": lambda p, t, i: naive_em(p, t, i)[0],
        "hd_mod2": lambda p, t, i: naive_hd(p, t, i) % 2,
        "ip_mod2": lambda p, t, i: naive_ip(p, t, i) % 2,
        "approx_hd": naive_hd,
    }[problem]


def _within(estimate: float, exact: int, epsilon: float) -> bool:
    if exact == 0:
        return estimate == 0
    return (1 - epsilon) * exact <= estimate <= (1 + epsilon) * exact


def _timing_row(spec: WorkloadSpec, op_kind: str, times: List[int], work: List[int],
                rebuilds: int, coverage: Optional[float]) -> Dict[str, Any]:
    return {
        "schema_version": WORKLOAD_SCHEMA_VERSION,
        "problem": spec.problem,
        "alphabet": spec.alphabet.describe(),
        "n": spec.n,
        "m": spec.m,
        "model": spec.model,
        "epsilon": spec.epsilon,
        "op_kind": op_kind,
        "median_ns": float(np.median(times)),
        "p99_ns": float(np.percentile(times, 99)),
        "work_units_median": float(np.median(work)),
        "rebuilds": rebuilds,
        "coverage": coverage,
    }


def run_workload(
    spec: WorkloadSpec,
    verify: bool = True,
    approx_constants: Optional[Dict[str, float]] = None,
) -> WorkloadReport:
    """
    Build the structure for `spec`, replay its operation stream and time each op.

    Exact problems are checked against the oracle on every query when
    `verify` is set. Approximate answers are scored by coverage, the share of
    queries landing within (1 +/- eps) of the exact distance; a non-zero
    estimate for a zero distance fails the verdict.
    """
    pattern, text = initial_strings(spec)
    mirror = {
        StringRole.PATTERN: pattern.snapshot(),
        StringRole.TEXT: text.snapshot(),
    }
    structure, answer = build_structure(spec, pattern, text, approx_constants)
    oracle = _oracle(spec.problem)
    epsilon = getattr(structure, "effective_epsilon", spec.epsilon)
    approximate = spec.problem == "approx_hd"

    times: Dict[str, List[int]] = {"update": [], "query": []}
    work: Dict[str, List[int]] = {"update": [], "query": []}
    answers: List[Any] = []
    failures = 0
    covered = 0

    for kind, payload in generate_operations(spec):
        started = time.perf_counter_ns()
        if kind == "update":
            structure.update(payload)
        else:
            value = answer(payload)
        times[kind].append(time.perf_counter_ns() - started)
        work[kind].append(structure.work_units_last_op)

        if kind == "update":
            mirror[payload.target][payload.position - 1] = payload.new_symbol
            continue
        answers.append(value)
        if not (verify or approximate):
            continue
        expected = oracle(mirror[StringRole.PATTERN], mirror[StringRole.TEXT], payload)
        if approximate:
            covered += _within(value, expected, epsilon)
            if expected == 0 and value != 0:
                failures += 1
        elif value != expected:
            failures += 1
            logger.error(
                f"{spec.problem} alignment {payload}: structure gave {value}, oracle {expected}"
            )

    coverage = covered / len(answers) if approximate and answers else None
    rows = [
        _timing_row(spec, kind, times[kind], work[kind], structure.rebuilds_total,
                    coverage if kind == "query" else None)
        for kind in ("update", "query")
        if times[kind]
    ]
    logger.info(
        f"Workload {spec.problem} n={spec.n} m={spec.m}: {len(answers)} queries, "
        f"{failures} failures"
    )
    return WorkloadReport(
        spec, rows, answers, failures == 0, failures, coverage, structure.stats(),
        total_work=sum(work["update"]) + sum(work["query"]),
        operations=len(times["update"]) + len(times["query"]),
    )


def run_workloads(
    specs: Sequence[WorkloadSpec],
    workers: int = 1,
    verify: bool = True,
    approx_constants: Optional[Dict[str, float]] = None,
) -> List[WorkloadReport]:
    """Run independent configurations, each worker owning its own structures"""
    if workers <= 1:
        return [run_workload(spec, verify, approx_constants) for spec in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: run_workload(s, verify, approx_constants), specs))


# =============================================================================
# GADGETS
# =============================================================================


@dataclass
class GadgetOutcome:
    result: GadgetResult
    expected: Any
    false_positives: int
    false_negatives: int

    @property
    def correct(self) -> bool:
        return self.false_positives == 0 and self.false_negatives == 0


def _score(reported: Sequence, expected: Sequence) -> Tuple[int, int]:
    """(reported above truth, reported below truth) over paired answers"""
    above = below = 0
    for got, want in zip(reported, expected):
        if got > want:
            above += 1
        elif got < want:
            below += 1
    return above, below


def _omv(runner: Callable[..., GadgetResult]):
    def run(r: int, seed: int, options: Dict[str, Any]) -> GadgetOutcome:
        inst = OMvInstance.random(r, seed, options.get("density", 0.5))
        result = runner(inst, seed, options)
        expected = naive_omv(inst)
        above, below = _score(
            np.asarray(result.answers).reshape(-1).tolist(),
            np.asarray(expected).reshape(-1).tolist(),
        )
        return GadgetOutcome(result, expected, above, below)
    return run


def _repetitions(r: int, options: Dict[str, Any]) -> int:
    if options.get("repetitions") is not None:
        return int(options["repetitions"])
    return default_repetitions(r * r, options.get("c_amp", DEFAULT_AMPLIFICATION))


def _lift_gadget(runner: Callable[..., GadgetResult], modulus: Optional[int]):
    def run(r: int, seed: int, options: Dict[str, Any]) -> GadgetOutcome:
        rng = make_rng(seed, 50)
        m, n = r, 2 * r
        live = {
            StringRole.PATTERN: rng.integers(0, 2, size=m).astype(np.int64),
            StringRole.TEXT: rng.integers(0, 2, size=n).astype(np.int64),
        }
        P, T = live[StringRole.PATTERN].copy(), live[StringRole.TEXT].copy()
        operations: List[Any] = []
        expected: List[int] = []
        for _ in range(options.get("ops", 50)):
            if rng.random() < 0.5:
                role = StringRole.PATTERN if rng.random() < 0.5 else StringRole.TEXT
                position = int(rng.integers(1, live[role].size + 1))
                symbol = int(rng.integers(0, 2))
                operations.append(Update(role, position, symbol))
                live[role][position - 1] = symbol
            else:
                i = int(rng.integers(1, n - m + 2))
                operations.append(i)
                value = naive_ip(live[StringRole.PATTERN], live[StringRole.TEXT], i)
                expected.append(value % modulus if modulus else value)
        result = runner(P, T, operations)
        above, below = _score(result.answers, expected)
        return GadgetOutcome(result, expected, above, below)
    return run


def _grid_gadget(runner: Callable[..., GadgetResult], emptiness: bool):
    def run(r: int, seed: int, options: Dict[str, Any]) -> GadgetOutcome:
        max_weight = 1 if emptiness else options.get("max_weight", 255)
        grid = GridInstance.random(r, seed, max_weight)
        rng = make_rng(seed, 51)
        mirror = grid.copy()
        operations: List[Tuple] = []
        expected: List[int] = []
        for _ in range(options.get("ops", 50)):
            if rng.random() < 0.5:
                slot = int(rng.integers(1, r + 1))
                weight = int(rng.integers(0, max_weight + 1))
                operations.append(("update", slot, weight))
                mirror.set_weight(slot, weight)
            else:
                x, y = (int(c) for c in rng.integers(1, r + 1, size=2))
                operations.append(("query", x, y))
                total = naive_dominance(mirror, x, y)
                expected.append(int(total > 0) if emptiness else total)
        result = runner(grid, operations, seed)
        # emptiness answers say "empty"; score them as "has a point"
        reported = [int(not a) for a in result.answers] if emptiness else result.answers
        above, below = _score(reported, expected)
        return GadgetOutcome(result, expected, above, below)
    return run


GADGETS: Dict[str, Callable[[int, int, Dict[str, Any]], GadgetOutcome]] = {
    "omv_dynem": _omv(lambda inst, seed, o: omv_via_dynem(inst)),
    "omv_ip_mod2": _omv(lambda inst, seed, o: omv_via_dynip_mod2(
        inst, repetitions=_repetitions(inst.r, o), seed=seed)),
    "omv_ip_modc": _omv(lambda inst, seed, o: omv_via_dynip_modc(
        inst, o.get("c", 3), repetitions=_repetitions(inst.r, o), seed=seed)),
    "omv_text_only": _omv(lambda inst, seed, o: omv_text_only(
        inst, repetitions=_repetitions(inst.r, o), c=o.get("c", 2), seed=seed)),
    "omv_approx_ip": _omv(lambda inst, seed, o: omv_via_approx_dynip(
        inst, o.get("epsilon", 0.25), seed=seed)),
    "lift_ip_hd": _lift_gadget(ip_via_lifted_dynhd, None),
    "lift_ipmod2_hd": _lift_gadget(ipmod2_via_lifted_ternary_dynhd, 2),
    "range_count": _grid_gadget(lambda g, ops, seed: range_count_via_dynip(g, ops), False),
    "range_empty_em": _grid_gadget(lambda g, ops, seed: range_empty_via_dynem(g, ops), True),
    "range_empty_approx_ip": _grid_gadget(
        lambda g, ops, seed: range_empty_via_approx_dynip(g, ops, seed=seed), True),
}


@dataclass
class GadgetReport:
    gadget: str
    rows: List[Dict[str, Any]]
    outcomes: List[GadgetOutcome]

    @property
    def correct(self) -> bool:
        return all(o.correct for o in self.outcomes)


def run_gadget(
    gadget: str,
    r: int,
    seeds: Sequence[int],
    options: Optional[Dict[str, Any]] = None,
) -> GadgetReport:
    """One row per seed with backend operation counts and the oracle verdict"""
    if gadget not in GADGETS:
        raise WorkloadSpecError(
            f"Unknown gadget {gadget!r}", {"gadget": f"choose from {sorted(GADGETS)}"}
        )
    if r < 1:
        raise WorkloadSpecError(f"r must be positive, got {r}", {"r": "must be positive"})
    options = options or {}
    rows = []
    outcomes = []
    for seed in seeds:
        started = time.perf_counter_ns()
        outcome = GADGETS[gadget](r, int(seed), options)
        elapsed = time.perf_counter_ns() - started
        outcomes.append(outcome)
        rows.append({
            "schema_version": GADGET_SCHEMA_VERSION,
            "gadget": gadget,
            "r": r,
            "seed": int(seed),
            "backend_updates": outcome.result.backend_updates,
            "backend_queries": outcome.result.backend_queries,
            "elapsed_ns": elapsed,
            "false_positives": outcome.false_positives,
            "false_negatives": outcome.false_negatives,
            "correct": outcome.correct,
        })
        if not outcome.correct:
            logger.warning(
                f"{gadget} r={r} seed={seed}: {outcome.false_positives} false positives, "
                f"{outcome.false_negatives} false negatives"
            )
    return GadgetReport(gadget, rows, outcomes)
