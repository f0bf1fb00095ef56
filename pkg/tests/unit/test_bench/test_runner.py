import io

import pytest

from src.bench import (
    GADGETS,
    PROBLEMS,
    parse_workload,
    read_csv,
    render_csv,
    run_gadget,
    run_workload,
    run_workloads,
    summarize,
    write_gadget_csv,
    write_workload_csv,
)
from src.core.constants import (
    GADGET_CSV_COLUMNS,
    GADGET_SCHEMA_VERSION,
    WORKLOAD_CSV_COLUMNS,
    WORKLOAD_SCHEMA_VERSION,
)
from src.core.exceptions import WorkloadSpecError

EXACT_SPECS = [
    {"problem": "hd", "sigma": 4},
    {"problem": "ip", "sigma": 6},
    {"problem": "em", "sigma": 2},
    {"problem": "hd_mod2", "sigma": 2},
    {"problem": "hd_mod2", "sigma": 3},
    {"problem": "ip_mod2", "sigma": 2},
]


@pytest.mark.parametrize("fields", EXACT_SPECS)
@pytest.mark.parametrize("mode", ["amortized", "deamortized"])
def test_exact_workloads_pass_verification(fields, mode):
    spec = parse_workload(n=40, m=10, count=120, seed=3, mode=mode, **fields)
    report = run_workload(spec)
    assert report.correct
    assert report.failures == 0
    assert [row["op_kind"] for row in report.rows] == ["update", "query"]
    assert all(set(row) == set(WORKLOAD_CSV_COLUMNS) for row in report.rows)
    assert report.mean_work_per_op > 0


def test_every_problem_is_covered():
    assert {f["problem"] for f in EXACT_SPECS} | {"approx_hd"} == set(PROBLEMS)


def test_approx_workload_reports_coverage():
    spec = parse_workload(problem="approx_hd", n=48, m=12, model="pattern", epsilon=0.5, count=80)
    report = run_workload(spec, approx_constants={"c_d": 64.0})
    assert report.correct
    assert 0.0 <= report.coverage <= 1.0
    query_row = next(row for row in report.rows if row["op_kind"] == "query")
    assert query_row["coverage"] == report.coverage


def test_binary_approx_with_both_updates_is_exact():
    spec = parse_workload(problem="approx_hd", n=24, m=6, epsilon=0.3, count=60)
    report = run_workload(spec)
    assert report.coverage == 1.0


def test_large_alphabet_approx_uses_few_maps():
    spec = parse_workload(
        problem="approx_hd", n=24, m=6, sigma=100, model="text", epsilon=0.5, count=30, num_maps=4,
    )
    report = run_workload(spec)
    assert report.correct
    assert report.coverage is not None


def test_zero_operations_give_header_only_csv():
    report = run_workload(parse_workload(problem="hd", n=16, m=4, count=0))
    assert report.rows == []
    text = render_csv(report.rows, WORKLOAD_CSV_COLUMNS, WORKLOAD_SCHEMA_VERSION)
    lines = text.strip().splitlines()
    assert lines == [f"# schema: {WORKLOAD_SCHEMA_VERSION}", ",".join(WORKLOAD_CSV_COLUMNS)]


def test_csv_round_trip(tmp_path):
    report = run_workload(parse_workload(problem="ip", n=20, m=5, count=40))
    path = tmp_path / "ip.csv"
    write_workload_csv(report.rows, path)
    schema, frame = read_csv(path)
    assert schema == WORKLOAD_SCHEMA_VERSION
    assert list(frame.columns) == WORKLOAD_CSV_COLUMNS
    assert len(frame) == 2
    summary = summarize(frame)
    assert set(summary["op_kind"]) == {"update", "query"}


def test_read_csv_needs_schema_line():
    with pytest.raises(WorkloadSpecError):
        read_csv(io.StringIO("a,b\n1,2\n"))


def test_parallel_runs_match_sequential():
    specs = [parse_workload(problem="hd", n=24, m=6, count=40, seed=s) for s in range(3)]
    sequential = [r.answers for r in run_workloads(specs)]
    parallel = [r.answers for r in run_workloads(specs, workers=3)]
    assert parallel == sequential


@pytest.mark.parametrize("gadget", sorted(GADGETS))
def test_gadgets_are_correct(gadget):
    report = run_gadget(gadget, 3, range(2), {"repetitions": 40, "ops": 30})
    assert report.correct
    assert [row["seed"] for row in report.rows] == [0, 1]
    assert all(row["backend_queries"] > 0 for row in report.rows)
    buffer = io.StringIO()
    write_gadget_csv(report.rows, buffer)
    buffer.seek(0)
    schema, frame = read_csv(buffer)
    assert schema == GADGET_SCHEMA_VERSION
    assert list(frame.columns) == GADGET_CSV_COLUMNS


def test_gadget_input_checks():
    with pytest.raises(WorkloadSpecError) as caught:
        run_gadget("omv_magic", 3, [0])
    assert "gadget" in caught.value.field_errors
    with pytest.raises(WorkloadSpecError):
        run_gadget("omv_dynem", 0, [0])
