import pytest

from src.bench.cli import EXIT_INVALID_INPUT, EXIT_OK, build_parser, main
from src.bench.report import read_csv
from src.core.constants import GADGET_SCHEMA_VERSION, WORKLOAD_SCHEMA_VERSION

QUIET = ["--log-level", "WARNING"]


def test_problem_run_writes_csv(tmp_path):
    out = tmp_path / "hd.csv"
    code = main(["--problem", "hd", "--n", "32", "--m", "8", "--ops", "60", "--out", str(out)] + QUIET)
    assert code == EXIT_OK
    schema, frame = read_csv(out)
    assert schema == WORKLOAD_SCHEMA_VERSION
    assert set(frame["op_kind"]) == {"update", "query"}
    assert (frame["n"] == 32).all()


def test_missing_length_is_derived(tmp_path):
    out = tmp_path / "ip.csv"
    assert main(["--problem", "ip", "--m", "6", "--ops", "20", "--out", str(out)] + QUIET) == EXIT_OK
    _, frame = read_csv(out)
    assert (frame["n"] == 12).all()


def test_stdout_output(capsys):
    assert main(["--problem", "em", "--n", "16", "--m", "4", "--ops", "0"] + QUIET) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == f"# schema: {WORKLOAD_SCHEMA_VERSION}"
    assert len(lines) == 2


def test_gadget_run(tmp_path):
    out = tmp_path / "omv.csv"
    code = main(["--gadget", "omv_dynem", "--r", "3", "--seeds", "2", "--out", str(out)] + QUIET)
    assert code == EXIT_OK
    schema, frame = read_csv(out)
    assert schema == GADGET_SCHEMA_VERSION
    assert frame["correct"].all()
    assert frame["seed"].tolist() == [0, 1]


def test_deamortized_mode_flag(tmp_path):
    out = tmp_path / "hd.csv"
    args = ["--problem", "hd", "--n", "24", "--m", "6", "--ops", "40", "--mode", "deamortized"]
    assert main(args + ["--out", str(out)] + QUIET) == EXIT_OK


@pytest.mark.parametrize("args", [
    ["--problem", "hd", "--n", "4", "--m", "8"],
    ["--problem", "approx_hd", "--n", "16", "--m", "4"],
    ["--problem", "hd", "--n", "16", "--m", "4", "--ratio", "x"],
    ["--problem", "hd", "--n", "16", "--m", "4", "--config", "/nonexistent/settings.yaml"],
    ["--gadget", "omv_dynem", "--r", "0"],
])
def test_invalid_input_exit_code(args):
    assert main(args + QUIET) == EXIT_INVALID_INPUT


def test_parser_requires_a_target():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--n", "8"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["--problem", "hd", "--gadget", "omv_dynem"])
