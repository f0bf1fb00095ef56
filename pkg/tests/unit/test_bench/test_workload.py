import pytest

from src.bench import WorkloadSpec, generate_operations, initial_strings, parse_workload
from src.core.data_models import StringRole, Update
from src.core.exceptions import WorkloadSpecError


def test_defaults():
    spec = parse_workload(problem="hd", n=64, m=16)
    assert spec.sigma == 2
    assert spec.model == "both"
    assert spec.count == 1000
    assert spec.mode == "amortized"
    assert spec.alphabet.describe() == "binary(2)"
    assert parse_workload(problem="em", n=8, m=4).alphabet.wildcard_enabled


@pytest.mark.parametrize("fields,key", [
    ({"problem": "hd", "n": 0, "m": 1}, "n"),
    ({"problem": "hd", "n": 8, "m": 4, "sigma": 1}, "sigma"),
    ({"problem": "lcs", "n": 8, "m": 4}, "problem"),
    ({"problem": "hd", "n": 8, "m": 4, "ratio": "lots"}, "ratio"),
    ({"problem": "hd", "n": 8, "m": 4, "epsilon": 1.5}, "epsilon"),
    ({"problem": "hd", "n": 8, "m": 4, "count": -1}, "count"),
    ({"problem": "hd", "n": 8, "m": 4, "bogus": 1}, "bogus"),
    ({"problem": "hd", "n": 4, "m": 8}, "spec"),
    ({"problem": "approx_hd", "n": 8, "m": 4}, "spec"),
    ({"problem": "hd_mod2", "n": 8, "m": 4, "sigma": 5}, "spec"),
])
def test_invalid_fields_are_named(fields, key):
    with pytest.raises(WorkloadSpecError) as caught:
        parse_workload(**fields)
    assert key in caught.value.field_errors


def test_several_bad_fields_are_all_reported():
    with pytest.raises(WorkloadSpecError) as caught:
        parse_workload(problem="hd", n=0, m=0)
    assert {"n", "m"} <= set(caught.value.field_errors)


def test_streams_replay_exactly():
    spec = parse_workload(problem="ip", n=40, m=10, sigma=5, count=100, seed=9)
    again = WorkloadSpec(**spec.model_dump())
    assert generate_operations(spec) == generate_operations(again)
    p1, t1 = initial_strings(spec)
    p2, t2 = initial_strings(again)
    assert p1.symbols.tolist() == p2.symbols.tolist()
    assert t1.symbols.tolist() == t2.symbols.tolist()
    other = parse_workload(problem="ip", n=40, m=10, sigma=5, count=100, seed=10)
    assert generate_operations(other) != generate_operations(spec)


def test_operations_follow_ratio_and_model():
    spec = parse_workload(problem="hd", n=30, m=10, model="text", ratio="1:0", count=50)
    ops = generate_operations(spec)
    assert len(ops) == 50
    for kind, payload in ops:
        assert kind == "update"
        assert isinstance(payload, Update)
        assert payload.target is StringRole.TEXT
        assert 1 <= payload.position <= 30
    queries = generate_operations(parse_workload(problem="hd", n=30, m=10, ratio="0:1", count=20))
    assert all(kind == "query" and 1 <= i <= 21 for kind, i in queries)


def test_specs_are_immutable():
    spec = parse_workload(problem="hd", n=8, m=4)
    with pytest.raises(Exception):
        spec.n = 9
