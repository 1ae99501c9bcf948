import json

import numpy as np
import pytest

from tenderiv.reporting import CheckReport, RunSummary
from tenderiv.serialize import (
    SerializeError,
    dumps,
    format_float,
    load_json,
    matrix_obj,
    parse_matrix,
    parse_tensor4,
    tensor4_obj,
)


def test_check_report_pass_iff_within_tol():
    ok = CheckReport.from_measurement("x", 10, 1e-13, 1e-12, seed=1)
    bad = CheckReport.from_measurement("x", 10, 2e-12, 1e-12, seed=1)
    edge = CheckReport.from_measurement("x", 10, 1e-12, 1e-12, seed=1)
    assert ok.passed and not bad.passed and edge.passed


def test_run_summary_all_pass():
    r1 = CheckReport.from_measurement("a", 1, 0.0, 1e-12, 0)
    r2 = CheckReport.from_measurement("b", 1, 1.0, 1e-12, 0)
    assert RunSummary(reports=[r1]).all_pass
    assert not RunSummary(reports=[r1, r2]).all_pass
    obj = RunSummary(reports=[r1], wall_time_ms=55).to_obj()
    assert set(obj) == {"reports", "all_pass"}
    assert obj["reports"][0]["pass"] is True


def test_format_float_is_lossless():
    values = [0.0, -0.0, 1.0, np.pi, 1e-300, -2.2250738585072014e-308,
              0.1 + 0.2, 6.0, 9.99e99]
    for v in values:
        assert float(format_float(v)) == v
    with pytest.raises(SerializeError):
        format_float(float("nan"))


def test_dumps_parses_back_and_is_deterministic():
    obj = {"name": "t", "values": [1.5, -2.0, 0.0], "n": 3, "ok": True,
           "nested": {"matrix": [[1.0, 2.0], [3.0, 4.0]]}, "none": None}
    text = dumps(obj)
    assert text == dumps(obj)
    assert json.loads(text) == obj


def test_matrix_roundtrip():
    a = np.arange(9, dtype=float).reshape(3, 3) / 7.0
    assert np.array_equal(parse_matrix(json.loads(dumps(matrix_obj(a)))), a)


def test_tensor4_roundtrip():
    h = np.arange(81, dtype=float).reshape(3, 3, 3, 3) / 13.0
    assert np.array_equal(parse_tensor4(json.loads(dumps(tensor4_obj(h)))), h)


def test_parse_rejects_bad_shapes():
    with pytest.raises(SerializeError):
        parse_matrix({"matrix": [[1.0, 2.0], [3.0, 4.0]]})
    with pytest.raises(SerializeError):
        parse_matrix({"rows": []})
    with pytest.raises(SerializeError):
        parse_tensor4({"tensor4": [0.0] * 81})
    with pytest.raises(SerializeError):
        parse_matrix({"matrix": [["a"] * 3] * 3})


def test_load_json_missing_file(tmp_path):
    with pytest.raises(SerializeError):
        load_json(tmp_path / "absent.json")
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[1,')
    with pytest.raises(SerializeError):
        load_json(bad)
