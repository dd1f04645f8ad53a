import json

import numpy as np

from ngbs import report as rpt
from ngbs.protocol import run_protocol, sweep


def test_to_json_handles_numpy_and_complex():
    text = rpt.to_json({"a": np.float64(1.5), "b": np.arange(3), "c": 1 + 2j, "d": np.bool_(True)})
    assert json.loads(text) == {"a": 1.5, "b": [0, 1, 2], "c": {"re": 1.0, "im": 2.0}, "d": True}


def test_csv_full_precision():
    x = 0.1 + 0.2
    text = rpt.to_csv([{"N": 1, "p": x}], ("N", "p"))
    assert text.splitlines() == ["N,p", f"1,{x!r}"]
    assert float(rpt.read_csv(text)[0]["p"]) == x


def test_csv_none_is_empty():
    assert rpt.to_csv([{"a": None}], ("a",)).splitlines()[1] == '""'


def test_coefficient_rows():
    rows = rpt.coefficient_rows(run_protocol(3, 0.5))
    assert [r["n"] for r in rows] == [0, 1, 2, 3]
    for r in rows:
        assert r["c"] == r["b"] * (1 - r["delta"]) or abs(r["c"] - r["b"] * (1 - r["delta"])) < 1e-15


def test_table_rows_unknown_N():
    rows = rpt.table_rows([2])
    assert len(rows) == 2
    assert all(r["delta_published"] is None for r in rows)


def test_sweep_rows():
    rows = rpt.sweep_rows(sweep([1, 2], [0.0, 1.0]))
    assert len(rows) == 4
    assert set(rows[0]) == set(rpt.SWEEP_COLUMNS)
