"""JSON and CSV emitters for generation reports, published-table comparisons and sweeps.

CSV output is plain ``csv`` module output: header row, comma separator and
``repr`` floats, so it does not depend on the locale.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .fock import binomial_coefficient
from .protocol import GenerationReport, SweepRow, run_protocol
from .published import TABLE_I, table_tolerance

COEFFICIENT_COLUMNS = ("N", "n", "c", "b", "delta")
TABLE_COLUMNS = ("N", "n", "delta_computed", "delta_published", "abs_diff", "tolerance", "within_tolerance")
SWEEP_COLUMNS = ("N", "p", "total_probability", "fidelity")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def to_json(data) -> str:
    if hasattr(data, "to_dict"):
        data = data.to_dict()
    return json.dumps(_jsonable(data), indent=2)


def coefficient_rows(report: GenerationReport) -> list[dict]:
    """One row per photon number of the final state."""
    N = report.N
    return [
        {"N": N, "n": n, "c": c, "b": binomial_coefficient(N, n), "delta": d}
        for n, (c, d) in enumerate(zip(report.coefficients, report.mismatches))
    ]


def table_rows(N_values: Iterable[int] = range(3, 11)) -> list[dict]:
    """Computed mismatches next to the published ones, cell by cell (n >= 1)."""
    rows = []
    for N in N_values:
        computed = run_protocol(N, 0.5).mismatches
        published = TABLE_I.get(N)
        for n in range(1, N + 1):
            row = {"N": N, "n": n, "delta_computed": computed[n]}
            if published is None:
                row.update(delta_published=None, abs_diff=None, tolerance=None, within_tolerance=None)
            else:
                pub = published[n]
                diff = abs(computed[n] - pub)
                tol = table_tolerance(pub)
                row.update(delta_published=pub, abs_diff=diff, tolerance=tol, within_tolerance=diff <= tol)
            rows.append(row)
    return rows


def sweep_rows(rows: Sequence[SweepRow]) -> list[dict]:
    return [
        {"N": r.N, "p": r.p, "total_probability": r.total_probability, "fidelity": r.fidelity}
        for r in rows
    ]


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return value


def to_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in columns})
    return buf.getvalue()


def read_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def write_output(text: str, out: str | Path | None) -> None:
    """Write ``text`` to ``out``, or to stdout when ``out`` is None or '-'."""
    if out is None or str(out) == "-":
        print(text, end="" if text.endswith("\n") else "\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
