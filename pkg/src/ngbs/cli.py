"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 1 computation failure.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys

import numpy as np

from . import report as rpt
from .errors import InvalidInputError, InvalidTargetError
from .feasibility import ExperimentParams, feasibility_report, monte_carlo_jitter
from .gates import (
    LogicalQubitSpec,
    ThreeLevelAtomState,
    cnot,
    cnot_truth_table,
    expected_cnot_amplitudes,
    logical_amplitudes,
)
from .protocol import conditional_scheme_baseline, run_protocol, sweep

log = logging.getLogger("ngbs")

FORMATS = ("text", "csv", "json")


def _g(x: float) -> str:
    return f"{x:.6g}"


def _p_grid(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad p grid {text!r}") from exc


def cmd_generate(args) -> int:
    rep = run_protocol(args.n, args.p, args.phi)
    summary = (
        f"N={rep.N} p={_g(rep.p)} phi={_g(rep.phi)} "
        f"P_N={_g(rep.total_probability)} F_N={_g(rep.fidelity)} "
        f"1-F_N={_g(1 - rep.fidelity)} max|delta|={_g(rep.max_abs_mismatch)}"
    )
    if args.format == "json":
        rpt.write_output(rpt.to_json(rep), args.out)
    elif args.format == "csv":
        rpt.write_output(rpt.to_csv(rpt.coefficient_rows(rep), rpt.COEFFICIENT_COLUMNS), args.out)
    else:
        lines = [summary, f"baseline conditional scheme: {_g(conditional_scheme_baseline(rep.N))}"]
        lines += [f"gT_{k} = {_g(t)}" for k, t in enumerate(rep.plan.gT, start=1)]
        lines += [
            f"n={r['n']:2d}  c={_g(r['c'])}  b={_g(r['b'])}  delta={_g(r['delta'])}"
            for r in rpt.coefficient_rows(rep)
        ]
        lines += [f"warning: {w}" for w in rep.plan.warnings]
        rpt.write_output("\n".join(lines), args.out)
    if args.out not in (None, "-"):
        print(summary)
    return 0


def cmd_table(args) -> int:
    rows = rpt.table_rows(range(args.n_min, args.n_max + 1))
    if args.format == "json":
        rpt.write_output(rpt.to_json({"rows": rows}), args.out)
    elif args.format == "csv":
        rpt.write_output(rpt.to_csv(rows, rpt.TABLE_COLUMNS), args.out)
    else:
        lines = [f"{'N':>3} {'n':>3} {'computed':>12} {'published':>12} {'|diff|':>10}  status"]
        for r in rows:
            if r["delta_published"] is None:
                lines.append(f"{r['N']:>3} {r['n']:>3} {r['delta_computed']:>12.4e} {'-':>12} {'-':>10}  -")
                continue
            status = "ok" if r["within_tolerance"] else "MISMATCH"
            lines.append(
                f"{r['N']:>3} {r['n']:>3} {r['delta_computed']:>12.4e} "
                f"{r['delta_published']:>12.4e} {r['abs_diff']:>10.2e}  {status}"
            )
        checked = [r for r in rows if r["within_tolerance"] is not None]
        bad = sum(not r["within_tolerance"] for r in checked)
        lines.append(f"{len(checked) - bad}/{len(checked)} published cells within tolerance")
        rpt.write_output("\n".join(lines), args.out)
    return 0


def cmd_cnot(args) -> int:
    a, b, c, d = (complex(x) for x in (args.a, args.b, args.c, args.d))
    for x, y, what in ((a, b, "target (a, b)"), (c, d, "control (c, d)")):
        if abs(abs(x) ** 2 + abs(y) ** 2 - 1) > 1e-10:
            raise InvalidInputError(f"{what} must be normalized")
    spec = LogicalQubitSpec(args.n, args.phi)
    truth = cnot_truth_table(spec)
    out = cnot(ThreeLevelAtomState(c, d), spec.encode(a, b), spec)
    got = logical_amplitudes(out, spec)
    want = expected_cnot_amplitudes(a, b, c, d)
    err = max(abs(got[k] - want[k]) for k in want)
    truth_err = 0.0
    for row in truth:
        flip = row["control"] == "e"
        t = row["target"] == "1_L"
        ideal_key = row["control"] + ("0" if t == flip else "1")
        for k, v in row["amplitudes"].items():
            truth_err = max(truth_err, abs(v - (1.0 if k == ideal_key else 0.0)))
    data = {
        "N": spec.N,
        "phi": spec.phi,
        "truth_table": truth,
        "truth_table_max_error": truth_err,
        "input": {"a": a, "b": b, "c": c, "d": d},
        "output": got,
        "expected": want,
        "max_amplitude_error": err,
    }
    if args.format == "json":
        rpt.write_output(rpt.to_json(data), args.out)
    elif args.format == "csv":
        rows = [{"case": f"{r['control']},{r['target']}", **{k: abs(v) for k, v in r["amplitudes"].items()}} for r in truth]
        rows.append({"case": "general", **{k: abs(v) for k, v in got.items()}})
        rpt.write_output(rpt.to_csv(rows, ("case", "g0", "g1", "e0", "e1")), args.out)
    else:
        lines = [f"CNOT with N={spec.N}, phi={_g(spec.phi)}"]
        for r in truth:
            nz = [k for k, v in r["amplitudes"].items() if abs(v) > 0.5]
            lines.append(f"|{r['control']}>|{r['target']}> -> |{nz[0][0]}>|{nz[0][1]}_L>")
        lines.append("general input: " + "  ".join(f"{k}={_g(v.real)}{v.imag:+.6g}j" for k, v in got.items()))
        lines.append(f"truth-table max error {truth_err:.3e}; general max amplitude error {err:.3e}")
        rpt.write_output("\n".join(lines), args.out)
    return 0


def cmd_feasibility(args) -> int:
    params = ExperimentParams(
        g=2 * math.pi * args.g_hz,
        tau_at=args.tau_at,
        tau_cav=args.tau_cav,
        rel_time_err=args.rel_err,
    )
    data = feasibility_report(params, N=args.n, p=args.p, coupling_hz=args.g_hz)
    if args.trials > 0:
        data["monte_carlo"] = monte_carlo_jitter(args.n, args.p, args.rel_err, args.trials, args.seed).to_dict()
    if args.format == "json":
        rpt.write_output(rpt.to_json(data), args.out)
    elif args.format == "csv":
        rows = [
            {"n": n, "delta_exp": de, "delta": d}
            for n, (de, d) in enumerate(zip(data["timing_error_estimate"], data["mismatches"]))
        ]
        rpt.write_output(rpt.to_csv(rows, ("n", "delta_exp", "delta")), args.out)
    else:
        lt = data["lifetimes"]
        b = data["max_photon_bound"]
        lines = [
            f"[order-of-magnitude estimates] N={args.n} p={_g(args.p)} rel_err={_g(args.rel_err)}",
            "n  delta_exp  delta",
            *[
                f"{n:<2d} {_g(de):>10} {_g(d):>10}"
                for n, (de, d) in enumerate(zip(data["timing_error_estimate"], data["mismatches"]))
            ],
            f"jitter infidelity estimate: {_g(data['jitter_infidelity_estimate'])}",
            f"tau_dec = {_g(data['decoherence_time'])} s; longest T_k = {_g(max(lt['T']))} s; "
            f"sequence {_g(lt['sequence_time'])} s; lifetimes ok: {lt['all_ok']}",
            f"N_max (g = 2 pi f) = {b['N_max_angular']}; N_max (g = f) = {b['N_max_without_2pi']}; "
            f"published bound N < {b['published_bound']:.0e}",
            data["detector_note"],
        ]
        if "monte_carlo" in data:
            mc = data["monte_carlo"]
            lines.append(
                f"Monte Carlo ({mc['trials']} trials, seed {mc['seed']}): mean F = {_g(mc['mean_fidelity'])}, "
                f"min F = {_g(mc['min_fidelity'])}, mean P = {_g(mc['mean_probability'])}"
            )
        rpt.write_output("\n".join(lines), args.out)
    return 0


def cmd_sweep(args) -> int:
    if any(not 0 <= p <= 1 for p in args.p_grid):
        raise InvalidInputError("p values must lie in [0, 1]")
    rows = rpt.sweep_rows(sweep(range(args.n_min, args.n_max + 1), args.p_grid))
    if args.format == "json":
        rpt.write_output(rpt.to_json({"rows": rows}), args.out)
    elif args.format == "csv":
        rpt.write_output(rpt.to_csv(rows, rpt.SWEEP_COLUMNS), args.out)
    else:
        lines = [f"{'N':>3} {'p':>6} {'P_N':>10} {'F_N':>10}"]
        lines += [f"{r['N']:>3} {r['p']:>6.3g} {_g(r['total_probability']):>10} {_g(r['fidelity']):>10}" for r in rows]
        rpt.write_output("\n".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ngbs", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("generate", help="run the sequential-atom protocol")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--phi", type=float, default=0.0)
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("table", help="compare mismatches with the published table")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cnot", help="verify the dispersive CNOT gate")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--a", default="1", help="target |0_L> amplitude (complex literal)")
    p.add_argument("--b", default="0", help="target |1_L> amplitude")
    p.add_argument("--c", default="1", help="control |g> amplitude")
    p.add_argument("--d", default="0", help="control |e> amplitude")
    common(p)
    p.set_defaults(func=cmd_cnot)

    p = sub.add_parser("feasibility", help="experimental-feasibility estimates")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--g-hz", type=float, default=5e4, help="coupling frequency g/2pi in Hz")
    p.add_argument("--tau-at", type=float, default=1e-2)
    p.add_argument("--tau-cav", type=float, default=1e-3)
    p.add_argument("--rel-err", type=float, default=1e-2)
    p.add_argument("--trials", type=int, default=0, help="Monte Carlo trials (0 skips)")
    common(p)
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("sweep", help="probability and fidelity over an (N, p) grid")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--p-grid", type=_p_grid, default=[round(x, 10) for x in np.linspace(0, 1, 11)])
    common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InvalidInputError, InvalidTargetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        log.exception("computation failed")
        return 1


if __name__ == "__main__":
    sys.exit(main())
