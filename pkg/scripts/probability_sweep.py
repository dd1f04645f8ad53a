"""Success probability and fidelity over N = 1..10 and a fine p grid.

Writes CSV (N, p, total_probability, fidelity) for external plotting, and
prints where the p = 1/2 probabilities sit against the 92-98% band.
"""

import argparse

import numpy as np

from ngbs import report as rpt
from ngbs.protocol import conditional_scheme_baseline, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="probability_sweep.csv")
    ap.add_argument("--points", type=int, default=41)
    args = ap.parse_args()

    grid = [round(x, 12) for x in np.linspace(0, 1, args.points)]
    rows = rpt.sweep_rows(sweep(range(1, 11), sorted(set(grid) | {0.5})))
    rpt.write_output(rpt.to_csv(rows, rpt.SWEEP_COLUMNS), args.out)
    for r in rows:
        if r["p"] == 0.5:
            base = conditional_scheme_baseline(r["N"])
            band = "in" if 0.92 <= r["total_probability"] <= 0.98 else "out of"
            print(f"N={r['N']:2d}  P={r['total_probability']:.5f} ({band} band)  baseline={base:.5f}  1-F={1 - r['fidelity']:.2e}")
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
