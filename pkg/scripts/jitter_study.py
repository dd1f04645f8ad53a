"""Monte Carlo timing-jitter study: mean fidelity against relative jitter.

Compares each Monte Carlo infidelity with the closed-form estimate.
"""

import argparse

from ngbs.feasibility import jitter_infidelity_estimate, monte_carlo_jitter
from ngbs.protocol import plan_times


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()

    gT_N = plan_times(args.n).gT[-1]
    print(f"{'sigma':>8} {'mean F':>12} {'min F':>12} {'1-F':>10} {'estimate':>10}")
    for sigma in (1e-3, 3e-3, 1e-2, 3e-2):
        s = monte_carlo_jitter(args.n, args.p, sigma, args.trials, args.seed)
        est = jitter_infidelity_estimate(args.n, args.p, gT_N, sigma)
        print(f"{sigma:>8.0e} {s.mean_fidelity:>12.8f} {s.min_fidelity:>12.8f} {s.mean_infidelity:>10.2e} {est:>10.2e}")


if __name__ == "__main__":
    main()
