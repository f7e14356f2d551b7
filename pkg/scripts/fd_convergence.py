#!/usr/bin/env python3
"""Finite-difference convergence of the Dirac residual on boosted plane waves.

Halves the step repeatedly and prints the residual and the observed order
log2(r(h) / r(h/2)) for each branch and spin. Truncation error dominates for
large steps, round-off for small ones; the order is about 2 in between.

    python3 scripts/fd_convergence.py --m 2 --p 1.5,-2,0.7
"""
import argparse
import math

from clifspin.dirac import ZERO_POTENTIAL, Branch, PlaneWaveParams, SpacetimePoint, Spin, dhe_residual, planewave_field


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=float, default=2.0)
    ap.add_argument("--p", default="1.5,-2.0,0.7", help="momentum as X,Y,Z")
    ap.add_argument("--h0", type=float, default=1e-1)
    ap.add_argument("--halvings", type=int, default=12)
    args = ap.parse_args()
    p = tuple(float(v) for v in args.p.split(","))
    pt = SpacetimePoint(0.31, (0.2, -0.1, 0.45))

    for branch in Branch:
        for spin in Spin:
            params = PlaneWaveParams(branch, spin, p, args.m)
            f = planewave_field(params)
            exact = dhe_residual(f, ZERO_POTENTIAL, args.m, pt).norm()
            print(f"\nbranch {branch.value} spin {spin.value}   analytic residual {exact:.2e}")
            print(f"{'h':>10} {'residual':>12} {'order':>7}")
            prev = None
            for j in range(args.halvings + 1):
                h = args.h0 / 2**j
                r = dhe_residual(f.finite_difference(h), ZERO_POTENTIAL, args.m, pt).norm()
                order = f"{math.log2(prev / r):7.3f}" if prev and r > 0 else " " * 7
                print(f"{h:10.3e} {r:12.4e} {order}")
                prev = r


if __name__ == "__main__":
    main()
