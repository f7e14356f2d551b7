#!/usr/bin/env python3
"""Sweep the polar decomposition Psi = sqrt(rho) exp(I beta/2) R.

Samples random Cl(3,0) elements, histograms the Takabayasi angle beta and
reports the worst round-trip and rotor-norm errors as Psi approaches the
singular set (Psi conj(Psi) -> 0), reached here along Psi_s = (1 + e3) + s X.
"""
import argparse

import numpy as np

from clifspin.algebra import CL30, conjugation
from clifspin.dirac import SingularError, lounesto_decompose
from clifspin.sampling import make_rng, multivector


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = make_rng(args.seed)

    betas, rt, unit = [], [], []
    skipped = 0
    for _ in range(args.samples):
        psi = multivector(rng, CL30)
        try:
            d = lounesto_decompose(psi)
        except SingularError:
            skipped += 1
            continue
        betas.append(d.beta)
        rt.append((d.recompose() - psi).norm_inf())
        unit.append((d.R * conjugation(d.R) - 1.0).norm_inf())
    print(f"{len(betas)} decomposed, {skipped} rejected as singular")
    print(f"max round-trip error {max(rt):.2e}, max |R conj(R) - 1| {max(unit):.2e}")
    counts, edges = np.histogram(betas, bins=8, range=(-np.pi, np.pi))
    print("beta histogram:")
    for c, lo, hi in zip(counts, edges, edges[1:]):
        print(f"  [{lo:+.2f}, {hi:+.2f})  {c:5d}  {'#' * int(60 * c / max(counts))}")

    print("\napproach to the singular element 1 + e3:")
    x = multivector(make_rng(args.seed, 1), CL30)
    print(f"{'s':>9} {'rho':>11} {'round-trip':>11} {'|RR~-1|':>10}")
    for k in range(0, 16):
        s = 10.0 ** (-k)
        psi = 1 + CL30.blade("e3") + s * x
        try:
            d = lounesto_decompose(psi)
        except SingularError:
            print(f"{s:9.0e}   rejected as singular")
            continue
        err = (d.recompose() - psi).norm_inf()
        u = (d.R * conjugation(d.R) - 1.0).norm_inf()
        print(f"{s:9.0e} {d.rho:11.3e} {err:11.2e} {u:10.2e}")


if __name__ == "__main__":
    main()
