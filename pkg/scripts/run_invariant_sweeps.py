#!/usr/bin/env python3
"""Sweep every family and print one line per conserved quantity.

Covers the four triangle families on the standard axis-ratio grid plus
N-periodic billiard polygons over two caustics and all turning numbers
through n = 7.  Exits nonzero if any conservation check fails, so the
script doubles as a quick end-to-end health check.

Usage:
    python scripts/run_invariant_sweeps.py [--samples 1000]
"""

import argparse
import sys

from ponceletlab import FamilySpec, solve_confocal_caustic, sweep_reports

RATIOS = (1.1, 1.5, 2.0, 3.0)
CAUSTICS = ((0.5, 0.4), (0.5, 0.3))
N_TAU = ((3, 1), (4, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args(argv)

    specs = [
        FamilySpec(kind, g, 1.0)
        for kind in ("incircle", "confocal", "circumcircle", "excentral")
        for g in RATIOS
    ]
    specs += [
        FamilySpec("billiard", a_c, b_c, n, tau)
        for a_c, b_c in CAUSTICS
        for n, tau in N_TAU
    ]

    print(f"{'family':<34}{'quantity':<22}{'mean':>22}{'max dev':>11}{'status':>8}")
    print("-" * 97)
    bad = 0
    for spec in specs:
        if spec.kind == "billiard":
            label = f"billiard({spec.a},{spec.b}) n={spec.n} tau={spec.tau}"
        else:
            label = f"{spec.kind} a/b={spec.a / spec.b:g}"
        for rep in sweep_reports(spec, n_samples=args.samples, tol=args.tol):
            status = "pass" if rep.passed else "FAIL"
            bad += not rep.passed
            print(f"{label:<34}{rep.quantity:<22}{rep.mean:>22.15g}"
                  f"{rep.max_abs_deviation:>11.2e}{status:>8}")
    if bad:
        print(f"\n{bad} checks FAILED")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
