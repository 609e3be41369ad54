#!/usr/bin/env python3
"""Export the cosine-space loci as CSV tables and SVG figures.

Writes, for each requested axis ratio, the sum-conserving family's
projected curve (the guitar-pick cubic) and the product-conserving
family's log-cosine curve, plus the raw sample tables the figures are
drawn from.

Usage:
    python scripts/export_locus_figures.py --outdir figures --samples 720
"""

import argparse
import pathlib
import sys

from ponceletlab.cli import main as cli_main


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ratios", default="1.1,1.5,2,3")
    ap.add_argument("--samples", type=int, default=720)
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args(argv)

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    jobs = [
        ("cosine", outdir / "cosine_loci"),
        ("logcos", outdir / "logcos_loci"),
    ]
    for kind, stem in jobs:
        code = cli_main([
            "locus", "--kind", kind, "--ratios", args.ratios,
            "--samples", str(args.samples),
            "--out", str(stem.with_suffix(".csv")),
            "--svg", str(stem.with_suffix(".svg")),
        ])
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
