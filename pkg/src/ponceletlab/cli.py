"""Command line front end.

Subcommands:
  verify    sweep a family and check its conserved quantities
  locus     sample cosine-space loci for a list of axis ratios, write CSV
  family    print one polygon of a family
  caustic   solve for the confocal caustic of an (n, tau) billiard

Exit codes: 0 success, 1 a verified invariant failed its tolerance,
2 invalid input or geometry, 3 file I/O error, 4 no caustic exists.
"""

from __future__ import annotations

import argparse
import math
import sys

from .conics import r_over_R_confocal
from .families import (
    FamilySpec,
    GeometryError,
    NoCausticError,
    internal_cosines,
    polygon_at,
    solve_confocal_caustic,
)
from .invariants import sweep_reports
from .loci import sample_locus

__all__ = ["build_parser", "main"]

_FAMILIES = ("incircle", "confocal", "circumcircle", "excentral", "billiard")


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def _add_axes(p, a_help: str, b_help: str):
    p.add_argument("--a", type=float, required=True, help=a_help)
    p.add_argument("--b", type=float, required=True, help=b_help)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ponceletlab",
                                 description="Poncelet family invariant laboratory")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep a family, check conserved quantities")
    v.add_argument("--family", choices=_FAMILIES, required=True)
    _add_axes(v, "outer semi-axis a (outer axes for billiard too)",
              "outer semi-axis b")
    v.add_argument("--n", type=int, default=3, help="billiard: period")
    v.add_argument("--tau", type=int, default=1, help="billiard: turning number")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--quantity", default=None,
                   help="restrict to one conserved quantity")

    lo = sub.add_parser("locus", help="sample cosine-space loci, write CSV")
    lo.add_argument("--kind", choices=("cosine", "logcos"), required=True)
    lo.add_argument("--ratios", required=True,
                    help="comma separated a/b ratios, e.g. 1.5,2,3")
    lo.add_argument("--samples", type=int, default=720)
    lo.add_argument("--out", required=True, help="output CSV path")
    lo.add_argument("--svg", default=None,
                    help="also write the projected curves as an SVG figure")
    lo.add_argument("--family", choices=_FAMILIES[:4], default=None,
                    help="default: incircle for cosine, circumcircle for logcos")

    f = sub.add_parser("family", help="print one polygon of a family")
    f.add_argument("--kind", choices=_FAMILIES, required=True)
    _add_axes(f, "semi-axis a (caustic axes for billiard)", "semi-axis b")
    f.add_argument("--n", type=int, default=3)
    f.add_argument("--tau", type=int, default=1)
    f.add_argument("--t", type=float, required=True, help="family parameter")

    c = sub.add_parser("caustic", help="solve the confocal caustic for (n, tau)")
    _add_axes(c, "outer semi-axis a", "outer semi-axis b")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--tau", type=int, default=1)

    return ap


def _spec_from_verify(args) -> FamilySpec:
    if args.family == "billiard":
        a_c, b_c = solve_confocal_caustic(args.a, args.b, args.n, args.tau)
        return FamilySpec("billiard", a_c, b_c, args.n, args.tau)
    return FamilySpec(args.family, args.a, args.b)


def _cmd_verify(args) -> int:
    spec = _spec_from_verify(args)
    reports = sweep_reports(spec, n_samples=args.samples, tol=args.tol,
                            quantity=args.quantity)
    header = f"{'quantity':<22}{'mean':>24}{'max dev':>12}{'target':>24}{'status':>8}"
    print(header)
    print("-" * len(header))
    ok = True
    for r in reports:
        target = _g17(r.closed_form_target) if r.closed_form_target is not None else "-"
        status = "pass" if r.passed else "FAIL"
        ok = ok and r.passed
        print(f"{r.quantity:<22}{r.mean:>24.16e}{r.max_abs_deviation:>12.3e}"
              f"{target:>24}{status:>8}")
    return 0 if ok else 1


_CSV_HEADER = ("family,a_over_b,param,c1,c2,c3,u,v,"
               "residual_cubic,residual_sphere,residual_titeica")

_SVG_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def write_locus_svg(path: str, curves, size: int = 640) -> None:
    """Minimal stroke-only SVG: one closed path per curve, viewBox fit to
    the joint data range with a 5% margin, y axis flipped to mathematical
    orientation.  `curves` is a sequence of (n, 2) coordinate arrays."""
    import numpy as np

    pts = np.vstack([np.asarray(c, dtype=float) for c in curves])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)
    lo = lo - 0.05 * span
    hi = hi + 0.05 * span
    w, h = hi - lo
    stroke = max(w, h) / 320.0
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{lo[0]:.6g} {-hi[1]:.6g} {w:.6g} {h:.6g}" '
        f'width="{size}" height="{size * h / w:.6g}">'
    ]
    for i, c in enumerate(curves):
        c = np.asarray(c, dtype=float)
        d = "M " + " L ".join(f"{x:.6g},{-y:.6g}" for x, y in c) + " Z"
        color = _SVG_COLORS[i % len(_SVG_COLORS)]
        lines.append(f'<path d="{d}" fill="none" stroke="{color}" '
                     f'stroke-width="{stroke:.3g}"/>')
    lines.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_locus(args) -> int:
    try:
        ratios = [float(tok) for tok in args.ratios.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"could not parse --ratios {args.ratios!r}")
    if not ratios:
        raise ValueError("--ratios is empty")
    family = args.family or ("incircle" if args.kind == "cosine" else "circumcircle")
    space = args.kind
    lines = [_CSV_HEADER]
    curves = []
    for ratio in ratios:
        spec = FamilySpec(family, ratio, 1.0)
        samples = sample_locus(spec, args.samples, space=space)
        for s in samples:
            cells = [family, _g17(ratio), _g17(s.param),
                     _g17(s.point[0]), _g17(s.point[1]), _g17(s.point[2]),
                     _g17(s.u), _g17(s.v)]
            for key in ("cubic", "sphere", "titeica"):
                cells.append(_g17(s.residuals[key]) if key in s.residuals else "")
            lines.append(",".join(cells))
        curves.append([(s.u, s.v) for s in samples])
    with open(args.out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} rows to {args.out}")
    if args.svg:
        write_locus_svg(args.svg, curves)
        print(f"wrote {len(curves)} curves to {args.svg}")
    return 0


def _cmd_family(args) -> int:
    spec = FamilySpec(args.kind, args.a, args.b, args.n, args.tau)
    poly = polygon_at(spec, args.t)
    for x, y in poly.vertices:
        print(f"{_g17(x):>25} {_g17(y):>25}")
    cos = internal_cosines(poly)
    print(f"perimeter     {_g17(poly.perimeter())}")
    print(f"cosine sum    {_g17(math.fsum(cos))}")
    print(f"cosine prod   {_g17(float(cos.prod()))}")
    return 0


def _cmd_caustic(args) -> int:
    a_c, b_c = solve_confocal_caustic(args.a, args.b, args.n, args.tau)
    print(f"a_c {_g17(a_c)}")
    print(f"b_c {_g17(b_c)}")
    if args.n == 3 and args.tau == 1:
        print(f"r/R {_g17(r_over_R_confocal(args.a, args.b))}")
    return 0


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "locus":
            return _cmd_locus(args)
        if args.command == "family":
            return _cmd_family(args)
        return _cmd_caustic(args)
    except NoCausticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
