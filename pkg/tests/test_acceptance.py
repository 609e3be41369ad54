"""Acceptance gate: thirteen numbered criteria, one test each, each printing
a single machine-greppable pass/fail line with the measured worst values.

Grid: a/b in {1.1, 1.5, 2, 3} with b = 1; 1000 samples per sweep unless a
criterion narrows it.  Tolerances are pinned here and must not be loosened;
a criterion that cannot be met should fail loudly rather than be weakened.
"""

import math
import time

import numpy as np
import pytest

from ponceletlab import (
    Ellipse,
    FamilySpec,
    billiard_outer_axes,
    billiard_vertices,
    complete_K,
    confocal_scale,
    cosine_extremes,
    cosine_product_target,
    cosine_sum_target,
    cubic_residual,
    derived_radii,
    excentral_locus_axes,
    excentral_scale,
    family_period,
    family_vertices,
    internal_cosines,
    jacobi_sn_cn_dn,
    locus_hausdorff,
    observed_cosine_extremes,
    orthic_of,
    pick_residual,
    plane_project,
    reflection_residual,
    solve_confocal_caustic,
    sphere_titeica_residuals,
    sweep,
    tangency_residual,
    trace_closure,
    union_residual,
)
from ponceletlab.invariants import _triangle_circumradius, _triangle_inradius
from ponceletlab.oracle import ray_through

G_RATIOS = (1.1, 1.5, 2.0, 3.0)
N_SAMPLES = 1000
BILLIARD_CAUSTICS = ((0.5, 0.4), (0.5, 0.3))
BILLIARD_NT = ((3, 1), (4, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3))


def _report(num: int, label: str, ok: bool, detail: str):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'}  {label}  ({detail})")
    assert ok, f"criterion {num:02d} {label}: {detail}"


def _sweep_cosines(kind: str, g: float, n: int = N_SAMPLES) -> np.ndarray:
    spec = FamilySpec(kind, g, 1.0)
    ts = np.linspace(0.0, family_period(spec), n, endpoint=False)
    return internal_cosines(family_vertices(spec, ts))


def test_c01_cosine_sum_conserved_and_equal():
    worst_dev = worst_gap = 0.0
    for g in G_RATIOS:
        target = cosine_sum_target(g, 1.0)
        for kind in ("incircle", "confocal"):
            sums = _sweep_cosines(kind, g).sum(axis=1)
            worst_dev = max(worst_dev, np.abs(sums - sums.mean()).max())
            worst_gap = max(worst_gap, abs(sums.mean() - target))
    ok = worst_dev < 1e-10 and worst_gap < 1e-10
    _report(1, "cosine sum conserved, equal across the affine pair", ok,
            f"max deviation {worst_dev:.2e}, max offset from 1+2ab/(a+b)^2 {worst_gap:.2e}")


def test_c02_cosine_product_conserved_and_equal():
    worst_dev = worst_gap = 0.0
    for g in G_RATIOS:
        target = cosine_product_target(g, 1.0)
        for kind in ("circumcircle", "excentral"):
            prods = _sweep_cosines(kind, g).prod(axis=1)
            worst_dev = max(worst_dev, np.abs(prods - prods.mean()).max())
            worst_gap = max(worst_gap, abs(prods.mean() - target))
    ok = worst_dev < 1e-10 and worst_gap < 1e-10
    _report(2, "cosine product conserved, equal across the affine pair", ok,
            f"max deviation {worst_dev:.2e}, max offset from ab/2(a+b)^2 {worst_gap:.2e}")


def test_c03_guitar_pick_cubic():
    worst_cubic = worst_pick = 0.0
    for g in G_RATIOS:
        k = cosine_sum_target(g, 1.0)
        for kind in ("incircle", "confocal"):
            c = _sweep_cosines(kind, g, 720)
            u, v = plane_project(c)
            worst_cubic = max(worst_cubic, np.abs(cubic_residual(u, v, k)).max())
            worst_pick = max(worst_pick, np.abs(pick_residual(c[:, 0], c[:, 1], k)).max())
    ok = worst_cubic < 1e-8 and worst_pick < 1e-9
    _report(3, "projected triples satisfy the guitar-pick cubic", ok,
            f"max |cubic| {worst_cubic:.2e}, max |pick| {worst_pick:.2e}")


def test_c04_identical_curves():
    t0 = time.perf_counter()
    worst_uv = worst_tr = 0.0
    for g in G_RATIOS:
        worst_uv = max(worst_uv, locus_hausdorff(
            FamilySpec("incircle", g, 1.0), FamilySpec("confocal", g, 1.0), "uv"))
        worst_tr = max(worst_tr, locus_hausdorff(
            FamilySpec("circumcircle", g, 1.0), FamilySpec("excentral", g, 1.0), "triple"))
    elapsed = time.perf_counter() - t0
    ok = worst_uv < 1e-6 and worst_tr < 1e-6 and elapsed < 5.0
    _report(4, "affine pairs sweep identical cosine-space curves", ok,
            f"Hausdorff uv {worst_uv:.2e}, triple {worst_tr:.2e}, {elapsed:.2f}s")


def test_c05_sphere_and_titeica():
    worst_sph = worst_tit = worst_sq = worst_union = 0.0
    for g in G_RATIOS:
        kp = cosine_product_target(g, 1.0)
        for kind in ("circumcircle", "excentral"):
            c = _sweep_cosines(kind, g)
            sph, tit = sphere_titeica_residuals(c, kp)
            worst_sph = max(worst_sph, np.abs(sph).max())
            worst_tit = max(worst_tit, np.abs(tit).max())
            worst_sq = max(worst_sq, np.abs((c * c).sum(axis=1) - (1.0 - 2.0 * kp)).max())
            worst_union = max(worst_union, np.abs(union_residual(c)).max())
    ok = (worst_sph < 1e-10 and worst_tit < 1e-10
          and worst_sq < 1e-10 and worst_union < 1e-10)
    _report(5, "product-conserving triples lie on sphere and Titeica surface", ok,
            f"max |sphere| {worst_sph:.2e}, |titeica| {worst_tit:.2e}, "
            f"|sum-of-squares offset| {worst_sq:.2e}, |union| {worst_union:.2e}")


def test_c06_affine_scaling_identities():
    worst_conf = worst_exc = 0.0
    for g in G_RATIOS:
        a, b = g, 1.0
        s = confocal_scale(a, b)
        r, _ = derived_radii(a, b)
        worst_conf = max(worst_conf,
                         abs(((s * a) ** 2 - b * b) - ((s * r) ** 2 - r * r)))
        sp = excentral_scale(a, b)
        # the scaled circumcircle pair's excentral locus has major axis a+b
        _, be = excentral_locus_axes(sp * a, b)
        worst_exc = max(worst_exc, abs(be - (a + b)))
    # hand check at (2,1): alpha^2 = 1.6, delta = 1.4, (1.6+1.4)/1 = 3
    exact = excentral_locus_axes(excentral_scale(2.0, 1.0) * 2.0, 1.0)[1]
    ok = worst_conf < 1e-12 and worst_exc < 1e-12 and abs(exact - 3.0) < 1e-12
    _report(6, "scale factors make the pairs confocal / excentral-matched", ok,
            f"confocality offset {worst_conf:.2e}, locus-axis offset {worst_exc:.2e}")


def test_c07_universal_measure_all_n_tau():
    worst_tan = worst_ref = worst_shift = worst_std = 0.0
    for a_c, b_c in BILLIARD_CAUSTICS:
        m_sq = (a_c * a_c - b_c * b_c) / (a_c * a_c)
        for n, tau in BILLIARD_NT:
            a, b = billiard_outer_axes(a_c, b_c, n, tau)
            table, caustic = Ellipse(a, b), Ellipse(a_c, b_c)
            du = 4.0 * tau * complete_K(m_sq) / n
            for u in np.linspace(0.0, 4.0 * complete_K(m_sq), 12, endpoint=False):
                v = billiard_vertices(a_c, b_c, n, tau, u)
                for i in range(n):
                    worst_tan = max(worst_tan, abs(
                        tangency_residual(v[i], v[(i + 1) % n], caustic)))
                worst_ref = max(worst_ref, reflection_residual(v, table))
                v_shift = billiard_vertices(a_c, b_c, n, tau, u + du)
                worst_shift = max(worst_shift, float(
                    np.abs(v_shift[:-1] - v[1:]).max()))
            spec = FamilySpec("billiard", a_c, b_c, n, tau)
            ts = np.linspace(0.0, family_period(spec), 500, endpoint=False)
            sums = internal_cosines(family_vertices(spec, ts)).sum(axis=1)
            worst_std = max(worst_std, float(sums.std()))
    ok = (worst_tan < 1e-8 and worst_ref < 1e-8
          and worst_shift < 1e-10 and worst_std < 1e-8)
    _report(7, "N-periodics for all (n, tau): tangency, reflection, shift, constancy",
            ok, f"tangency {worst_tan:.2e}, reflection {worst_ref:.2e}, "
                f"shift {worst_shift:.2e}, cosine-sum std {worst_std:.2e}")


def test_c08_four_periodic_degeneracies():
    worst_sum = worst_par = 0.0
    for g in G_RATIOS:
        a_c, b_c = solve_confocal_caustic(g, 1.0, 4, 1)
        spec = FamilySpec("billiard", a_c, b_c, 4, 1)
        ts = np.linspace(0.0, family_period(spec), N_SAMPLES, endpoint=False)
        verts = family_vertices(spec, ts)
        sums = internal_cosines(verts).sum(axis=1)
        worst_sum = max(worst_sum, float(np.abs(sums).max()))
        edges = np.roll(verts, -1, axis=1) - verts
        opp = np.abs(edges[:, :2] + edges[:, 2:]).max()
        worst_par = max(worst_par, float(opp))
    ok = worst_sum < 1e-10 and worst_par < 1e-9
    _report(8, "four-periodics: zero cosine sum, parallelogram edges", ok,
            f"max |sum| {worst_sum:.2e}, max opposite-edge mismatch {worst_par:.2e}")


def test_c09_tracer_reproduces_constructions():
    worst_vert = worst_close = 0.0
    for g in G_RATIOS:
        s = confocal_scale(g, 1.0)
        table = Ellipse(s * g, 1.0)
        spec = FamilySpec("confocal", g, 1.0)
        for t in np.linspace(0.0, 2.0 * math.pi, 5, endpoint=False):
            v = family_vertices(spec, np.array([t]))[0]
            poly, err = trace_closure(ray_through(v[0], v[1]), table, 3)
            worst_close = max(worst_close, err)
            worst_vert = max(worst_vert, float(np.abs(poly.vertices - v).max()))
    for a_c, b_c in BILLIARD_CAUSTICS:
        for n, tau in BILLIARD_NT:
            table = Ellipse(*billiard_outer_axes(a_c, b_c, n, tau))
            for u in (0.05, 0.81):
                v = billiard_vertices(a_c, b_c, n, tau, u)
                poly, err = trace_closure(ray_through(v[0], v[1]), table, n)
                worst_close = max(worst_close, err)
                worst_vert = max(worst_vert, float(np.abs(poly.vertices - v).max()))
    ok = worst_vert < 1e-8 and worst_close < 1e-8
    _report(9, "independent billiard tracer reproduces every construction", ok,
            f"max vertex gap {worst_vert:.2e}, max closure error {worst_close:.2e}")


def test_c10_cosine_extremes():
    worst = 0.0
    for g in G_RATIOS:
        for kind in ("incircle", "circumcircle"):
            lo, hi = observed_cosine_extremes(FamilySpec(kind, g, 1.0))
            clo, chi = cosine_extremes(g, 1.0, kind)
            worst = max(worst, abs(lo - clo), abs(hi - chi))
    ok = worst < 1e-8
    _report(10, "swept cosine extremes match the closed forms", ok,
            f"max extreme mismatch {worst:.2e}")


def test_c11_orthic_invariants():
    worst_r = worst_R = worst_feu = 0.0
    for g in G_RATIOS:
        spec = FamilySpec("circumcircle", g, 1.0)
        ts = np.linspace(0.0, 2.0 * math.pi, N_SAMPLES, endpoint=False)
        verts = family_vertices(spec, ts)
        r_target = g * 1.0 / (g + 1.0)
        R_target = 0.5 * (g + 1.0)
        for v in verts:
            orth = orthic_of(v).vertices
            r_h = _triangle_inradius(orth)
            R_h = _triangle_circumradius(orth)
            worst_r = max(worst_r, abs(r_h - r_target))
            worst_R = max(worst_R, abs(R_h - R_target))
            prod = float(internal_cosines(v).prod())
            worst_feu = max(worst_feu, abs(prod - r_h / (4.0 * R_h)))
    ok = worst_r < 1e-9 and worst_R < 1e-9 and worst_feu < 1e-10
    _report(11, "orthic inradius/circumradius constant, Feuerbach identity", ok,
            f"max |r_h - ab/(a+b)| {worst_r:.2e}, max |R_h - (a+b)/2| {worst_R:.2e}, "
            f"max Feuerbach offset {worst_feu:.2e}")


def test_c12_elliptic_kernel():
    worst_id = 0.0
    for m_sq in (0.0, 0.1, 0.36, 0.64, 0.9, 0.99):
        for u in np.linspace(-10.0, 10.0, 81):
            sn, cn, dn = jacobi_sn_cn_dn(float(u), m_sq)
            worst_id = max(worst_id,
                           abs(sn * sn + cn * cn - 1.0),
                           abs(dn * dn + m_sq * sn * sn - 1.0))
    gap_k0 = abs(complete_K(0.0) - math.pi / 2.0)
    # quadrature oracle value of K at m_sq = 1/2 (scipy.integrate.quad)
    gap_k5 = abs(complete_K(0.5) - 1.8540746773013719)
    ok = worst_id < 1e-12 and gap_k0 < 1e-15 and gap_k5 < 1e-9
    _report(12, "elliptic kernel identities and pinned complete integrals", ok,
            f"max identity residual {worst_id:.2e}, K(0) gap {gap_k0:.2e}, "
            f"K(1/2) gap {gap_k5:.2e}")


def test_c13_circle_degeneration():
    worst_cos = worst_uv = 0.0
    specs = [FamilySpec(kind, 1.0, 1.0)
             for kind in ("incircle", "confocal", "circumcircle", "excentral")]
    specs.append(FamilySpec("billiard", 0.4, 0.4, 3, 1))
    for spec in specs:
        ts = np.linspace(0.0, family_period(spec), 64, endpoint=False)
        c = internal_cosines(family_vertices(spec, ts))
        worst_cos = max(worst_cos, float(np.abs(c - 0.5).max()))
        u, v = plane_project(c)
        worst_uv = max(worst_uv, float(np.abs(u).max()), float(np.abs(v).max()))
    consistent = (cubic_residual(0.0, 0.0, 1.5) == 0.0
                  and sphere_titeica_residuals((0.5, 0.5, 0.5), 0.125) == (0.0, 0.0)
                  and cosine_sum_target(1.0, 1.0) == 1.5
                  and cosine_product_target(1.0, 1.0) == 0.125)
    ok = worst_cos < 1e-12 and worst_uv < 1e-12 and consistent
    _report(13, "circle case: equilateral families, loci collapse to the origin", ok,
            f"max |cos - 1/2| {worst_cos:.2e}, max |(u,v)| {worst_uv:.2e}, "
            f"k = 3/2 and k' = 1/8 residuals exact: {consistent}")
