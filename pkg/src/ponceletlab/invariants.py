"""Closed-form invariant targets and swept-statistics verification.

A sweep samples one family parameter uniformly over a full period, computes
a scalar quantity per sample, and reports mean / max deviation against the
closed-form target when one exists.  Means use compensated summation so the
reduction is order-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .conics import r_over_R_confocal
from .families import (
    FamilySpec,
    billiard_outer_axes,
    family_period,
    family_vertices,
    internal_cosines,
    orthic_of,
)

__all__ = [
    "InvariantReport",
    "cosine_sum_target",
    "cosine_product_target",
    "cosine_extremes",
    "applicable_quantities",
    "sweep",
    "sweep_reports",
    "observed_cosine_extremes",
]


@dataclass(frozen=True)
class InvariantReport:
    quantity: str
    samples: int
    mean: float
    max_abs_deviation: float
    closed_form_target: float | None
    tol: float
    passed: bool


def cosine_sum_target(a: float, b: float) -> float:
    """Conserved sum of cosines k = 1 + 2ab/(a+b)^2 of the incircle family
    with outer semi-axes (a, b), shared by its confocal image."""
    return 1.0 + 2.0 * a * b / (a + b) ** 2


def cosine_product_target(a: float, b: float) -> float:
    """Conserved product of cosines k' = ab/(2(a+b)^2) of the circumcircle
    family with caustic semi-axes (a, b), shared by its excentral image."""
    return a * b / (2.0 * (a + b) ** 2)


def cosine_extremes(a: float, b: float, kind: str) -> tuple[float, float]:
    """Closed-form (c_min, c_max) attained by vertex cosines over a sweep:
    incircle family {1 - 2a^2/(a+b)^2, 1 - 2b^2/(a+b)^2}, circumcircle
    family {b/(a+b), a/(a+b)}, each sorted ascending."""
    if kind == "incircle":
        pair = (1.0 - 2.0 * a * a / (a + b) ** 2, 1.0 - 2.0 * b * b / (a + b) ** 2)
    elif kind == "circumcircle":
        pair = (b / (a + b), a / (a + b))
    else:
        raise ValueError(f"kind must be 'incircle' or 'circumcircle', got {kind!r}")
    return min(pair), max(pair)


# quantities swept per family kind, primary one first
_QUANTITIES = {
    "incircle": ("cosine_sum",),
    "confocal": ("cosine_sum", "perimeter"),
    "circumcircle": ("cosine_product", "orthic_inradius", "orthic_circumradius"),
    "excentral": ("cosine_product",),
    "billiard": ("cosine_sum", "perimeter"),
}


def applicable_quantities(spec: FamilySpec) -> tuple[str, ...]:
    return _QUANTITIES[spec.kind]


def _triangle_inradius(v: np.ndarray) -> float:
    l = np.linalg.norm(np.roll(v, -1, axis=0) - np.roll(v, 1, axis=0), axis=1)
    s = l.sum() / 2.0
    e1, e2 = v[1] - v[0], v[2] - v[0]
    area = 0.5 * abs(e1[0] * e2[1] - e1[1] * e2[0])
    return area / s


def _triangle_circumradius(v: np.ndarray) -> float:
    l = np.linalg.norm(np.roll(v, -1, axis=0) - np.roll(v, 1, axis=0), axis=1)
    e1, e2 = v[1] - v[0], v[2] - v[0]
    area = 0.5 * abs(e1[0] * e2[1] - e1[1] * e2[0])
    return l[0] * l[1] * l[2] / (4.0 * area)


def _quantity_values(spec: FamilySpec, quantity: str, ts: np.ndarray) -> np.ndarray:
    verts = family_vertices(spec, ts)
    if quantity == "cosine_sum":
        return internal_cosines(verts).sum(axis=-1)
    if quantity == "cosine_product":
        return internal_cosines(verts).prod(axis=-1)
    if quantity == "perimeter":
        return np.linalg.norm(np.roll(verts, -1, axis=-2) - verts, axis=-1).sum(axis=-1)
    if quantity == "orthic_inradius":
        return np.array([_triangle_inradius(orthic_of(v).vertices) for v in verts])
    if quantity == "orthic_circumradius":
        return np.array([_triangle_circumradius(orthic_of(v).vertices) for v in verts])
    raise ValueError(f"unknown quantity {quantity!r}")


def _target(spec: FamilySpec, quantity: str) -> float | None:
    if quantity == "cosine_sum":
        if spec.kind in ("incircle", "confocal"):
            return cosine_sum_target(spec.a, spec.b)
        if spec.kind == "billiard":
            if spec.n == 3:
                return 1.0 + r_over_R_confocal(
                    *billiard_outer_axes(spec.a, spec.b, spec.n, spec.tau)
                )
            if spec.n == 4:
                return 0.0
            return None  # conserved, but no closed form is claimed
    if spec.kind in ("circumcircle", "excentral"):
        if quantity == "cosine_product":
            return cosine_product_target(spec.a, spec.b)
        if quantity == "orthic_inradius":
            # Feuerbach: prod cos = r_h/(4 R_h); with R_h = (a+b)/2 this pins r_h
            return spec.a * spec.b / (spec.a + spec.b)
        if quantity == "orthic_circumradius":
            # orthic circumcircle is the nine-point circle: half the parent R
            return 0.5 * (spec.a + spec.b)
    return None  # perimeter and off-kind quantities: constancy check only


def sweep(
    spec: FamilySpec,
    n_samples: int = 1000,
    tol: float = 1e-9,
    quantity: str | None = None,
) -> InvariantReport:
    """Sample the family uniformly over one period and report the statistics
    of `quantity` (the kind's primary conserved quantity when omitted).

    `passed` requires max deviation from the mean within tol (relative tol
    for the perimeter, which is a dimensionful length) and, when a closed
    form exists, |mean - target| within tol.
    """
    if n_samples < 8:
        raise ValueError(f"need at least 8 samples, got {n_samples}")
    if quantity is None:
        quantity = _QUANTITIES[spec.kind][0]
    ts = np.linspace(0.0, family_period(spec), n_samples, endpoint=False)
    vals = _quantity_values(spec, quantity, ts)
    mean = math.fsum(vals) / n_samples
    dev = float(np.abs(vals - mean).max())
    target = _target(spec, quantity)
    tol_eff = tol * abs(mean) if quantity == "perimeter" else tol
    passed = dev <= tol_eff and (target is None or abs(mean - target) <= tol_eff)
    return InvariantReport(quantity, n_samples, mean, dev, target, tol, passed)


def sweep_reports(spec: FamilySpec, n_samples: int = 1000, tol: float = 1e-9,
                  quantity: str | None = None):
    """One InvariantReport per quantity applicable to the family kind, or
    just the named one."""
    names = (quantity,) if quantity else _QUANTITIES[spec.kind]
    return [sweep(spec, n_samples, tol, q) for q in names]


def observed_cosine_extremes(spec: FamilySpec, coarse: int = 1024) -> tuple[float, float]:
    """Empirical (min, max) vertex cosine over the family: coarse uniform
    scan followed by golden-section refinement around the extremizing
    parameter (the closed forms give the extreme values, not where they
    occur, so the locations are found numerically)."""
    period = family_period(spec)
    ts = np.linspace(0.0, period, coarse, endpoint=False)
    cos = internal_cosines(family_vertices(spec, ts))
    h = period / coarse

    def refine(flat_idx: int, sign: float) -> float:
        i, j = np.unravel_index(flat_idx, cos.shape)

        def f(t: float) -> float:
            return sign * float(internal_cosines(family_vertices(spec, np.array([t])))[0, j])

        t0 = float(ts[i])
        try:
            res = minimize_scalar(
                f, bracket=(t0 - h, t0, t0 + h), method="golden", options={"xtol": 1e-13}
            )
            return sign * float(res.fun)
        except ValueError:
            # flat landscape (circle case): the grid value is already exact
            return sign * f(t0)

    lo = refine(int(np.argmin(cos)), 1.0)
    hi = refine(int(np.argmax(cos)), -1.0)
    return lo, hi
