"""Cosine-space and log-cosine-space curve machinery.

Cosine triples of the incircle/confocal families live on a plane cubic
(an equilateral cubic shaped like a guitar pick) inside the
plane c1+c2+c3 = k; the circumcircle/excentral triples live on the
intersection of a sphere with the Titeica surface xyz = k'.  This module
owns the projection basis, the implicit residuals, the locus sampler the
CLI exports, and a symmetric Hausdorff comparator used to check that
affinely paired families sweep identical curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .conics import r_over_R_confocal
from .families import (
    FamilySpec,
    GeometryError,
    NonAcuteTriangleError,
    billiard_outer_axes,
    family_period,
    family_vertices,
    internal_cosines,
)
from .invariants import cosine_product_target, cosine_sum_target

__all__ = [
    "CosineTriple",
    "PlaneBasis",
    "BASIS",
    "plane_project",
    "cubic_residual",
    "pick_residual",
    "sphere_titeica_residuals",
    "union_residual",
    "log_cosine",
    "LocusSample",
    "sample_locus",
    "curve_points",
    "hausdorff_distance",
    "locus_hausdorff",
]

_ONES = np.ones(3) / math.sqrt(3.0)
_U_HAT = np.array([-1.0, 1.0, 0.0]) / math.sqrt(2.0)   # normalize((0,0,1) x (1,1,1))
_V_HAT = np.array([-1.0, -1.0, 2.0]) / math.sqrt(6.0)  # normalize((1,1,1) x u_hat)


@dataclass(frozen=True)
class PlaneBasis:
    """Orthonormal basis of the plane orthogonal to (1,1,1), onto which
    constant-sum cosine triples are projected."""

    u_hat: np.ndarray = field(default_factory=_U_HAT.copy)
    v_hat: np.ndarray = field(default_factory=_V_HAT.copy)

    def __post_init__(self):
        for vec in (self.u_hat, self.v_hat):
            if abs(np.linalg.norm(vec) - 1.0) > 1e-15 or abs(float(vec @ _ONES)) > 1e-15:
                raise ValueError("basis vectors must be unit and orthogonal to (1,1,1)")
        if abs(float(self.u_hat @ self.v_hat)) > 1e-15:
            raise ValueError("basis vectors must be mutually orthogonal")


BASIS = PlaneBasis()


@dataclass(frozen=True)
class CosineTriple:
    """A point (c1, c2, c3) of cosine space."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        for c in (self.c1, self.c2, self.c3):
            if not abs(c) <= 1.0:
                raise ValueError(f"cosine component out of range: {c}")

    @classmethod
    def from_polygon(cls, tri) -> "CosineTriple":
        """Triple of interior-angle cosines of a triangle; checks the angle
        sum reconstructs pi, which any genuine triangle must satisfy."""
        c = internal_cosines(tri)
        if c.shape != (3,):
            raise GeometryError("cosine triples are defined for triangles")
        if np.any(np.abs(c) >= 1.0):
            raise GeometryError("degenerate vertex angle")
        if abs(math.fsum(map(math.acos, c)) - math.pi) > 1e-9:
            raise GeometryError("arccos values do not sum to pi")
        return cls(float(c[0]), float(c[1]), float(c[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3])


def _as_points(triple) -> np.ndarray:
    if isinstance(triple, CosineTriple):
        return triple.as_array()
    return np.asarray(triple, dtype=float)


def plane_project(triple):
    """Inner products with the basis: (c . u_hat, c . v_hat).  The component
    along (1,1,1) is the conserved sum over sqrt(3) and is discarded.
    Accepts a CosineTriple or an (..., 3) array."""
    c = _as_points(triple)
    u = c @ BASIS.u_hat
    v = c @ BASIS.v_hat
    if c.ndim == 1:
        return float(u), float(v)
    return u, v


def cubic_residual(u, v, k: float):
    """Implicit equation of the guitar-pick cubic with cosine sum k, evaluated
    at plane coordinates (u, v); zero on every projected triple.

    Note the sign of the odd (degree-3) term: with v_hat = (-1,-1,2)/sqrt(6)
    the curve's three corners point along -v_hat rotations, which fixes the
    odd term as 3*sqrt(6)*(v^2 - 3u^2)*v.  (Flipping v_hat would flip it.)
    """
    return (
        3.0 * math.sqrt(6.0) * (v * v - 3.0 * u * u) * v
        - 9.0 * (k - 3.0) * (u * u + v * v)
        + (2.0 * k - 3.0) * (k + 3.0) ** 2
    )


def pick_residual(c1, c2, k: float):
    """Implicit relation between two cosines of a triangle whose cosines sum
    to k (the third eliminated); symmetric in c1 <-> c2, zero on samples."""
    return (
        2.0 * c1 * c2 * (c1 + c2)
        - 2.0 * (c1 * c1 + c2 * c2)
        - 2.0 * (k + 1.0) * c1 * c2
        + 2.0 * k * (c1 + c2)
        + 1.0
        - k * k
    )


def sphere_titeica_residuals(triple, k_prime: float):
    """(sphere, titeica) implicit residuals at the triple for the product
    constant k': c1^2+c2^2+c3^2 + 2k' - 1 and c1 c2 c3 - k'."""
    c = _as_points(triple)
    sphere = (c * c).sum(axis=-1) + 2.0 * k_prime - 1.0
    titeica = c.prod(axis=-1) - k_prime
    if c.ndim == 1:
        return float(sphere), float(titeica)
    return sphere, titeica


def union_residual(triple):
    """2 c1 c2 c3 + c1^2 + c2^2 + c3^2 - 1: the k'-free combination, zero on
    the cosine triple of every triangle (it is the angle-sum identity), and
    in particular on the whole circumcircle/excentral union surface."""
    c = _as_points(triple)
    out = 2.0 * c.prod(axis=-1) + (c * c).sum(axis=-1) - 1.0
    return float(out) if c.ndim == 1 else out


def log_cosine(triple) -> np.ndarray:
    """Componentwise natural log of an all-positive (acute) cosine triple."""
    c = _as_points(triple)
    if np.any(c <= 0.0):
        raise NonAcuteTriangleError("log-cosine needs an acute triangle (all cosines > 0)")
    return np.log(c)


# ----------------------------------------------------------------------
# locus sampling
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class LocusSample:
    param: float
    cosines: CosineTriple
    point: np.ndarray  # cosine- or log-cosine-space coordinates
    u: float
    v: float
    residuals: dict


def _sum_constant(spec: FamilySpec) -> float | None:
    if spec.kind in ("incircle", "confocal"):
        return cosine_sum_target(spec.a, spec.b)
    if spec.kind == "billiard" and spec.n == 3:
        return 1.0 + r_over_R_confocal(*billiard_outer_axes(spec.a, spec.b, spec.n, spec.tau))
    return None


def sample_locus(spec: FamilySpec, n_samples: int, space: str = "cosine"):
    """Ordered LocusSamples over one closed-open period of the family.

    space "cosine" stores raw triples; "logcos" stores componentwise logs
    and is only defined for the always-acute circumcircle/excentral kinds.
    Residuals attached per kind: the guitar-pick cubic for sum-conserving
    triangle families, sphere/Titeica for product-conserving ones (computed
    from the raw cosines in either space).
    """
    if n_samples < 3:
        raise ValueError(f"need at least 3 samples, got {n_samples}")
    if space not in ("cosine", "logcos"):
        raise ValueError(f"space must be 'cosine' or 'logcos', got {space!r}")
    if space == "logcos" and spec.kind not in ("circumcircle", "excentral"):
        raise ValueError("log-cosine space needs an always-acute family "
                         "(circumcircle or excentral)")
    if spec.kind == "billiard" and spec.n != 3:
        raise ValueError("cosine-space loci are defined for triangle families")
    ts = np.linspace(0.0, family_period(spec), n_samples, endpoint=False)
    verts = family_vertices(spec, ts)
    k_sum = _sum_constant(spec)
    k_prod = (
        cosine_product_target(spec.a, spec.b)
        if spec.kind in ("circumcircle", "excentral")
        else None
    )
    out = []
    for t, v in zip(ts, verts):
        triple = CosineTriple.from_polygon(v) if v.shape[0] == 3 else None
        cos = internal_cosines(v)
        point = log_cosine(cos) if space == "logcos" else cos
        u, vv = plane_project(point)
        residuals = {}
        if k_sum is not None and cos.shape == (3,):
            uu, vraw = plane_project(cos)
            residuals["cubic"] = cubic_residual(uu, vraw, k_sum)
        if k_prod is not None:
            s, ti = sphere_titeica_residuals(cos, k_prod)
            residuals["sphere"] = s
            residuals["titeica"] = ti
        out.append(LocusSample(float(t), triple, np.asarray(point, dtype=float),
                               float(u), float(vv), residuals))
    return out


# ----------------------------------------------------------------------
# identical-curve comparison
# ----------------------------------------------------------------------

def _curve_fn(spec: FamilySpec, representation: str):
    if representation == "uv":
        def fn(ts):
            u, v = plane_project(internal_cosines(family_vertices(spec, ts)))
            return np.stack([u, v], axis=-1)
    elif representation == "triple":
        def fn(ts):
            return internal_cosines(family_vertices(spec, ts))
    else:
        raise ValueError(f"representation must be 'uv' or 'triple', got {representation!r}")
    return fn


def curve_points(spec: FamilySpec, representation: str = "uv",
                 tol: float = 1e-7, n0: int = 512, max_rounds: int = 26) -> np.ndarray:
    """Ordered, closed (first point repeated last) sampling of the swept
    curve, refined until every chord's midpoint sagitta is below tol, so the
    polyline is within tol of the true curve everywhere; high-curvature
    stretches (the pick corners) end up sampled far more densely than
    flat ones."""
    fn = _curve_fn(spec, representation)
    ts = np.linspace(0.0, family_period(spec), n0 + 1)
    pts = fn(ts)
    for _ in range(max_rounds):
        mid_t = 0.5 * (ts[:-1] + ts[1:])
        mid_p = fn(mid_t)
        chord = pts[1:] - pts[:-1]
        rel = mid_p - pts[:-1]
        len_sq = (chord * chord).sum(axis=1)
        len_sq = np.where(len_sq > 0.0, len_sq, 1.0)
        proj = (rel * chord).sum(axis=1) / len_sq
        sag = np.linalg.norm(rel - chord * proj[:, None], axis=1)
        bad = sag > tol
        if not bad.any():
            break
        ts = np.concatenate([ts, mid_t[bad]])
        pts = np.concatenate([pts, mid_p[bad]])
        order = np.argsort(ts, kind="stable")
        ts = ts[order]
        pts = pts[order]
    return pts


def _max_distance_to_polyline(P: np.ndarray, Q: np.ndarray) -> float:
    """max over rows of P of the distance to the polyline with ordered
    vertices Q (closed: Q[0] == Q[-1]).  Candidate segments come from the
    two nearest sample points of each query, which is exact whenever Q is
    sampled densely relative to its distance to P."""
    tree = cKDTree(Q)
    _, idx = tree.query(P, k=2)
    last_seg = Q.shape[0] - 2
    cand = np.stack(
        [
            np.clip(idx[:, 0] - 1, 0, last_seg),
            np.clip(idx[:, 0], 0, last_seg),
            np.clip(idx[:, 1] - 1, 0, last_seg),
            np.clip(idx[:, 1], 0, last_seg),
        ],
        axis=1,
    )
    S = Q[cand]
    W = Q[cand + 1] - S
    rel = P[:, None, :] - S
    len_sq = (W * W).sum(axis=2)
    len_sq = np.where(len_sq > 0.0, len_sq, 1.0)
    frac = np.clip((rel * W).sum(axis=2) / len_sq, 0.0, 1.0)
    foot = S + frac[:, :, None] * W
    dist = np.linalg.norm(P[:, None, :] - foot, axis=2)
    return float(dist.min(axis=1).max())


def hausdorff_distance(A: np.ndarray, B: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two ordered closed polylines."""
    return max(_max_distance_to_polyline(A, B), _max_distance_to_polyline(B, A))


def locus_hausdorff(spec_a: FamilySpec, spec_b: FamilySpec,
                    representation: str = "uv", tol: float = 1e-7) -> float:
    """Symmetric Hausdorff distance between the curves swept by two families,
    in the projected plane ("uv") or raw cosine space ("triple")."""
    A = curve_points(spec_a, representation, tol)
    B = curve_points(spec_b, representation, tol)
    return hausdorff_distance(A, B)
