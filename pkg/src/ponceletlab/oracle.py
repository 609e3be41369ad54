"""Brute-force billiard verifier, independent of every closed form.

The constructors in `families` come from explicit algebra; the functions
here re-derive the same objects from nothing but elementary geometry
(quadratic ray-ellipse intersection, mirror reflection about the tangent)
so the two routes can be compared: a traced orbit must reproduce the
closed-form vertices, every side must be tangent to the caustic, and the
normal must bisect the vertex angle.  Keep this module free of anything
imported from the closed forms other than the Polygon container.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conics import Ellipse
from .families import GeometryError, Polygon

__all__ = [
    "TangentRayError",
    "OffTableError",
    "Ray",
    "ray_through",
    "reflect_step",
    "trace_closure",
    "tangency_residual",
    "reflection_residual",
]


class TangentRayError(GeometryError):
    """Ray is (numerically) tangent to the table: no transversal far hit."""


class OffTableError(GeometryError):
    """A vertex claimed to be on the table is too far from it."""


@dataclass(frozen=True)
class Ray:
    """Origin plus direction; the direction is normalized on construction."""

    origin: np.ndarray
    direction: np.ndarray

    def __post_init__(self):
        o = np.asarray(self.origin, dtype=float)
        d = np.asarray(self.direction, dtype=float)
        if o.shape != (2,) or d.shape != (2,):
            raise ValueError("Ray needs 2D origin and direction")
        norm = np.linalg.norm(d)
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError(f"direction must be a nonzero finite vector, got {d}")
        object.__setattr__(self, "origin", o)
        object.__setattr__(self, "direction", d / norm)


def ray_through(p, q) -> Ray:
    """Ray anchored at p aimed at q."""
    p = np.asarray(p, dtype=float)
    d = np.asarray(q, dtype=float) - p
    norm = np.linalg.norm(d)
    if norm == 0.0:
        raise GeometryError("coincident points define no ray")
    return Ray(p, d / norm)


def _ellipse_tangent_dir(point: np.ndarray, table: Ellipse) -> np.ndarray:
    # gradient of the implicit form rotated by 90 degrees
    tg = np.array([-point[1] / table.b**2, point[0] / table.a**2])
    return tg / np.linalg.norm(tg)


def reflect_step(ray: Ray, table: Ellipse) -> Ray:
    """Advance one bounce: far ray-ellipse intersection, then mirror the
    direction about the tangent line there.

    The quadratic in the ray parameter is solved with the deflated
    (conjugate) root formula so the near root at the ray's own origin does
    not contaminate the far one at grazing incidence.
    """
    ox, oy = ray.origin
    dx, dy = ray.direction
    a2, b2 = table.a**2, table.b**2
    qa = dx * dx / a2 + dy * dy / b2
    qb = 2.0 * (ox * dx / a2 + oy * dy / b2)
    qc = ox * ox / a2 + oy * oy / b2 - 1.0
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0.0:
        raise TangentRayError("ray misses or grazes the table")
    sq = math.sqrt(disc)
    q = -0.5 * (qb + math.copysign(sq, qb)) if qb != 0.0 else 0.5 * sq
    roots = [q / qa]
    if q != 0.0:
        roots.append(qc / q)
    t = max(roots)
    if t <= 1e-9 * (table.a + table.b):
        raise TangentRayError("no forward transversal intersection (tangent direction?)")
    hit = ray.origin + t * ray.direction
    nrm = np.array([hit[0] / a2, hit[1] / b2])
    nrm /= np.linalg.norm(nrm)
    d = ray.direction - 2.0 * float(ray.direction @ nrm) * nrm
    d /= np.linalg.norm(d)
    return Ray(hit, d)


def trace_closure(start: Ray, table: Ellipse, n: int):
    """Bounce n times from `start`; return the visited polygon (start origin
    plus the first n-1 impacts) and how badly the orbit fails to close,
    |final origin - start origin| + |final direction - start direction|."""
    if n < 3:
        raise ValueError(f"need n >= 3 bounces, got {n}")
    ray = start
    verts = [start.origin]
    for _ in range(n):
        ray = reflect_step(ray, table)
        verts.append(ray.origin)
    err = float(
        np.linalg.norm(verts[-1] - start.origin)
        + np.linalg.norm(ray.direction - start.direction)
    )
    return Polygon(np.array(verts[:-1])), err


def tangency_residual(p, q, conic: Ellipse) -> float:
    """Dual-conic residual of the line through p and q against `conic`:
    with the line written ux + vy = 1 this is |a^2 u^2 + b^2 v^2 - 1|,
    zero exactly at tangency.  Lines through the origin (no such form)
    are scored with the homogeneous dual form, which has the same zeros."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if np.array_equal(p, q):
        raise GeometryError("coincident points define no line")
    det = p[0] * q[1] - p[1] * q[0]
    scale = np.linalg.norm(p) * np.linalg.norm(q)
    if abs(det) > 1e-12 * scale:
        u = (q[1] - p[1]) / det
        v = (p[0] - q[0]) / det
        return abs(conic.a**2 * u * u + conic.b**2 * v * v - 1.0)
    line = np.array([p[1] - q[1], q[0] - p[0], det])
    line /= np.linalg.norm(line)
    return abs(conic.a**2 * line[0] ** 2 + conic.b**2 * line[1] ** 2 - line[2] ** 2)


def reflection_residual(poly, table: Ellipse) -> float:
    """Largest angular mismatch (radians) over the vertices between the
    incoming-edge/tangent and tangent/outgoing-edge angles; zero for a true
    billiard orbit by the reflection property."""
    v = poly.vertices if isinstance(poly, Polygon) else np.asarray(poly, dtype=float)
    n = v.shape[0]
    worst = 0.0
    for i in range(n):
        if abs(table.point_residual(*v[i])) > 1e-8:
            raise OffTableError(f"vertex {i} is not on the table to 1e-8")
        tg = _ellipse_tangent_dir(v[i], table)
        vin = v[i] - v[(i - 1) % n]
        vout = v[(i + 1) % n] - v[i]
        vin = vin / np.linalg.norm(vin)
        vout = vout / np.linalg.norm(vout)
        ain = abs(math.atan2(vin[0] * tg[1] - vin[1] * tg[0], float(vin @ tg)))
        aout = abs(math.atan2(tg[0] * vout[1] - tg[1] * vout[0], float(tg @ vout)))
        worst = max(worst, abs(ain - aout))
    return worst
