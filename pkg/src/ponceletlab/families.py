"""Closed-form constructors for the four Poncelet triangle families, the
universal-measure N-periodic constructor, derived polygons (excentral,
orthic, tangent "outer" polygon), and the confocal caustic closure solver.

Family conventions (semi-axes stored in FamilySpec):

* incircle     -- (a, b) are the OUTER ellipse semi-axes; the caustic is the
                  concentric circle of radius r = ab/(a+b);
* confocal     -- same (a, b) as the incircle family it is the diag(s, 1)
                  image of; its own outer ellipse is (s*a, b);
* circumcircle -- (a, b) are the CAUSTIC semi-axes; vertices live on the
                  concentric circle of radius R = a+b;
* excentral    -- same (a, b) as the circumcircle family it is the
                  diag(s', 1) image of; vertices live on (s'*(a+b), a+b);
* billiard     -- (a, b) are the CAUSTIC semi-axes (a >= b) of an N-periodic
                  family with turning number tau, parametrized by the
                  universal measure u with period 4K.

The triangle constructors are thin wrappers over vectorized `*_vertices`
functions that accept an array of parameter values and return an
(..., 3, 2) vertex array; sweeps and curve samplers call those directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conics import (
    Ellipse,
    confocal_scale,
    excentral_scale,
)
from .elliptic import complete_K, jacobi_sn_cn_dn

__all__ = [
    "GeometryError",
    "DegenerateTriangleError",
    "NonAcuteTriangleError",
    "ParametrizationError",
    "NoCausticError",
    "Polygon",
    "FamilySpec",
    "incircle_vertices",
    "confocal_vertices",
    "circumcircle_vertices",
    "excentral_family_vertices",
    "incircle_triangle",
    "confocal_triangle",
    "circumcircle_triangle",
    "excentral_family_triangle",
    "billiard_periodic",
    "billiard_outer_axes",
    "solve_confocal_caustic",
    "excentral_of",
    "orthic_of",
    "outer_polygon",
    "internal_cosines",
    "family_vertices",
    "family_period",
    "polygon_at",
]


class GeometryError(ValueError):
    """Base class for geometric construction failures."""


class DegenerateTriangleError(GeometryError):
    """Collinear or repeated vertices where a proper polygon is required."""


class NonAcuteTriangleError(GeometryError):
    """Operation defined only for acute triangles (all cosines positive)."""


class ParametrizationError(GeometryError):
    """Closed-form parametrization breaks down for these inputs."""


class NoCausticError(GeometryError):
    """No confocal caustic closes an (n, tau)-periodic in the given outer."""


@dataclass(frozen=True)
class Polygon:
    """Closed planar polygon: ordered (n, 2) vertex array, vertex i joined
    to vertex i+1 mod n."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise DegenerateTriangleError(
                f"polygon needs an (n>=3, 2) vertex array, got shape {v.shape}"
            )
        object.__setattr__(self, "vertices", v)
        diam = math.hypot(*(v.max(axis=0) - v.min(axis=0)))
        gaps = np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)
        if diam == 0.0 or gaps.min() < 1e-12 * diam:
            raise DegenerateTriangleError("consecutive vertices coincide")

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def perimeter(self) -> float:
        v = self.vertices
        return float(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1).sum())


_KINDS = ("incircle", "confocal", "circumcircle", "excentral", "billiard")


@dataclass(frozen=True)
class FamilySpec:
    """Which one-parameter polygon family to build, and from which axes."""

    kind: str
    a: float
    b: float
    n: int = 3
    tau: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"semi-axes must be positive, got ({self.a}, {self.b})")
        if self.kind == "billiard":
            if self.n < 3 or self.tau < 1 or math.gcd(self.n, self.tau) != 1:
                raise ParametrizationError(
                    f"billiard needs n >= 3, tau >= 1, gcd(n, tau) = 1, got ({self.n}, {self.tau})"
                )
            if 2 * self.tau >= self.n:
                raise ParametrizationError(
                    f"rotation number tau/n must be below 1/2 for an ellipse "
                    f"caustic, got ({self.n}, {self.tau})"
                )
            if self.a < self.b:
                # canonical caustic frame: major axis along x
                a, b = self.b, self.a
                object.__setattr__(self, "a", a)
                object.__setattr__(self, "b", b)


# ----------------------------------------------------------------------
# triangle families (vectorized over the sweep parameter)
# ----------------------------------------------------------------------

def incircle_vertices(a: float, b: float, t) -> np.ndarray:
    """Vertices of incircle-family triangles: P1 on the outer ellipse at
    angle t, P2/P3 the two remaining tangency-closing vertices."""
    t = np.asarray(t, dtype=float)
    ct, st = np.cos(t), np.sin(t)
    c2 = a * a - b * b
    w1 = np.sqrt(c2 * (a + b) ** 2 * ct * ct + 2.0 * a * b**3 + b**4)
    w2 = -a * b / ((c2 * ct * ct + b * b) * (a + b))
    p1 = np.stack([a * ct, b * st], axis=-1)
    p2 = w2[..., None] * np.stack([a * a * ct - w1 * st, b * b * st + w1 * ct], axis=-1)
    p3 = w2[..., None] * np.stack([a * a * ct + w1 * st, b * b * st - w1 * ct], axis=-1)
    return np.stack([p1, p2, p3], axis=-2)


def confocal_vertices(a: float, b: float, t) -> np.ndarray:
    """diag(s, 1) image of the incircle-family triangle at the same t; these
    are true billiard 3-periodics of the confocal pair with outer (s*a, b)."""
    return incircle_vertices(a, b, t) * np.array([confocal_scale(a, b), 1.0])


def circumcircle_vertices(a: float, b: float, phi) -> np.ndarray:
    """Vertices of circumcircle-family triangles with caustic (a, b): P1 at
    angle phi on the circle of radius a+b.

    The closed form is stated for the upper semicircle via sqrt(1 - u^2);
    substituting the signed sin(phi) extends it smoothly to the full circle
    and is identical to mirroring the upper-branch triangle in y (the two
    non-anchor vertices swap labels, which no angle quantity notices).
    """
    phi = np.asarray(phi, dtype=float)
    u, v = np.cos(phi), np.sin(phi)
    c2 = a * a - b * b
    rad = a**3 * (a + 2.0 * b) - c2 * (a + b) ** 2 * u * u
    if np.any(rad < -1e-12):
        raise ParametrizationError(
            "negative radicand in circumcircle closed form; pair is not interscribable"
        )
    w = np.sqrt(np.maximum(rad, 0.0))
    den = (u * u - 1.0) * a * a - b * b * u * u
    p1 = (a + b) * np.stack([u, v], axis=-1)
    p2 = np.stack([(b * b * u - v * w) * a, (v * a * a + w * u) * b], axis=-1) / den[..., None]
    p3 = np.stack([(b * b * u + w * v) * a, (v * a * a - w * u) * b], axis=-1) / den[..., None]
    return np.stack([p1, p2, p3], axis=-2)


def excentral_family_vertices(a: float, b: float, phi) -> np.ndarray:
    """diag(s', 1) image of the circumcircle-family triangle at the same phi."""
    return circumcircle_vertices(a, b, phi) * np.array([excentral_scale(a, b), 1.0])


def incircle_triangle(a: float, b: float, t: float) -> Polygon:
    return Polygon(incircle_vertices(a, b, float(t)))


def confocal_triangle(a: float, b: float, t: float) -> Polygon:
    return Polygon(confocal_vertices(a, b, float(t)))


def circumcircle_triangle(a: float, b: float, phi: float) -> Polygon:
    return Polygon(circumcircle_vertices(a, b, float(phi)))


def excentral_family_triangle(a: float, b: float, phi: float) -> Polygon:
    return Polygon(excentral_family_vertices(a, b, float(phi)))


# ----------------------------------------------------------------------
# universal-measure N-periodics
# ----------------------------------------------------------------------

def _billiard_setup(a_c: float, b_c: float, n: int, tau: int):
    if not (a_c > 0.0 and b_c > 0.0):
        raise ValueError(f"caustic semi-axes must be positive, got ({a_c}, {b_c})")
    if a_c < b_c:
        raise ParametrizationError(
            f"caustic axes ({a_c}, {b_c}) have a_c < b_c; swap x and y first "
            "(the universal measure is written for the major axis along x)"
        )
    if n < 3 or tau < 1 or math.gcd(n, tau) != 1:
        raise ValueError(f"need n >= 3, tau >= 1, gcd(n, tau) = 1, got ({n}, {tau})")
    m_sq = (a_c * a_c - b_c * b_c) / (a_c * a_c)
    K = complete_K(m_sq)
    du = 4.0 * tau * K / n
    cn_half = jacobi_sn_cn_dn(0.5 * du, m_sq)[1]
    if cn_half <= 0.0:
        raise ParametrizationError(
            f"cn(du/2) = {cn_half:.3g} <= 0: no (n={n}, tau={tau}) family closes "
            "on this caustic (requires 2*tau < n)"
        )
    b = b_c / cn_half
    a = math.sqrt(b * b + a_c * a_c - b_c * b_c)
    return m_sq, du, a, b


def billiard_outer_axes(a_c: float, b_c: float, n: int, tau: int) -> tuple[float, float]:
    """Semi-axes of the outer ellipse on which the (n, tau)-periodic family
    with caustic (a_c, b_c) has its vertices."""
    _, _, a, b = _billiard_setup(a_c, b_c, n, tau)
    return a, b


def billiard_vertices(a_c: float, b_c: float, n: int, tau: int, u: float) -> np.ndarray:
    """Vertex array of the (n, tau)-periodic at universal-measure phase u:
    P_i = (-a sn(u + i du), b cn(u + i du)), du = 4 tau K / n."""
    m_sq, du, a, b = _billiard_setup(a_c, b_c, n, tau)
    verts = np.empty((n, 2))
    for i in range(1, n + 1):
        sn, cn, _ = jacobi_sn_cn_dn(u + i * du, m_sq)
        verts[i - 1] = (-a * sn, b * cn)
    return verts


def billiard_periodic(a_c: float, b_c: float, n: int, tau: int, u: float) -> Polygon:
    return Polygon(billiard_vertices(a_c, b_c, n, tau, float(u)))


def solve_confocal_caustic(alpha: float, beta: float, n: int, tau: int) -> tuple[float, float]:
    """Caustic semi-axes (a_c, b_c) confocal with the outer (alpha, beta)
    whose (n, tau)-periodic family closes, by bisection on the derived-outer
    mismatch g(b_c) = b_c / cn(2 tau K / n, m) - beta.

    g has a single sign change on (0, beta) exactly when 2*tau < n; outside
    that range cn is nonpositive and NoCausticError is raised.
    """
    if not (alpha > beta > 0.0):
        raise ValueError(f"need alpha > beta > 0, got ({alpha}, {beta})")
    if n < 3 or tau < 1 or math.gcd(n, tau) != 1:
        raise ValueError(f"need n >= 3, tau >= 1, gcd(n, tau) = 1, got ({n}, {tau})")
    foc = alpha * alpha - beta * beta

    def g(b_c: float) -> float:
        m_sq = foc / (b_c * b_c + foc)
        if m_sq >= 1.0:  # b_c so tiny the modulus rounds to 1
            return -beta
        K = complete_K(m_sq)
        cn = jacobi_sn_cn_dn(2.0 * tau * K / n, m_sq)[1]
        if cn <= 0.0:
            return -beta
        return b_c / cn - beta

    lo = max(1e-7 * beta, 3e-8 * math.sqrt(foc))
    hi = beta * (1.0 - 1e-12)
    if not (g(lo) < 0.0 < g(hi)):
        raise NoCausticError(
            f"no (n={n}, tau={tau})-periodic confocal caustic inside ({alpha}, {beta})"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        if g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    b_c = 0.5 * (lo + hi)
    return math.sqrt(b_c * b_c + foc), b_c


# ----------------------------------------------------------------------
# derived polygons
# ----------------------------------------------------------------------

def _triangle_array(tri) -> np.ndarray:
    v = tri.vertices if isinstance(tri, Polygon) else np.asarray(tri, dtype=float)
    if v.shape != (3, 2):
        raise DegenerateTriangleError(f"expected a triangle, got shape {v.shape}")
    diam = math.hypot(*(v.max(axis=0) - v.min(axis=0)))
    e1, e2 = v[1] - v[0], v[2] - v[0]
    area2 = abs(e1[0] * e2[1] - e1[1] * e2[0])
    if diam == 0.0 or area2 < 1e-14 * diam * diam:
        raise DegenerateTriangleError("triangle is (numerically) collinear")
    return v


def _side_lengths(v: np.ndarray) -> np.ndarray:
    # l[i] = length of the side opposite vertex i
    return np.linalg.norm(np.roll(v, -1, axis=0) - np.roll(v, 1, axis=0), axis=1)


def excentral_of(tri) -> Polygon:
    """Excentral triangle: vertex i is the excenter opposite vertex i,
    (-l1 P1 + l2 P2 + l3 P3)/(-l1 + l2 + l3) and cyclic."""
    v = _triangle_array(tri)
    l = _side_lengths(v)
    out = np.empty((3, 2))
    for i in range(3):
        w = l.copy()
        w[i] = -w[i]
        out[i] = (w[:, None] * v).sum(axis=0) / w.sum()
    return Polygon(out)


def orthic_of(tri) -> Polygon:
    """Triangle of the altitude feet; requires an acute input (the foot of
    an obtuse triangle escapes its opposite side and the incircle relation
    used by the invariant checks no longer applies)."""
    v = _triangle_array(tri)
    if np.any(internal_cosines(v) <= 0.0):
        raise NonAcuteTriangleError("orthic triangle requested for a non-acute triangle")
    feet = np.empty((3, 2))
    for i in range(3):
        a, b, c = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
        d = c - b
        feet[i] = b + d * (float((a - b) @ d) / float(d @ d))
    return Polygon(feet)


def outer_polygon(poly, outer: Ellipse) -> Polygon:
    """Polygon of tangent-line intersections: vertex i is where the tangents
    to `outer` at poly vertices i+1 and i+2 meet, so that for a triangle the
    labels line up with the excentral convention (output vertex i faces input
    vertex i)."""
    v = poly.vertices if isinstance(poly, Polygon) else np.asarray(poly, dtype=float)
    n = v.shape[0]
    for x, y in v:
        if abs(outer.point_residual(x, y)) > 1e-9:
            raise GeometryError(
                f"vertex ({x}, {y}) is not on the outer ellipse ({outer.a}, {outer.b})"
            )
    rows = v / np.array([outer.a**2, outer.b**2])  # tangent at (x0,y0): row . (x,y) = 1
    out = np.empty((n, 2))
    for i in range(n):
        r1, r2 = rows[(i + 1) % n], rows[(i + 2) % n]
        det = r1[0] * r2[1] - r1[1] * r2[0]
        scale = np.linalg.norm(r1) * np.linalg.norm(r2)
        if abs(det) < 1e-12 * scale:
            raise GeometryError("consecutive tangents are parallel (antipodal vertices)")
        out[i] = np.array([r2[1] - r1[1], r1[0] - r2[0]]) / det
    return Polygon(out)


def internal_cosines(poly) -> np.ndarray:
    """Cosine of the interior angle at each vertex, by normalized dot product
    of the two incident edges; the same formula is applied to self-intersected
    (tau > 1) polygons without any turning-number correction."""
    v = poly.vertices if isinstance(poly, Polygon) else np.asarray(poly, dtype=float)
    e_prev = np.roll(v, 1, axis=-2) - v
    e_next = np.roll(v, -1, axis=-2) - v
    n1 = np.linalg.norm(e_prev, axis=-1)
    n2 = np.linalg.norm(e_next, axis=-1)
    if np.any(n1 == 0.0) or np.any(n2 == 0.0):
        raise DegenerateTriangleError("zero-length edge")
    return (e_prev * e_next).sum(axis=-1) / (n1 * n2)


# ----------------------------------------------------------------------
# sweep plumbing
# ----------------------------------------------------------------------

def family_vertices(spec: FamilySpec, ts) -> np.ndarray:
    """(len(ts), n, 2) vertex array of the family at each parameter value."""
    ts = np.asarray(ts, dtype=float)
    if spec.kind == "incircle":
        return incircle_vertices(spec.a, spec.b, ts)
    if spec.kind == "confocal":
        return confocal_vertices(spec.a, spec.b, ts)
    if spec.kind == "circumcircle":
        return circumcircle_vertices(spec.a, spec.b, ts)
    if spec.kind == "excentral":
        return excentral_family_vertices(spec.a, spec.b, ts)
    return np.array(
        [billiard_vertices(spec.a, spec.b, spec.n, spec.tau, u) for u in np.atleast_1d(ts)]
    )


def family_period(spec: FamilySpec) -> float:
    """One full period of the sweep parameter: 2*pi for the trigonometric
    triangle families, 4K for the universal measure."""
    if spec.kind == "billiard":
        m_sq = (spec.a * spec.a - spec.b * spec.b) / (spec.a * spec.a)
        return 4.0 * complete_K(m_sq)
    return 2.0 * math.pi


def polygon_at(spec: FamilySpec, t: float) -> Polygon:
    if spec.kind == "billiard":
        return billiard_periodic(spec.a, spec.b, spec.n, spec.tau, float(t))
    return Polygon(family_vertices(spec, float(t)))
