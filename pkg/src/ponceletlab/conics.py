"""Concentric axis-aligned conic pairs and their closed-form scalars.

Conventions used throughout the package:

* every ellipse is centered at the origin with axes along x and y, so two
  positive semi-axis lengths pin it down completely;
* semi-axes are positional (a along x, b along y), NOT sorted by size --
  the two affine scalings below can and do make the x semi-axis the minor
  one, and any operation that needs a "major axis" compares locally.

The scalars live here because they are pure functions of semi-axes: the
Cayley admission residual for 3-periodic families, the inradius/circumradius
of the two circle-based families, the two diagonal scaling factors that turn
the incircle family into the confocal one and the circumcircle family into
the excentral one, the confocal r/R ratio, and the semi-axes of the elliptic
locus swept by the excenters of confocal 3-periodics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Ellipse",
    "ConicPair",
    "cayley_residual",
    "derived_radii",
    "incircle_circumradius",
    "confocal_scale",
    "excentral_scale",
    "r_over_R_confocal",
    "excentral_locus_axes",
]


@dataclass(frozen=True)
class Ellipse:
    """Origin-centered, axis-aligned ellipse with semi-axes a (x) and b (y)."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"semi-axes must be positive, got ({self.a}, {self.b})")

    @property
    def c_sq(self) -> float:
        """a^2 - b^2; negative when the foci sit on the y-axis."""
        return self.a * self.a - self.b * self.b

    def point_residual(self, x: float, y: float) -> float:
        """Implicit-form incidence residual (x/a)^2 + (y/b)^2 - 1."""
        return (x / self.a) ** 2 + (y / self.b) ** 2 - 1.0


@dataclass(frozen=True)
class ConicPair:
    """Outer ellipse plus a strictly interior concentric caustic."""

    outer: Ellipse
    caustic: Ellipse

    def __post_init__(self):
        if not (self.caustic.a < self.outer.a and self.caustic.b < self.outer.b):
            raise ValueError(
                "caustic must be strictly inside the outer ellipse: "
                f"({self.caustic.a}, {self.caustic.b}) vs ({self.outer.a}, {self.outer.b})"
            )


def cayley_residual(pair: ConicPair) -> float:
    """a_c/a + b_c/b - 1; vanishes exactly when the concentric pair admits a
    one-parameter family of interscribed triangles."""
    return pair.caustic.a / pair.outer.a + pair.caustic.b / pair.outer.b - 1.0


def derived_radii(a: float, b: float) -> tuple[float, float]:
    """(r, R) for outer semi-axes a, b: r = ab/(a+b) is the radius of the
    concentric incircle admitting a triangle family, R = a+b the radius of
    the concentric circumcircle when (a, b) is instead the caustic."""
    _check_axes(a, b)
    return a * b / (a + b), a + b


def incircle_circumradius(a: float, b: float) -> float:
    """Circumradius (a+b)/2 conserved by the incircle family itself."""
    _check_axes(a, b)
    return 0.5 * (a + b)


def confocal_scale(a: float, b: float) -> float:
    """Scaling factor s such that diag(s, 1) maps the incircle pair with
    outer (a, b) onto a confocal pair.  s(a,b) * s(b,a) = 1."""
    _check_axes(a, b)
    return math.sqrt((b**4 + 2.0 * a * b**3) / (a**4 + 2.0 * b * a**3))


def excentral_scale(a: float, b: float) -> float:
    """Scaling factor s' such that diag(s', 1) maps the circumcircle family
    with caustic (a, b) onto the excentral family.  s'(a,b) * s'(b,a) = 1."""
    _check_axes(a, b)
    return math.sqrt((2.0 * b * b + a * b) / (2.0 * a * a + a * b))


def _delta(alpha: float, beta: float) -> float:
    """sqrt(alpha^4 - alpha^2 beta^2 + beta^4), computed from the sorted
    squares so that it is bitwise symmetric in alpha <-> beta."""
    p = alpha * alpha
    q = beta * beta
    if p < q:
        p, q = q, p
    return math.sqrt(p * p - p * q + q * q)


def r_over_R_confocal(alpha: float, beta: float) -> float:
    """Inradius-to-circumradius ratio conserved by confocal 3-periodics with
    outer semi-axes (alpha, beta).

    The textbook form 2(delta - beta^2)(alpha^2 - delta)/(alpha^2 - beta^2)^2
    is 0/0 at alpha = beta and loses half its digits nearby; multiplying
    numerator factors by their conjugates cancels (alpha^2 - beta^2)^2
    exactly and leaves the equivalent

        2 alpha^2 beta^2 / ((delta + alpha^2)(delta + beta^2)),

    which is finite, symmetric, and gives the circle limit 1/2 for free.
    """
    _check_axes(alpha, beta)
    d = _delta(alpha, beta)
    p = alpha * alpha
    q = beta * beta
    return 2.0 * p * q / ((d + p) * (d + q))


def excentral_locus_axes(alpha: float, beta: float) -> tuple[float, float]:
    """Semi-axes (a_e, b_e) of the ellipse swept by the excenters of the
    confocal 3-periodic family with outer semi-axes (alpha, beta)."""
    _check_axes(alpha, beta)
    d = _delta(alpha, beta)
    return (beta * beta + d) / alpha, (alpha * alpha + d) / beta


def _check_axes(a: float, b: float) -> None:
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"semi-axes must be positive, got ({a}, {b})")
