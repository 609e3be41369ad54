"""Jacobi elliptic kernel: complete integral K and the sn/cn/dn triple.

Everything downstream that touches N-periodic billiard polygons runs through
these two functions.  The parameter is the *squared* modulus m_sq = m**2,
matching the caustic-derived quantity m^2 = (a_c^2 - b_c^2)/a_c^2 that the
polygon constructor feeds in; this also happens to agree with the `m`
convention of scipy.special.ellipj, which the test suite uses as one of the
cross-check oracles.

K(m_sq) is computed by the arithmetic-geometric mean, sn/cn/dn by a
descending Landen recursion seeded from the AGM sequence (the classical
backward pass that updates dn first, which is stable for all 0 <= m_sq < 1).
The per-modulus AGM state is cached, so sweeping u at fixed m_sq costs only
the short backward recursion per call.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "EllipticDomainError",
    "complete_K",
    "jacobi_sn_cn_dn",
]

# AGM convergence: relative gap below this terminates the iteration
_AGM_TOL = 1e-16
# hard cap on the Landen ladder depth; AGM converges quadratically so ~10
# levels suffice even at m_sq = 0.999999, the cap is pure paranoia
_MAX_LEVELS = 32


class EllipticDomainError(ValueError):
    """Modulus outside [0, 1): the caustic degenerates to a segment (m_sq
    -> 1) or the parameters are not a valid concentric pair (m_sq < 0)."""


def _check_m_sq(m_sq: float) -> float:
    m_sq = float(m_sq)
    if math.isnan(m_sq) or m_sq < 0.0:
        raise EllipticDomainError(f"m_sq must satisfy 0 <= m_sq < 1, got {m_sq}")
    if m_sq >= 1.0:
        raise EllipticDomainError(
            f"m_sq = {m_sq} >= 1: caustic degenerates to a segment, K diverges"
        )
    return m_sq


@lru_cache(maxsize=512)
def _landen_state(m_sq: float):
    """AGM ladder for the squared modulus: (scales a_i, co-moduli c_i, final
    scale, K).  Pure function of m_sq; cached because family sweeps evaluate
    thousands of u values at a fixed caustic."""
    emc = 1.0 - m_sq
    a = 1.0
    em = []
    en = []
    c = a
    for _ in range(_MAX_LEVELS):
        em.append(a)
        emc = math.sqrt(emc)
        en.append(emc)
        c = 0.5 * (a + emc)
        if abs(a - emc) <= _AGM_TOL * a:
            break
        emc = a * emc
        a = c
    K = math.pi / (2.0 * c)
    return tuple(em), tuple(en), c, K


def complete_K(m_sq: float) -> float:
    """Complete elliptic integral of the first kind, K(m), for m_sq = m**2.

    AGM iteration: K = pi / (2 * agm(1, sqrt(1 - m_sq))), accurate to
    ~1e-15 relative over the whole admissible range.  Strictly increasing
    in m_sq, K(0) = pi/2.
    """
    m_sq = _check_m_sq(m_sq)
    return _landen_state(m_sq)[3]


def jacobi_sn_cn_dn(u: float, m_sq: float) -> tuple[float, float, float]:
    """Jacobi elliptic sn(u|m), cn(u|m), dn(u|m) for real u, 0 <= m_sq < 1.

    u is first reduced modulo the full period 4K to keep the trigonometric
    seed of the backward recursion well conditioned for large arguments.
    Satisfies sn^2 + cn^2 = 1 and dn^2 + m_sq*sn^2 = 1 to ~1e-15.
    """
    m_sq = _check_m_sq(m_sq)
    u = float(u)
    if m_sq == 0.0:
        return math.sin(u), math.cos(u), 1.0
    em, en, c, K = _landen_state(m_sq)
    period = 4.0 * K
    u = u - period * round(u / period)
    # fold to [-K, K] via the half-period identities (sn and cn negate, dn
    # is 2K-periodic) so the recursion seed sin(c*u) only degenerates when
    # u itself is small, where the series below takes over
    flip = 1.0
    if u > K:
        u -= 2.0 * K
        flip = -1.0
    elif u < -K:
        u += 2.0 * K
        flip = -1.0
    if abs(u) < 1e-6:
        # Maclaurin truncations, error O(u^5) < 1e-30 here; the Landen seed
        # cn/sn ~ 1/u would overflow long before this branch loses accuracy
        u_sq = u * u
        sn = u * (1.0 - (1.0 + m_sq) * u_sq / 6.0)
        cn = 1.0 - 0.5 * u_sq
        dn = 1.0 - 0.5 * m_sq * u_sq
        return flip * sn, flip * cn, dn
    phi = c * u
    sn = math.sin(phi)
    cn = math.cos(phi)
    dn = 1.0
    a = cn / sn
    c = a * c
    for i in range(len(em) - 1, -1, -1):
        b = em[i]
        a = c * a
        c = c * dn
        dn = (en[i] + a) / (b + a)
        a = c / b
    a = 1.0 / math.sqrt(c * c + 1.0)
    sn = a if sn >= 0.0 else -a
    cn = c * sn
    return flip * sn, flip * cn, dn
