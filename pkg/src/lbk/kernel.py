"""Closed-form and series evaluation of the angular integral family.

The central object is the integral of sin(theta) * exp(i R cos(alpha)
cos(theta)) * P_n^m(cos(theta)) * J_m(R sin(alpha) sin(theta)) over theta in
[0, pi], which collapses to 2 i^{n-m} P_n^m(cos(alpha)) j_n(R).  This module
holds that closed form, its R-derivative, the on-axis (Lock) integral, the
exponential-weight moment closed form, and the argument-rescaling series
partial sums used to connect the n = m = 0 case back to 2 j_0(R).

All phases are exact quarter-turn lookups; no trigonometric rounding enters
the unit factor i^k.
"""

import math
from dataclasses import dataclass

from .specfun import (
    assoc_legendre,
    factorial_ratio,
    spherical_bessel_j,
    spherical_bessel_j_prime,
    spherical_bessel_ratio,
)

# Partial sums accept at most this many terms; coefficients are built by
# term ratios so no factorial is ever formed.
SERIES_S_MAX = 200

# 2^{s+1} s! overflows double precision shortly above this.
MOMENT_S_CAP = 150

_I_POWERS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


@dataclass(frozen=True)
class IntegralParams:
    """Parameters (n, m, alpha, R) of the integral family.

    n is the Legendre degree (>= 0), m the order (|m| <= n), alpha the
    polar tilt in radians ([0, pi]) and R the dimensionless radius (>= 0).
    """

    n: int
    m: int
    alpha: float
    R: float

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"degree must be non-negative (got n={self.n})")
        if abs(self.m) > self.n:
            raise ValueError(
                f"order must satisfy |m| <= n (got n={self.n}, m={self.m})")
        if not 0.0 <= self.alpha <= math.pi:
            raise ValueError(f"alpha must lie in [0, pi] (got {self.alpha})")
        if not self.R >= 0.0:
            raise ValueError(f"R must be non-negative (got {self.R})")


def i_phase(k):
    """i**k for any integer k, by exact mod-4 lookup."""
    return _I_POWERS[k % 4]


def closed_form_I(p):
    """Closed form 2 i^{n-m} P_n^m(cos alpha) j_n(R) of the main integral."""
    return (2.0 * i_phase(p.n - p.m)
            * assoc_legendre(p.n, p.m, math.cos(p.alpha))
            * spherical_bessel_j(p.n, p.R))


def closed_form_dI_dR(p):
    """R-derivative of the closed form: 2 i^{n-m} P_n^m(cos alpha) j_n'(R)."""
    return (2.0 * i_phase(p.n - p.m)
            * assoc_legendre(p.n, p.m, math.cos(p.alpha))
            * spherical_bessel_j_prime(p.n, p.R))


def lock_closed_form(n, m, R, sign):
    """On-axis integral closed form 2 (sign*i)^{n+|m|} (n+|m|)!/(n-|m|)! j_n(R)/R^{|m|}.

    Finite at R = 0 through the j_n/R^p limit.  ``sign`` selects the phase
    of the exponential in the matching integral and must be +1 or -1.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1 (got {sign})")
    if n < 0 or abs(m) > n:
        raise ValueError(f"require 0 <= |m| <= n (got n={n}, m={m})")
    if not R >= 0.0:
        raise ValueError(f"R must be non-negative (got {R})")
    am = abs(m)
    return (2.0 * i_phase(sign * (n + am))
            * factorial_ratio(n, am)
            * spherical_bessel_ratio(n, am, R))


def poisson_closed_form(s, x):
    """Exponential moment closed form 2^{s+1} s! j_s(x) / x^s.

    Matches the integral of sin(theta) exp(i x cos(theta)) sin^{2s}(theta);
    finite at x = 0 where it equals 2^{s+1} s!/(2s+1)!!.  Capped at
    s <= ``MOMENT_S_CAP``; the prefactor overflows beyond that.
    """
    if s < 0:
        raise ValueError(f"moment index must be non-negative (got s={s})")
    if s > MOMENT_S_CAP:
        raise OverflowError(f"moment index above cap {MOMENT_S_CAP} (got s={s})")
    if not x >= 0.0:
        raise ValueError(f"argument must be non-negative (got {x})")
    return 2.0 ** (s + 1) * float(math.factorial(s)) * spherical_bessel_ratio(s, s, x)


def _check_series_args(R, alpha, S):
    if not R >= 0.0:
        raise ValueError(f"R must be non-negative (got {R})")
    if not 0.0 <= alpha < math.pi / 2.0:
        raise ValueError(
            f"alpha must lie in [0, pi/2); the series coefficient is "
            f"undefined where cos(alpha) = 0 (got {alpha})")
    if not 0 <= S <= SERIES_S_MAX:
        raise ValueError(f"require 0 <= S <= {SERIES_S_MAX} (got S={S})")


def mult_theorem_partial(R, alpha, S=40):
    """Partial sum of the argument-rescaling series for j_0(R).

    Sums s = 0..S of (-1)^s / 2^s * sin^{2s}(alpha) / (s! cos^s(alpha)) *
    R^s * j_s(R cos(alpha)).  Converges to j_0(R) wherever the rescaling
    factor 1/cos(alpha) keeps |1 - 1/cos^2(alpha)| < 1 (cos^2(alpha) > 1/2).
    """
    _check_series_args(R, alpha, S)
    ca = math.cos(alpha)
    sa = math.sin(alpha)
    z = R * ca
    coef = 1.0
    total = spherical_bessel_j(0, z)
    for s in range(1, S + 1):
        coef *= -0.5 * sa * sa * R / (s * ca)
        total += coef * spherical_bessel_j(s, z)
    return total


def i00_series_partial(R, alpha, S=40):
    """Partial sum of the n = m = 0 integral's series, 2x the j_0 series.

    Term by term this is exactly twice ``mult_theorem_partial``; the series
    is real, so the imaginary part is identically zero.  Converges to
    2 j_0(R) on the same domain.
    """
    return complex(2.0 * mult_theorem_partial(R, alpha, S), 0.0)
