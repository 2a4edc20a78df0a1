"""Tail probabilities of the chi-square and standard normal distributions."""
from __future__ import annotations

import math
from typing import Final

MACHEP: Final[float] = 1.11022302462515654042e-16  # 2**-53
MAXLOG: Final[float] = 7.09782712893383996843e2  # log(2**1024)
BIG: Final[float] = 4.503599627370496e15
BIGINV: Final[float] = 2.22044604925031308085e-16
MAX_ITERATIONS: Final[int] = 10_000


def _prefactor(a: float, x: float) -> float:
    """Return x**a * exp(-x) / Gamma(a), 0.0 on underflow."""
    ax = a * math.log(x) - x - math.lgamma(a)
    if ax < -MAXLOG:
        return 0.0
    return math.exp(ax)


def lower_regularized_gamma(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x)."""
    if x <= 0 or a <= 0:
        return 0.0
    if x > 1 and x > a:
        return 1.0 - upper_regularized_gamma(a, x)

    ax = _prefactor(a, x)
    if ax == 0.0:
        return 0.0

    # power series
    r = a
    c = 1.0
    ans = 1.0
    for _ in range(MAX_ITERATIONS):
        r += 1
        c *= x / r
        ans += c
        if c / ans <= MACHEP:
            break
    return ans * ax / a


def upper_regularized_gamma(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x)."""
    if x <= 0 or a <= 0:
        return 1.0
    if x < 1 or x < a:
        return 1.0 - lower_regularized_gamma(a, x)

    ax = _prefactor(a, x)
    if ax == 0.0:
        return 0.0

    # continued fraction
    y = 1 - a
    z = x + y + 1
    c = 0.0
    pkm2 = 1.0
    qkm2 = x
    pkm1 = x + 1
    qkm1 = z * x
    ans = pkm1 / qkm1
    for _ in range(MAX_ITERATIONS):
        c += 1
        y += 1
        z += 2
        yc = y * c
        pk = pkm1 * z - pkm2 * yc
        qk = qkm1 * z - qkm2 * yc
        if qk != 0:
            r = pk / qk
            t = abs((ans - r) / r)
            ans = r
        else:
            t = 1.0
        pkm2, pkm1 = pkm1, pk
        qkm2, qkm1 = qkm1, qk
        if abs(pk) > BIG:
            pkm2 *= BIGINV
            pkm1 *= BIGINV
            qkm2 *= BIGINV
            qkm1 *= BIGINV
        if t <= MACHEP:
            break
    return ans * ax


def chi2_sf(statistic: float, dof: int) -> float:
    """Upper tail probability of the chi-square distribution."""
    if dof < 1:
        raise ValueError(f"degrees of freedom must be positive, got {dof}")
    if statistic <= 0:
        return 1.0
    return min(1.0, max(0.0, upper_regularized_gamma(dof / 2.0, statistic / 2.0)))


def normal_two_tailed(z: float) -> float:
    """Two-tailed standard normal probability 2 * (1 - Phi(|z|))."""
    return math.erfc(abs(z) / math.sqrt(2.0))
