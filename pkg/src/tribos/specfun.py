"""Special functions used throughout the package.

Provides the Macdonald function K0 (modified Bessel function of the second
kind, order zero) and numerically stable hyperbolic ratios needed by the
symbol evaluations.  All functions are scalar, pure and reentrant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EULER_GAMMA = 0.57721566490153286061

# Chebyshev coefficients of sqrt(x) * exp(x) * K0(x) against t = 4/x - 1,
# valid for x >= 2.  Generated by interpolation at 40 Chebyshev nodes in
# 50-digit arithmetic and truncated at the 1e-17 coefficient level; the
# resulting double-precision branch is accurate to ~3e-16 relative.
_K0_CHEB = (
    2.440303082065955454677,
    -0.03144810131196450054272,
    0.001569883885730053374913,
    -0.0001284954958162780263836,
    1.394981371887649936408e-05,
    -1.831755522719119484778e-06,
    2.76681363944501507614e-07,
    -4.660489897687947665561e-08,
    8.574034017414226085822e-09,
    -1.697534509389061515644e-09,
    3.577397281400328447163e-10,
    -7.957489244477397037735e-11,
    1.855949114954926554973e-11,
    -4.514597883374519175066e-12,
    1.140340588207344234725e-12,
    -2.980096923148178354833e-13,
    8.032890775068374369408e-14,
    -2.227513326746296360363e-14,
    6.340076476276645964234e-15,
    -1.848593377920907165124e-15,
    5.512055999404333267621e-16,
    -1.678231125754900416616e-16,
    5.210391777643549034961e-17,
    -1.647580593984251595611e-17,
)


@dataclass(frozen=True)
class Accuracy:
    """Absolute/relative tolerance pair carried by verification routines."""

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be strictly positive")


def _k0_series(x: float) -> float:
    # K0(x) = -(log(x/2) + gamma) I0(x) + sum_k H_k (x^2/4)^k / (k!)^2,
    # summed to machine precision (converges in < 20 terms for x <= 2).
    q = 0.25 * x * x
    term = 1.0
    i0 = 1.0
    acc = 0.0
    hk = 0.0
    for k in range(1, 40):
        term *= q / (k * k)
        hk += 1.0 / k
        i0 += term
        acc += term * hk
        if term * max(1.0, hk) < 1e-18 * (i0 + abs(acc)):
            break
    return -(math.log(0.5 * x) + EULER_GAMMA) * i0 + acc


def _k0_cheb(x: float) -> float:
    # Clenshaw recurrence for sqrt(x) e^x K0(x) at t = 4/x - 1.
    t = 4.0 / x - 1.0
    b0 = 0.0
    b1 = 0.0
    for c in reversed(_K0_CHEB[1:]):
        b0, b1 = 2.0 * t * b0 - b1 + c, b0
    f = t * b0 - b1 + 0.5 * _K0_CHEB[0]
    return math.exp(-x) * f / math.sqrt(x)


def k0(x: float) -> float:
    """Macdonald function K0(x) for x > 0.

    Power series with log term for x <= 2, Chebyshev expansion of the
    exponentially scaled function for x > 2.  Relative error is below
    1e-10 on [1e-6, 700]; for x large enough that exp(-x) underflows the
    result is 0.0.
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"k0 requires x > 0, got {x!r}")
    if x <= 2.0:
        return _k0_series(x)
    return _k0_cheb(x)


def tanh_over_s(s: float) -> float:
    """tanh(pi s / 2) / s, extended by the limit pi/2 at s = 0.  Even in s."""
    a = abs(float(s))
    if a < 1e-6:
        u = 0.5 * math.pi * a
        return 0.5 * math.pi * (1.0 - u * u / 3.0)
    return math.tanh(0.5 * math.pi * a) / a


def sinh_ratio(s: float) -> float:
    """sinh(pi s / 6) / (s cosh(pi s / 2)), extended by pi/6 at s = 0.

    Evaluated in exponential-difference form so that there is no overflow
    for |s| up to 1e4 and beyond.  Even in s.
    """
    a = abs(float(s))
    if a < 1e-6:
        return (math.pi / 6.0) * (1.0 - (13.0 * math.pi * math.pi / 108.0) * a * a)
    # sinh(pi a/6)/cosh(pi a/2) = e^{-pi a/3} (1 - e^{-pi a/3}) / (1 + e^{-pi a})
    x = math.pi * a / 3.0
    return math.exp(-x) * (-math.expm1(-x)) / (a * (1.0 + math.exp(-3.0 * x)))
